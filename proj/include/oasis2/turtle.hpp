#pragma once

#include <map>
#include <string>
#include <string_view>

#include "oasis2/graph.hpp"

namespace oasis2 {

struct SerializeOptions {
    std::string oasis_ns = std::string(kDefaultNamespace);
    // namespace -> preferred prefix; unmapped namespaces get ns0, ns1, ...
    std::map<std::string, std::string> prefix_hints;
};

// Canonical Turtle subset: prefixes and subjects sorted lexicographically,
// rdf:type rendered as "a", ";" grouping per subject, "\n" line endings.
// serialize(parse(serialize(g))) is byte-identical to serialize(g).
std::string serialize(const Graph& g, const SerializeOptions& opts = {});

Graph parse(std::string_view text, std::string_view oasis_ns = kDefaultNamespace);

}  // namespace oasis2
