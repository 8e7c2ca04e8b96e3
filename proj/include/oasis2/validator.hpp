#pragma once

#include <string>
#include <vector>

#include "oasis2/graph.hpp"

namespace oasis2 {

struct Violation {
    std::string rule;           // "V1" .. "V8", stable across releases
    std::vector<Iri> subjects;  // offending nodes
    std::string message;

    auto operator<=>(const Violation&) const = default;
};

// Structural conformance check. Total and non-failing: malformed graphs
// yield violations, never exceptions. Empty result iff conformant.
// Rules:
//   V1 layer purity          V5 dependsOn acyclicity
//   V2 skeleton              V6 drawnBy commutation
//   V3 reference discipline  V7 submission/entrustment commutation
//   V4 overloads commutation V8 binding soundness
std::vector<Violation> validate(const Graph& g);

// "RULE<TAB>subject(s)<TAB>message" lines.
std::string format_report(const std::vector<Violation>& violations);

}  // namespace oasis2
