#pragma once

#include <string>

#include "oasis2/graph.hpp"

namespace oasis2 {

// Deterministic Graphviz rendering: nodes labeled by local name with their
// classes and layer tag, property edges labeled by property name,
// rdfs:subClassOf edges dashed. Layout is left to Graphviz.
std::string to_dot(const Graph& g);

}  // namespace oasis2
