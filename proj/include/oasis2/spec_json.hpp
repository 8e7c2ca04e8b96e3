#pragma once

#include <string_view>

#include "oasis2/spec.hpp"

namespace oasis2 {

// JSON spec document format accepted by the CLI and the Python bindings:
//
// {
//   "agent": "<iri>",
//   "behaviours": [
//     { "id": "<iri>",
//       "goals": [
//         { "id": "<iri>",
//           "depends_on": ["<goal iri>", ...],          // optional
//           "tasks": [
//             { "id": "<iri>",
//               "operator": <ref>,
//               "argument": <ref>,                      // optional
//               "object": <ref>,                        // optional
//               "inputs": [<ref>, ...],                 // optional
//               "outputs": [<ref>, ...],                // optional
//               "depends_on": ["<task iri>", ...] } ]}]}]
// }
//
// where <ref> is either {"exactly": "<iri>"} or
// {"as_new": "<iri>", "classes": ["<iri>", ...]}.
//
// Throws SpecError on malformed documents.
BehaviourSpec spec_from_json(std::string_view text);

std::string spec_to_json(const BehaviourSpec& spec);

}  // namespace oasis2
