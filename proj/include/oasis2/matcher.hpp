#pragma once

#include <map>
#include <optional>
#include <vector>

#include "oasis2/graph.hpp"

namespace oasis2 {

// Resolved reference of a mental-state element.
struct ElementRef {
    bool exactly = true;
    Iri target;                // individual (exactly) or template entity
    std::vector<Iri> classes;  // refersAsInstanceOf constraints, sorted
};

// Throws MalformedTask when the element breaks reference discipline
// (no reference, or both refersExactlyTo and refersAsNewTo).
ElementRef element_ref(const Graph& g, const Iri& element);

bool element_compatible(const ElementRef& plan_ref, const ElementRef& behaviour_ref,
                        const Graph& g);

// Perfect matching on the bipartite element-compatibility graph, by
// augmenting paths. Unequal arity or no perfect matching -> nullopt.
std::optional<std::map<Iri, Iri>> pair_parameters(const std::vector<Iri>& plan_params,
                                                  const std::vector<Iri>& behaviour_params,
                                                  const Graph& g);

// Pairing of plan elements to behaviour elements when the tasks are
// compatible, nullopt otherwise.
std::optional<std::map<Iri, Iri>> compatible(const Iri& plan_task, const Iri& behaviour_task,
                                             const Graph& g);

struct Candidate {
    Iri agent;
    Iri behaviour;
    Iri goal;
    Iri task;
    std::map<Iri, Iri> parameter_pairing;

    auto operator<=>(const Candidate&) const = default;
};

struct CandidateAssignment {
    Iri plan;  // plan root (Behaviour-class node of the Planning layer)
    std::map<Iri, std::vector<Candidate>> choices;  // plan task -> sorted candidates
};

CandidateAssignment discover(const Graph& plan, const Graph& kb);

}  // namespace oasis2
