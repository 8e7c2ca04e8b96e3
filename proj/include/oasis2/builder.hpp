#pragma once

#include <map>
#include <optional>

#include "oasis2/graph.hpp"
#include "oasis2/spec.hpp"

namespace oasis2 {

// Structural view of one layer of a graph, recovered edge-wise. Deterministic
// (everything sorted by Iri). Used by the matcher, the builders and tooling;
// assumes the graph passes the skeleton rules for that layer.
struct TaskView {
    Iri task;
    Iri op;
    std::optional<Iri> argument;
    std::optional<Iri> object;
    std::vector<Iri> inputs;
    std::vector<Iri> outputs;
};
struct GoalView {
    Iri goal;
    std::vector<TaskView> tasks;
};
struct BehaviourView {
    Iri behaviour;
    std::optional<Iri> agent;  // owner via hasBehaviour / requestsPlan / performsPlanExecution
    std::vector<GoalView> goals;
};

std::vector<BehaviourView> view_layer(const Graph& g, LayerTag layer);
std::optional<TaskView> view_task(const Graph& g, const Iri& task);

// concrete element -> counterpart element, over behaviour/goal/task/object/
// operator/input/output (operator arguments are implied by their operator).
using ElementMap = std::map<Iri, Iri>;

// Pairs the elements of two structurally identical specs position by
// position; used to derive overload and submission maps. Throws SpecError if
// the shapes differ.
ElementMap derive_element_map(const BehaviourSpec& from, const BehaviourSpec& to);

Graph build_template(const BehaviourSpec& spec);

struct TemplateLink {
    Graph graph;          // the template layer
    ElementMap overloads; // concrete element -> template element
};
Graph build_behaviour(const BehaviourSpec& spec,
                      const std::optional<TemplateLink>& tmpl = std::nullopt);

struct SubmissionLink {
    Graph graph;            // the performer behaviour layer
    ElementMap submissions; // plan element -> behaviour element
};
Graph build_plan(const BehaviourSpec& spec, const Iri& requester,
                 const std::optional<SubmissionLink>& target = std::nullopt);

// plan task -> performer behaviour task, plus the plan graph it came from.
struct PlanLink {
    Graph plan;
    std::map<Iri, Iri> task_assignment;
};

// Mirrors the performer's behaviours into the Execution layer, replacing
// refersAsNewTo references by refersExactlyTo to the bound individuals. When
// a plan link is given, only the assigned behaviours are mirrored and the
// plan is connected through the hasExecution subproperties.
Graph record_execution(const Graph& behaviour_graph, const Iri& performer,
                       const std::map<Iri, Iri>& bindings,
                       const std::optional<PlanLink>& plan = std::nullopt);

Graph build_entrustment(const Graph& plan, const Graph& performer_kb,
                        const std::map<Iri, Iri>& per_task_assignment);

Graph link_entrustment_execution(const Graph& entrustment, const Graph& execution,
                                 const Iri& performer);

}  // namespace oasis2
