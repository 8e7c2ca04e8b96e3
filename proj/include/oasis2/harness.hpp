#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oasis2/graph.hpp"
#include "oasis2/turtle.hpp"

namespace oasis2 {

enum class TaskStateKind { Submitted, Matched, Entrusted, Executed, Failed };

struct TaskState {
    TaskStateKind kind = TaskStateKind::Submitted;
    std::string reason;  // Failed only

    static TaskState failed(std::string why) { return {TaskStateKind::Failed, std::move(why)}; }
    auto operator<=>(const TaskState&) const = default;
};

std::string to_string(const TaskState& s);

struct LifecycleEvent {
    uint64_t tick = 0;
    Iri task;
    std::optional<TaskState> from;  // absent on the first transition
    TaskState to;
    std::string cause;  // "msg:<seq>" or "internal"
};

// "tick<TAB>task<TAB>from<TAB>to<TAB>cause" lines; '-' for the absent from.
std::string format_event_log(const std::vector<LifecycleEvent>& events);

struct Message {
    enum class Kind { PlanSubmission, EntrustmentNotice, ExecutionReport };
    Kind kind = Kind::PlanSubmission;
    Iri sender;
    Iri receiver;
    std::string fragment;  // canonical Turtle, self-contained
    uint64_t seq = 0;
};

struct PerformerDef {
    Iri agent;
    Graph knowledge;              // behaviours plus the domain individuals it can bind
    std::map<Iri, Iri> bindings;  // refersAsNewTo entity -> concrete individual
};

struct World {
    Iri requester;
    Iri entruster;
    std::vector<PerformerDef> performers;
};

struct ScenarioResult {
    Graph final_graph;
    std::vector<LifecycleEvent> events;
    std::vector<Message> messages;                    // every message delivered, in order
    std::map<Iri, Graph> entrustments;                // plan root -> entrustment graph
    std::map<Iri, Graph> linked;                      // plan root -> fully linked graph
    std::map<Iri, TaskState> task_states;             // plan task -> terminal state
};

// Deterministic single-queue simulation of the requester/entruster/performer
// lifecycle. Pure function of (world, plans, seed); seed is reserved for
// pluggable selection policies, the default picks the lexicographically
// first candidate.
ScenarioResult run_scenario(const World& world, const std::vector<Graph>& plans, uint64_t seed,
                            const SerializeOptions& wire_opts = {});

struct ProvenanceChain {
    Iri execution_task;
    Iri behaviour_task;                // via taskExecutionDrawnBy
    std::optional<Iri> template_task;  // via overloadsTaskDescription
    std::optional<Iri> plan_task;      // inverse hasTaskExecution
    std::optional<Iri> entrustment_task;  // inverse taskEntrustedBy
    std::optional<Iri> performer;      // via entrusts
};

ProvenanceChain trace(const Graph& g, const Iri& execution_task);

}  // namespace oasis2
