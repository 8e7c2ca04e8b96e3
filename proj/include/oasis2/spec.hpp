#pragma once

#include <optional>
#include <set>
#include <vector>

#include "oasis2/iri.hpp"

namespace oasis2 {

// Reference mode of a mental-state element: either a precise named
// individual, or a fresh templated entity constrained to given classes.
struct RefSpec {
    enum class Mode { Exactly, AsNew };
    Mode mode = Mode::Exactly;
    Iri target;                      // individual (Exactly) or template entity (AsNew)
    std::set<Iri> required_classes;  // AsNew only

    static RefSpec exactly(Iri target) { return {Mode::Exactly, std::move(target), {}}; }
    static RefSpec as_new(Iri entity, std::set<Iri> classes = {}) {
        return {Mode::AsNew, std::move(entity), std::move(classes)};
    }
};

struct TaskSpec {
    Iri task_id;
    RefSpec operator_ref;
    std::optional<RefSpec> operator_argument;
    std::optional<RefSpec> object_ref;
    std::vector<RefSpec> inputs;
    std::vector<RefSpec> outputs;
    std::set<Iri> depends_on;  // other task ids within the same behaviour
};

struct GoalSpec {
    Iri goal_id;
    std::set<Iri> depends_on;  // other goal ids within the same behaviour
    std::vector<TaskSpec> tasks;
};

struct BehaviourUnitSpec {
    Iri behaviour_id;
    std::vector<GoalSpec> goals;
};

struct BehaviourSpec {
    Iri agent;
    std::vector<BehaviourUnitSpec> behaviours;
};

// Minted element ids: each task's operator, argument, object and parameters
// are named after the task ("<task>_operator", "<task>_argument",
// "<task>_object", "<task>_input<i>", "<task>_output<i>"). Deterministic for
// a given spec, so two structurally equal specs yield alignable graphs.
Iri minted_operator(const Iri& task_id);
Iri minted_argument(const Iri& task_id);
Iri minted_object(const Iri& task_id);
Iri minted_input(const Iri& task_id, size_t index);   // 1-based in the name
Iri minted_output(const Iri& task_id, size_t index);

}  // namespace oasis2
