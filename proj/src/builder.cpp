#include "oasis2/builder.hpp"

#include <algorithm>
#include <functional>

#include "oasis2/matcher.hpp"

namespace oasis2 {

namespace {

// ------------------------------------------------------------- spec checking

void check_depends_acyclic(const std::map<Iri, std::set<Iri>>& deps, const char* what) {
    std::map<Iri, int> state;  // 0 unseen, 1 on stack, 2 done
    std::function<void(const Iri&)> visit = [&](const Iri& n) {
        state[n] = 1;
        auto it = deps.find(n);
        if (it != deps.end()) {
            for (const auto& d : it->second) {
                if (state[d] == 1)
                    throw SpecError(std::string("dependsOn cycle among ") + what + " at " + d.value);
                if (state[d] == 0) visit(d);
            }
        }
        state[n] = 2;
    };
    for (const auto& [n, _] : deps)
        if (state[n] == 0) visit(n);
}

void validate_spec(const BehaviourSpec& spec) {
    if (!spec.agent.absolute()) throw SpecError("agent id is not an absolute IRI");
    if (spec.behaviours.empty()) throw SpecError("spec has no behaviours");
    std::set<Iri> ids{spec.agent};
    auto claim = [&](const Iri& id) {
        if (!id.absolute()) throw SpecError("not an absolute IRI: '" + id.value + "'");
        if (!ids.insert(id).second) throw SpecError("duplicate id in spec: " + id.value);
    };
    for (const auto& b : spec.behaviours) {
        claim(b.behaviour_id);
        if (b.goals.empty()) throw SpecError("behaviour has no goals: " + b.behaviour_id.value);
        std::map<Iri, std::set<Iri>> goal_deps;
        std::map<Iri, std::set<Iri>> task_deps;
        std::set<Iri> goal_ids;
        std::set<Iri> task_ids;
        for (const auto& goal : b.goals) {
            claim(goal.goal_id);
            goal_ids.insert(goal.goal_id);
            goal_deps[goal.goal_id] = goal.depends_on;
            if (goal.tasks.empty()) throw SpecError("goal has no tasks: " + goal.goal_id.value);
            for (const auto& task : goal.tasks) {
                claim(task.task_id);
                task_ids.insert(task.task_id);
                task_deps[task.task_id] = task.depends_on;
                claim(minted_operator(task.task_id));
                if (task.operator_argument) claim(minted_argument(task.task_id));
                if (task.object_ref) claim(minted_object(task.task_id));
                for (size_t i = 0; i < task.inputs.size(); ++i) claim(minted_input(task.task_id, i));
                for (size_t i = 0; i < task.outputs.size(); ++i) claim(minted_output(task.task_id, i));
            }
        }
        for (const auto& [gid, deps] : goal_deps)
            for (const auto& d : deps)
                if (!goal_ids.count(d))
                    throw SpecError("goal dependsOn unknown goal: " + d.value);
        for (const auto& [tid, deps] : task_deps)
            for (const auto& d : deps)
                if (!task_ids.count(d))
                    throw SpecError("task dependsOn unknown task: " + d.value);
        check_depends_acyclic(goal_deps, "goals");
        check_depends_acyclic(task_deps, "tasks");
    }
    // Reference targets must not collide with structural ids.
    for (const auto& b : spec.behaviours)
        for (const auto& goal : b.goals)
            for (const auto& task : goal.tasks) {
                std::vector<const RefSpec*> refs{&task.operator_ref};
                if (task.operator_argument) refs.push_back(&*task.operator_argument);
                if (task.object_ref) refs.push_back(&*task.object_ref);
                for (const auto& r : task.inputs) refs.push_back(&r);
                for (const auto& r : task.outputs) refs.push_back(&r);
                for (const RefSpec* r : refs) {
                    if (ids.count(r->target))
                        throw SpecError("reference target collides with a structural id: " +
                                        r->target.value);
                    for (const auto& c : r->required_classes)
                        if (ids.count(c))
                            throw SpecError("required class collides with a structural id: " +
                                            c.value);
                }
            }
}

// --------------------------------------------------------- structure builder

void apply_ref(Graph& g, const Iri& element, const RefSpec& ref, bool target_is_action) {
    std::set<ElementClass> target_classes;
    if (target_is_action) target_classes.insert(CoreClass::Action);
    g.add_entity(ref.target, target_classes);
    if (ref.mode == RefSpec::Mode::Exactly) {
        g.add_triple(element, Property::RefersExactlyTo, ref.target);
    } else {
        g.add_triple(element, Property::RefersAsNewTo, ref.target);
        for (const auto& c : ref.required_classes) {
            g.add_entity(c);
            g.add_triple(ref.target, Property::RefersAsInstanceOf, c);
        }
    }
}

// Builds the common agent/behaviour/goal/task skeleton. Planning layers get
// no hasBehaviour edge; the requester is attached by build_plan instead.
void build_structure(Graph& g, const BehaviourSpec& spec, LayerTag layer) {
    validate_spec(spec);
    bool with_agent = layer == LayerTag::Template || layer == LayerTag::Behaviour;
    if (with_agent) g.add_entity(spec.agent, {CoreClass::Agent}, layer);
    for (const auto& b : spec.behaviours) {
        g.add_entity(b.behaviour_id, {CoreClass::Behaviour}, layer);
        if (with_agent) g.add_triple(spec.agent, Property::HasBehaviour, b.behaviour_id);
        for (const auto& goal : b.goals) {
            g.add_entity(goal.goal_id, {CoreClass::GoalDescription}, layer);
            g.add_triple(b.behaviour_id, Property::ConsistsOfGoalDescription, goal.goal_id);
            for (const auto& task : goal.tasks) {
                g.add_entity(task.task_id, {CoreClass::TaskDescription}, layer);
                g.add_triple(goal.goal_id, Property::ConsistsOfTaskDescription, task.task_id);

                Iri op = minted_operator(task.task_id);
                g.add_entity(op, {CoreClass::TaskOperator}, layer);
                g.add_triple(task.task_id, Property::HasTaskOperator, op);
                apply_ref(g, op, task.operator_ref, /*target_is_action=*/true);

                if (task.operator_argument) {
                    Iri arg = minted_argument(task.task_id);
                    g.add_entity(arg, {CoreClass::TaskOperatorArgument}, layer);
                    g.add_triple(task.task_id, Property::HasTaskOperatorArgument, arg);
                    apply_ref(g, arg, *task.operator_argument, false);
                }
                if (task.object_ref) {
                    Iri obj = minted_object(task.task_id);
                    g.add_entity(obj, {CoreClass::TaskObject}, layer);
                    g.add_triple(task.task_id, Property::HasTaskObject, obj);
                    apply_ref(g, obj, *task.object_ref, false);
                }
                for (size_t i = 0; i < task.inputs.size(); ++i) {
                    Iri in = minted_input(task.task_id, i);
                    g.add_entity(in, {CoreClass::TaskInputParameter}, layer);
                    g.add_triple(task.task_id, Property::HasTaskInputParameter, in);
                    apply_ref(g, in, task.inputs[i], false);
                }
                for (size_t i = 0; i < task.outputs.size(); ++i) {
                    Iri out = minted_output(task.task_id, i);
                    g.add_entity(out, {CoreClass::TaskOutputParameter}, layer);
                    g.add_triple(task.task_id, Property::HasTaskOutputParameter, out);
                    apply_ref(g, out, task.outputs[i], false);
                }
            }
        }
        // dependsOn after every endpoint exists
        for (const auto& goal : b.goals)
            for (const auto& d : goal.depends_on)
                g.add_triple(goal.goal_id, Property::DependsOn, d);
        for (const auto& goal : b.goals)
            for (const auto& task : goal.tasks)
                for (const auto& d : task.depends_on)
                    g.add_triple(task.task_id, Property::DependsOn, d);
    }
}

// ------------------------------------------------------- cross-layer linking

std::optional<CoreClass> structural_class(const Graph& g, const Iri& id) {
    const NodeInfo* info = g.node(id);
    if (!info) return std::nullopt;
    for (const auto& c : info->classes)
        if (auto core = core_of(c)) return core;
    return std::nullopt;
}

std::optional<Property> link_property(CoreClass c, PropertyFamily family) {
    using P = Property;
    switch (family) {
        case PropertyFamily::Overloads:
            switch (c) {
                case CoreClass::Behaviour: return P::OverloadsBehaviour;
                case CoreClass::GoalDescription: return P::OverloadsGoalDescription;
                case CoreClass::TaskDescription: return P::OverloadsTaskDescription;
                case CoreClass::TaskObject: return P::OverloadsTaskObject;
                case CoreClass::TaskOperator: return P::OverloadsTaskOperator;
                case CoreClass::TaskInputParameter: return P::OverloadsTaskInputParameter;
                case CoreClass::TaskOutputParameter: return P::OverloadsTaskOutputParameter;
                default: return std::nullopt;
            }
        case PropertyFamily::SubmittedTo:
            switch (c) {
                case CoreClass::Behaviour: return P::PlanDescriptionSubmittedTo;
                case CoreClass::GoalDescription: return P::GoalDescriptionSubmittedTo;
                case CoreClass::TaskDescription: return P::TaskDescriptionSubmittedTo;
                case CoreClass::TaskObject: return P::TaskObjectSubmittedTo;
                case CoreClass::TaskOperator: return P::TaskOperatorSubmittedTo;
                case CoreClass::TaskInputParameter: return P::TaskInputParameterSubmittedTo;
                case CoreClass::TaskOutputParameter: return P::TaskOutputParameterSubmittedTo;
                default: return std::nullopt;
            }
        default:
            return std::nullopt;
    }
}

// Elements of one spec in a fixed traversal order, with their structural kind.
struct SpecElement {
    CoreClass kind;
    Iri id;
};

std::vector<SpecElement> enumerate_elements(const BehaviourSpec& spec) {
    std::vector<SpecElement> out;
    for (const auto& b : spec.behaviours) {
        out.push_back({CoreClass::Behaviour, b.behaviour_id});
        for (const auto& goal : b.goals) {
            out.push_back({CoreClass::GoalDescription, goal.goal_id});
            for (const auto& task : goal.tasks) {
                out.push_back({CoreClass::TaskDescription, task.task_id});
                out.push_back({CoreClass::TaskOperator, minted_operator(task.task_id)});
                if (task.object_ref)
                    out.push_back({CoreClass::TaskObject, minted_object(task.task_id)});
                for (size_t i = 0; i < task.inputs.size(); ++i)
                    out.push_back({CoreClass::TaskInputParameter, minted_input(task.task_id, i)});
                for (size_t i = 0; i < task.outputs.size(); ++i)
                    out.push_back({CoreClass::TaskOutputParameter, minted_output(task.task_id, i)});
            }
        }
    }
    return out;
}

// Structural parent of an element within its own layer, for commutation.
std::optional<Iri> structural_parent(const Graph& g, const Iri& id) {
    static constexpr Property containers[] = {
        Property::ConsistsOfGoalDescription, Property::ConsistsOfTaskDescription,
        Property::HasTaskOperator,           Property::HasTaskObject,
        Property::HasTaskInputParameter,     Property::HasTaskOutputParameter,
        Property::HasTaskOperatorArgument,
    };
    for (Property p : containers) {
        auto parents = g.subjects(p, id);
        if (!parents.empty()) return parents.front();
    }
    return std::nullopt;
}

template <typename MismatchError>
void add_cross_layer_links(Graph& g, const BehaviourSpec& spec, const ElementMap& map,
                           const Graph& counterpart, PropertyFamily family) {
    // totality over the spec's elements
    for (const auto& e : enumerate_elements(spec)) {
        if (!map.count(e.id))
            throw MismatchError("element map is not total, missing: " + e.id.value);
    }
    for (const auto& [from, to] : map) {
        auto from_class = structural_class(g, from);
        auto to_class = structural_class(counterpart, to);
        if (!from_class || !to_class)
            throw MismatchError("mapped element is not structural: " + from.value + " -> " +
                                to.value);
        if (*from_class != *to_class)
            throw MismatchError("mapped elements differ in class: " + from.value + " -> " +
                                to.value);
        auto prop = link_property(*from_class, family);
        if (!prop)
            throw MismatchError("element class cannot participate in " +
                                std::string(family_name(family)) + ": " + from.value);
        // commutation with the structural parent
        auto pf = structural_parent(g, from);
        auto pt = structural_parent(counterpart, to);
        if (pf.has_value() != pt.has_value() ||
            (pf && (!map.count(*pf) || map.at(*pf) != *pt)))
            throw MismatchError("element map does not commute with structure at " + from.value);
        g.add_triple(from, *prop, to);
    }
}

Iri mirror_id(const Iri& src, const char* suffix) { return Iri(src.value + suffix); }

// Per-kind properties used when mirroring a layer.
struct MirrorFamilies {
    Property root, goal, task, object, op, input, output;
    std::optional<Property> argument;
};

constexpr MirrorFamilies kDrawnBy{
    Property::PlanExecutionDrawnBy,       Property::GoalExecutionDrawnBy,
    Property::TaskExecutionDrawnBy,       Property::TaskObjectDrawnBy,
    Property::TaskOperatorDrawnBy,        Property::TaskInputParameterDrawnBy,
    Property::TaskOutputParameterDrawnBy, std::nullopt};

constexpr MirrorFamilies kEntrustedBy{
    Property::PlanEntrustedBy,          Property::GoalEntrustedBy,
    Property::TaskEntrustedBy,          Property::TaskObjectEntrustedBy,
    Property::TaskOperatorEntrustedBy,  Property::TaskInputParameterEntrustedBy,
    Property::TaskOutputParameterEntrustedBy, Property::TaskOperatorArgumentEntrustedBy};

}  // namespace

// ------------------------------------------------------------------- views

std::vector<BehaviourView> view_layer(const Graph& g, LayerTag layer) {
    std::vector<BehaviourView> out;
    for (const auto& [id, info] : g.nodes()) {
        if (!info.layers.count(layer) || !info.classes.count(ElementClass(CoreClass::Behaviour)))
            continue;
        BehaviourView bv;
        bv.behaviour = id;
        Property owner_prop = layer == LayerTag::Planning    ? Property::RequestsPlan
                              : layer == LayerTag::Execution ? Property::PerformsPlanExecution
                                                             : Property::HasBehaviour;
        auto owners = g.subjects(owner_prop, id);
        if (!owners.empty()) bv.agent = owners.front();
        for (const auto& goal : g.objects(id, Property::ConsistsOfGoalDescription)) {
            const NodeInfo* gi = g.node(goal);
            if (!gi || !gi->layers.count(layer)) continue;
            GoalView gv;
            gv.goal = goal;
            for (const auto& task : g.objects(goal, Property::ConsistsOfTaskDescription)) {
                const NodeInfo* ti = g.node(task);
                if (!ti || !ti->layers.count(layer)) continue;
                if (auto tv = view_task(g, task)) gv.tasks.push_back(*tv);
            }
            bv.goals.push_back(std::move(gv));
        }
        out.push_back(std::move(bv));
    }
    return out;
}

std::optional<TaskView> view_task(const Graph& g, const Iri& task) {
    TaskView tv;
    tv.task = task;
    auto ops = g.objects(task, Property::HasTaskOperator);
    if (ops.size() != 1) return std::nullopt;
    tv.op = ops.front();
    auto args = g.objects(task, Property::HasTaskOperatorArgument);
    if (args.size() > 1) return std::nullopt;
    if (!args.empty()) tv.argument = args.front();
    auto objs = g.objects(task, Property::HasTaskObject);
    if (objs.size() > 1) return std::nullopt;
    if (!objs.empty()) tv.object = objs.front();
    tv.inputs = g.objects(task, Property::HasTaskInputParameter);
    tv.outputs = g.objects(task, Property::HasTaskOutputParameter);
    return tv;
}

ElementMap derive_element_map(const BehaviourSpec& from, const BehaviourSpec& to) {
    validate_spec(from);
    validate_spec(to);
    auto a = enumerate_elements(from);
    auto b = enumerate_elements(to);
    if (a.size() != b.size())
        throw SpecError("specs are not structurally identical (element counts differ)");
    ElementMap map;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].kind != b[i].kind)
            throw SpecError("specs are not structurally identical at " + a[i].id.value);
        map[a[i].id] = b[i].id;
    }
    return map;
}

// ----------------------------------------------------------------- builders

Graph build_template(const BehaviourSpec& spec) {
    Graph g;
    build_structure(g, spec, LayerTag::Template);
    return g;
}

Graph build_behaviour(const BehaviourSpec& spec, const std::optional<TemplateLink>& tmpl) {
    Graph g;
    build_structure(g, spec, LayerTag::Behaviour);
    if (tmpl) {
        g.merge(tmpl->graph);
        add_cross_layer_links<OverloadMismatch>(g, spec, tmpl->overloads, tmpl->graph,
                                                PropertyFamily::Overloads);
    }
    return g;
}

Graph build_plan(const BehaviourSpec& spec, const Iri& requester,
                 const std::optional<SubmissionLink>& target) {
    Graph g;
    build_structure(g, spec, LayerTag::Planning);
    g.add_entity(requester, {CoreClass::Agent});
    for (const auto& b : spec.behaviours)
        g.add_triple(requester, Property::RequestsPlan, b.behaviour_id);
    if (target) {
        g.merge(target->graph);
        add_cross_layer_links<SubmissionMismatch>(g, spec, target->submissions, target->graph,
                                                  PropertyFamily::SubmittedTo);
    }
    return g;
}

namespace {

// Mirrors one behaviour-layer element into a new layer, copying its class
// and reference. AsNew references are replaced by refersExactlyTo when a
// binding is given (bindings == nullptr mirrors references untouched).
void mirror_element_ref(Graph& g, const Graph& src_graph, const Iri& src, const Iri& dst,
                        const std::map<Iri, Iri>* bindings) {
    ElementRef ref = element_ref(src_graph, src);
    if (ref.exactly) {
        g.add_entity(ref.target);
        g.add_triple(dst, Property::RefersExactlyTo, ref.target);
        return;
    }
    if (!bindings) {
        g.add_entity(ref.target);
        g.add_triple(dst, Property::RefersAsNewTo, ref.target);
        for (const auto& c : ref.classes) {
            g.add_entity(c);
            g.add_triple(ref.target, Property::RefersAsInstanceOf, c);
        }
        return;
    }
    auto it = bindings->find(ref.target);
    if (it == bindings->end())
        throw BindingError("no binding for template entity " + ref.target.value);
    const Iri& bound = it->second;
    for (const auto& c : ref.classes)
        if (!g.is_instance_of(bound, c))
            throw BindingError("bound individual " + bound.value + " is not an instance of " +
                               c.value);
    g.add_entity(bound);
    g.add_triple(dst, Property::RefersExactlyTo, bound);
}

}  // namespace

Graph record_execution(const Graph& behaviour_graph, const Iri& performer,
                       const std::map<Iri, Iri>& bindings, const std::optional<PlanLink>& plan) {
    Graph g = behaviour_graph;
    auto views = view_layer(behaviour_graph, LayerTag::Behaviour);
    std::erase_if(views, [&](const BehaviourView& bv) { return bv.agent != performer; });
    if (views.empty())
        throw AgentMismatch("agent " + performer.value + " owns no behaviour in this graph");

    std::set<Iri> selected_tasks;
    if (plan) {
        std::set<Iri> owned;
        for (const auto& bv : views)
            for (const auto& gv : bv.goals)
                for (const auto& tv : gv.tasks) owned.insert(tv.task);
        for (const auto& [p, b] : plan->task_assignment) {
            if (!owned.count(b))
                throw AgentMismatch("assigned task " + b.value + " is not a behaviour task of " +
                                    performer.value);
            selected_tasks.insert(b);
        }
        g.merge(plan->plan);
    } else {
        for (const auto& bv : views)
            for (const auto& gv : bv.goals)
                for (const auto& tv : gv.tasks) selected_tasks.insert(tv.task);
    }

    auto exec = [&](const Iri& src) { return mirror_id(src, "_execution"); };
    std::set<Iri> mirrored_goals, mirrored_tasks;

    for (const auto& bv : views) {
        std::vector<GoalView> goals;
        for (const auto& gv : bv.goals) {
            GoalView kept = gv;
            std::erase_if(kept.tasks,
                          [&](const TaskView& tv) { return !selected_tasks.count(tv.task); });
            if (!kept.tasks.empty()) goals.push_back(std::move(kept));
        }
        if (goals.empty()) continue;

        Iri root = exec(bv.behaviour);
        g.add_entity(root, {CoreClass::Behaviour}, LayerTag::Execution);
        g.add_triple(performer, Property::PerformsPlanExecution, root);
        g.add_triple(root, Property::PlanExecutionDrawnBy, bv.behaviour);

        for (const auto& gv : goals) {
            Iri goal = exec(gv.goal);
            mirrored_goals.insert(gv.goal);
            g.add_entity(goal, {CoreClass::GoalDescription}, LayerTag::Execution);
            g.add_triple(root, Property::ConsistsOfGoalDescription, goal);
            g.add_triple(goal, Property::GoalExecutionDrawnBy, gv.goal);
            for (const auto& tv : gv.tasks) {
                Iri task = exec(tv.task);
                mirrored_tasks.insert(tv.task);
                g.add_entity(task, {CoreClass::TaskDescription}, LayerTag::Execution);
                g.add_triple(goal, Property::ConsistsOfTaskDescription, task);
                g.add_triple(task, Property::TaskExecutionDrawnBy, tv.task);

                Iri op = exec(tv.op);
                g.add_entity(op, {CoreClass::TaskOperator}, LayerTag::Execution);
                g.add_triple(task, Property::HasTaskOperator, op);
                g.add_triple(op, Property::TaskOperatorDrawnBy, tv.op);
                mirror_element_ref(g, behaviour_graph, tv.op, op, &bindings);

                if (tv.argument) {
                    Iri arg = exec(*tv.argument);
                    g.add_entity(arg, {CoreClass::TaskOperatorArgument}, LayerTag::Execution);
                    g.add_triple(task, Property::HasTaskOperatorArgument, arg);
                    mirror_element_ref(g, behaviour_graph, *tv.argument, arg, &bindings);
                }
                if (tv.object) {
                    Iri obj = exec(*tv.object);
                    g.add_entity(obj, {CoreClass::TaskObject}, LayerTag::Execution);
                    g.add_triple(task, Property::HasTaskObject, obj);
                    g.add_triple(obj, Property::TaskObjectDrawnBy, *tv.object);
                    mirror_element_ref(g, behaviour_graph, *tv.object, obj, &bindings);
                }
                for (const auto& in : tv.inputs) {
                    Iri mirrored = exec(in);
                    g.add_entity(mirrored, {CoreClass::TaskInputParameter}, LayerTag::Execution);
                    g.add_triple(task, Property::HasTaskInputParameter, mirrored);
                    g.add_triple(mirrored, Property::TaskInputParameterDrawnBy, in);
                    mirror_element_ref(g, behaviour_graph, in, mirrored, &bindings);
                }
                for (const auto& out : tv.outputs) {
                    Iri mirrored = exec(out);
                    g.add_entity(mirrored, {CoreClass::TaskOutputParameter}, LayerTag::Execution);
                    g.add_triple(task, Property::HasTaskOutputParameter, mirrored);
                    g.add_triple(mirrored, Property::TaskOutputParameterDrawnBy, out);
                    mirror_element_ref(g, behaviour_graph, out, mirrored, &bindings);
                }
            }
        }
    }
    // dependsOn between mirrored goals/tasks
    for (const auto& t : behaviour_graph.edges(Property::DependsOn)) {
        bool both_tasks = mirrored_tasks.count(t.subject) && mirrored_tasks.count(t.object);
        bool both_goals = mirrored_goals.count(t.subject) && mirrored_goals.count(t.object);
        if (both_tasks || both_goals)
            g.add_triple(exec(t.subject), Property::DependsOn, exec(t.object));
    }

    if (plan) {
        for (const auto& [p_task, b_task] : plan->task_assignment) {
            auto pv = view_task(plan->plan, p_task);
            auto bv = view_task(behaviour_graph, b_task);
            if (!pv) throw MissingNodeError("plan task not found: " + p_task.value);
            if (!bv) throw MissingNodeError("behaviour task not found: " + b_task.value);
            Iri x = exec(b_task);
            g.add_triple(p_task, Property::HasTaskExecution, x);
            // parent goal and root of the plan task
            auto p_goals = plan->plan.subjects(Property::ConsistsOfTaskDescription, p_task);
            auto b_goals = behaviour_graph.subjects(Property::ConsistsOfTaskDescription, b_task);
            if (!p_goals.empty() && !b_goals.empty()) {
                g.add_triple(p_goals.front(), Property::HasGoalExecution, exec(b_goals.front()));
                auto p_roots =
                    plan->plan.subjects(Property::ConsistsOfGoalDescription, p_goals.front());
                auto b_roots = behaviour_graph.subjects(Property::ConsistsOfGoalDescription,
                                                        b_goals.front());
                if (!p_roots.empty() && !b_roots.empty())
                    g.add_triple(p_roots.front(), Property::HasPlanExecution,
                                 exec(b_roots.front()));
            }
            g.add_triple(pv->op, Property::HasTaskOperatorExecution, exec(bv->op));
            if (pv->object && bv->object)
                g.add_triple(*pv->object, Property::HasTaskObjectExecution, exec(*bv->object));
            auto in_pairs = pair_parameters(pv->inputs, bv->inputs, g);
            auto out_pairs = pair_parameters(pv->outputs, bv->outputs, g);
            if (!in_pairs || !out_pairs)
                throw IncompatibleAssignment("parameters of " + p_task.value + " and " +
                                             b_task.value + " cannot be paired");
            for (const auto& [pi, bi] : *in_pairs)
                g.add_triple(pi, Property::HasTaskInputParameterExecution, exec(bi));
            for (const auto& [po, bo] : *out_pairs)
                g.add_triple(po, Property::HasTaskOutputParameterExecution, exec(bo));
        }
    }
    return g;
}

Graph build_entrustment(const Graph& plan, const Graph& performer_kb,
                        const std::map<Iri, Iri>& per_task_assignment) {
    Graph g = plan;
    g.merge(performer_kb);

    auto plan_views = view_layer(plan, LayerTag::Planning);
    if (plan_views.empty()) throw InvalidPlan("graph contains no Planning layer");

    // every plan task assigned, every assigned task present and compatible
    for (const auto& bv : plan_views)
        for (const auto& gv : bv.goals)
            for (const auto& tv : gv.tasks)
                if (!per_task_assignment.count(tv.task))
                    throw IncompleteAssignment("plan task not assigned: " + tv.task.value);

    std::map<Iri, std::map<Iri, Iri>> pairings;  // plan task -> element pairing
    for (const auto& [p_task, b_task] : per_task_assignment) {
        if (!view_task(performer_kb, b_task))
            throw IncompleteAssignment("assigned performer task does not exist: " + b_task.value);
        const NodeInfo* b_info = performer_kb.node(b_task);
        if (!b_info || !b_info->layers.count(LayerTag::Behaviour))
            throw IncompatibleAssignment("assigned target is not a behaviour-layer task: " +
                                         b_task.value);
        auto pairing = compatible(p_task, b_task, g);
        if (!pairing)
            throw IncompatibleAssignment("plan task " + p_task.value +
                                         " is not compatible with " + b_task.value);
        pairings[p_task] = *pairing;
    }

    auto ent = [&](const Iri& src) { return mirror_id(src, "_entrustment"); };

    for (const auto& bv : plan_views) {
        Iri root = ent(bv.behaviour);
        g.add_entity(root, {CoreClass::Behaviour}, LayerTag::Entrustment);
        g.add_triple(root, kEntrustedBy.root, bv.behaviour);
        for (const auto& gv : bv.goals) {
            Iri goal = ent(gv.goal);
            g.add_entity(goal, {CoreClass::GoalDescription}, LayerTag::Entrustment);
            g.add_triple(root, Property::ConsistsOfGoalDescription, goal);
            g.add_triple(goal, kEntrustedBy.goal, gv.goal);
            for (const auto& tv : gv.tasks) {
                Iri task = ent(tv.task);
                g.add_entity(task, {CoreClass::TaskDescription}, LayerTag::Entrustment);
                g.add_triple(goal, Property::ConsistsOfTaskDescription, task);
                g.add_triple(task, kEntrustedBy.task, tv.task);

                Iri op = ent(tv.op);
                g.add_entity(op, {CoreClass::TaskOperator}, LayerTag::Entrustment);
                g.add_triple(task, Property::HasTaskOperator, op);
                g.add_triple(op, kEntrustedBy.op, tv.op);
                mirror_element_ref(g, plan, tv.op, op, nullptr);
                if (tv.argument) {
                    Iri arg = ent(*tv.argument);
                    g.add_entity(arg, {CoreClass::TaskOperatorArgument}, LayerTag::Entrustment);
                    g.add_triple(task, Property::HasTaskOperatorArgument, arg);
                    g.add_triple(arg, *kEntrustedBy.argument, *tv.argument);
                    mirror_element_ref(g, plan, *tv.argument, arg, nullptr);
                }
                if (tv.object) {
                    Iri obj = ent(*tv.object);
                    g.add_entity(obj, {CoreClass::TaskObject}, LayerTag::Entrustment);
                    g.add_triple(task, Property::HasTaskObject, obj);
                    g.add_triple(obj, kEntrustedBy.object, *tv.object);
                    mirror_element_ref(g, plan, *tv.object, obj, nullptr);
                }
                for (const auto& in : tv.inputs) {
                    Iri mirrored = ent(in);
                    g.add_entity(mirrored, {CoreClass::TaskInputParameter}, LayerTag::Entrustment);
                    g.add_triple(task, Property::HasTaskInputParameter, mirrored);
                    g.add_triple(mirrored, kEntrustedBy.input, in);
                    mirror_element_ref(g, plan, in, mirrored, nullptr);
                }
                for (const auto& out : tv.outputs) {
                    Iri mirrored = ent(out);
                    g.add_entity(mirrored, {CoreClass::TaskOutputParameter},
                                 LayerTag::Entrustment);
                    g.add_triple(task, Property::HasTaskOutputParameter, mirrored);
                    g.add_triple(mirrored, kEntrustedBy.output, out);
                    mirror_element_ref(g, plan, out, mirrored, nullptr);
                }

                // entrustedFrom towards the assigned performer task
                const Iri& b_task = per_task_assignment.at(tv.task);
                auto bview = *view_task(performer_kb, b_task);
                g.add_triple(task, Property::TaskEntrustedFrom, b_task);
                g.add_triple(op, Property::TaskOperatorEntrustedFrom, bview.op);
                if (tv.argument && bview.argument)
                    g.add_triple(ent(*tv.argument), Property::TaskOperatorArgumentEntrustedFrom,
                                 *bview.argument);
                if (tv.object && bview.object)
                    g.add_triple(ent(*tv.object), Property::TaskObjectEntrustedFrom,
                                 *bview.object);
                const auto& pairing = pairings.at(tv.task);
                std::set<Iri> b_inputs(bview.inputs.begin(), bview.inputs.end());
                for (const auto& [pe, be] : pairing) {
                    Property prop = b_inputs.count(be)
                                        ? Property::TaskInputParameterEntrustedFrom
                                        : Property::TaskOutputParameterEntrustedFrom;
                    g.add_triple(ent(pe), prop, be);
                }
                auto b_goals = performer_kb.subjects(Property::ConsistsOfTaskDescription, b_task);
                if (!b_goals.empty()) {
                    g.add_triple(goal, Property::GoalEntrustedFrom, b_goals.front());
                    auto b_roots =
                        performer_kb.subjects(Property::ConsistsOfGoalDescription, b_goals.front());
                    if (!b_roots.empty())
                        g.add_triple(root, Property::PlanEntrustedFrom, b_roots.front());
                }
            }
        }
    }
    return g;
}

namespace {

// First object of (subject, p) that exists in `within`; nullopt otherwise.
std::optional<Iri> follow(const Graph& g, const Iri& subject, Property p) {
    auto objs = g.objects(subject, p);
    if (objs.empty()) return std::nullopt;
    return objs.front();
}

}  // namespace

Graph link_entrustment_execution(const Graph& entrustment, const Graph& execution,
                                 const Iri& performer) {
    Graph g = entrustment;
    g.merge(execution);
    if (!g.has_node(performer)) throw MissingNodeError("unknown performer: " + performer.value);

    auto require = [](std::optional<Iri> v, const std::string& what) {
        if (!v) throw MissingExecution("missing execution counterpart via " + what);
        return *v;
    };

    for (const auto& bv : view_layer(entrustment, LayerTag::Entrustment)) {
        for (const auto& gv : bv.goals) {
            for (const auto& tv : gv.tasks) {
                Iri b_task = require(follow(g, tv.task, Property::TaskEntrustedFrom),
                                     "taskEntrustedFrom");
                // tasks entrusted to another performer are linked by that
                // performer's own execution report
                if (!execution.has_node(mirror_id(b_task, "_execution"))) continue;
                Iri p_task = require(follow(g, tv.task, Property::TaskEntrustedBy),
                                     "taskEntrustedBy");
                Iri x_task = require(follow(g, p_task, Property::HasTaskExecution),
                                     "hasTaskExecution");
                auto xv = view_task(g, x_task);
                if (!xv) throw MissingExecution("malformed execution task " + x_task.value);

                g.add_triple(tv.task, Property::TaskEntrustedWith, x_task);
                g.add_triple(tv.task, Property::Entrusts, performer);
                g.add_triple(tv.op, Property::TaskOperatorEntrustedWith, xv->op);
                if (tv.argument) {
                    if (!xv->argument)
                        throw MissingExecution("execution task " + x_task.value +
                                               " has no operator argument");
                    g.add_triple(*tv.argument, Property::TaskOperatorArgumentEntrustedWith,
                                 *xv->argument);
                }
                if (tv.object) {
                    if (!xv->object)
                        throw MissingExecution("execution task " + x_task.value +
                                               " has no task object");
                    g.add_triple(*tv.object, Property::TaskObjectEntrustedWith, *xv->object);
                }
                for (const auto& in : tv.inputs) {
                    Iri p_in = require(follow(g, in, Property::TaskInputParameterEntrustedBy),
                                       "taskInputParameterEntrustedBy");
                    Iri x_in = require(follow(g, p_in, Property::HasTaskInputParameterExecution),
                                       "hasTaskInputParameterExecution");
                    g.add_triple(in, Property::TaskInputParameterEntrustedWith, x_in);
                }
                for (const auto& out : tv.outputs) {
                    Iri p_out = require(follow(g, out, Property::TaskOutputParameterEntrustedBy),
                                        "taskOutputParameterEntrustedBy");
                    Iri x_out = require(
                        follow(g, p_out, Property::HasTaskOutputParameterExecution),
                        "hasTaskOutputParameterExecution");
                    g.add_triple(out, Property::TaskOutputParameterEntrustedWith, x_out);
                }
            }
            Iri p_goal = require(follow(g, gv.goal, Property::GoalEntrustedBy), "goalEntrustedBy");
            if (auto x_goal = follow(g, p_goal, Property::HasGoalExecution))
                g.add_triple(gv.goal, Property::GoalEntrustedWith, *x_goal);
        }
        Iri p_root = require(follow(g, bv.behaviour, Property::PlanEntrustedBy), "planEntrustedBy");
        if (auto x_root = follow(g, p_root, Property::HasPlanExecution))
            g.add_triple(bv.behaviour, Property::PlanEntrustedWith, *x_root);
    }
    return g;
}

}  // namespace oasis2
