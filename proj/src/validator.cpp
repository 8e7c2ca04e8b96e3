#include "oasis2/validator.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace oasis2 {

namespace {

bool has_class(const Graph& g, const Iri& id, CoreClass c) {
    const NodeInfo* info = g.node(id);
    return info && info->classes.count(ElementClass(c)) != 0;
}

bool has_layer(const Graph& g, const Iri& id, LayerTag t) {
    const NodeInfo* info = g.node(id);
    return info && info->layers.count(t) != 0;
}

constexpr CoreClass kStructural[] = {
    CoreClass::Agent,          CoreClass::Behaviour,
    CoreClass::GoalDescription, CoreClass::TaskDescription,
    CoreClass::TaskOperator,   CoreClass::TaskOperatorArgument,
    CoreClass::TaskObject,     CoreClass::TaskInputParameter,
    CoreClass::TaskOutputParameter,
};

constexpr CoreClass kElements[] = {
    CoreClass::TaskOperator, CoreClass::TaskOperatorArgument, CoreClass::TaskObject,
    CoreClass::TaskInputParameter, CoreClass::TaskOutputParameter,
};

std::optional<CoreClass> structural_class(const Graph& g, const Iri& id) {
    const NodeInfo* info = g.node(id);
    if (!info) return std::nullopt;
    for (CoreClass c : kStructural)
        if (info->classes.count(ElementClass(c))) return c;
    return std::nullopt;
}

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

class Checker {
public:
    explicit Checker(const Graph& g) : g_(g) {}

    std::vector<Violation> run() {
        v1_layer_purity();
        v2_skeleton();
        v3_reference_discipline();
        cross_layer_families();
        v5_depends_on_acyclic();
        v8_binding_soundness();
        std::sort(out_.begin(), out_.end());
        out_.erase(std::unique(out_.begin(), out_.end()), out_.end());
        return std::move(out_);
    }

private:
    void report(const char* rule, std::vector<Iri> subjects, std::string message) {
        out_.push_back(Violation{rule, std::move(subjects), std::move(message)});
    }

    void v1_layer_purity() {
        for (const auto& [id, info] : g_.nodes()) {
            auto cls = structural_class(g_, id);
            if (!cls) continue;
            size_t tags = info.layers.size();
            if (*cls == CoreClass::Agent) {
                // agents participate across layers; at most one tag
                if (tags > 1)
                    report("V1", {id}, "agent node carries more than one layer marker");
            } else if (tags != 1) {
                report("V1", {id},
                       tags == 0 ? "structural node carries no layer marker"
                                 : "structural node carries more than one layer marker");
            }
        }
    }

    void check_child_edges(const Iri& parent, Property p, CoreClass child_class,
                           const char* child_name) {
        for (const auto& child : g_.objects(parent, p)) {
            if (!has_class(g_, child, child_class))
                report("V2", {parent, child},
                       std::string(child_name) + " target is not typed " +
                           std::string(core_class_name(child_class)));
            const NodeInfo* pi = g_.node(parent);
            const NodeInfo* ci = g_.node(child);
            if (pi && ci && !pi->layers.empty() && !ci->layers.empty()) {
                bool shared = std::any_of(pi->layers.begin(), pi->layers.end(),
                                          [&](LayerTag t) { return ci->layers.count(t); });
                if (!shared)
                    report("V2", {parent, child},
                           std::string(child_name) + " crosses layers");
            }
        }
    }

    void v2_skeleton() {
        for (const auto& [id, info] : g_.nodes()) {
            auto cls = structural_class(g_, id);
            if (!cls) continue;
            switch (*cls) {
                case CoreClass::Agent:
                    break;
                case CoreClass::Behaviour: {
                    for (LayerTag t : info.layers) {
                        std::optional<Property> owner;
                        if (t == LayerTag::Template || t == LayerTag::Behaviour)
                            owner = Property::HasBehaviour;
                        else if (t == LayerTag::Planning)
                            owner = Property::RequestsPlan;
                        else if (t == LayerTag::Execution)
                            owner = Property::PerformsPlanExecution;
                        if (owner) {
                            auto owners = g_.subjects(*owner, id);
                            std::erase_if(owners, [&](const Iri& a) {
                                return !has_class(g_, a, CoreClass::Agent);
                            });
                            if (owners.empty())
                                report("V2", {id},
                                       "behaviour node has no owning agent via " +
                                           std::string(property_name(*owner)));
                        }
                    }
                    bool any_goal = false;
                    for (const auto& goal : g_.objects(id, Property::ConsistsOfGoalDescription))
                        if (has_class(g_, goal, CoreClass::GoalDescription)) any_goal = true;
                    if (!any_goal)
                        report("V2", {id}, "behaviour node has no goal description");
                    check_child_edges(id, Property::ConsistsOfGoalDescription,
                                      CoreClass::GoalDescription, "consistsOfGoalDescription");
                    break;
                }
                case CoreClass::GoalDescription: {
                    if (g_.subjects(Property::ConsistsOfGoalDescription, id).empty())
                        report("V2", {id}, "goal description not contained in any behaviour");
                    bool any_task = false;
                    for (const auto& task : g_.objects(id, Property::ConsistsOfTaskDescription))
                        if (has_class(g_, task, CoreClass::TaskDescription)) any_task = true;
                    if (!any_task) report("V2", {id}, "goal description has no task description");
                    check_child_edges(id, Property::ConsistsOfTaskDescription,
                                      CoreClass::TaskDescription, "consistsOfTaskDescription");
                    break;
                }
                case CoreClass::TaskDescription: {
                    if (g_.subjects(Property::ConsistsOfTaskDescription, id).empty())
                        report("V2", {id}, "task description not contained in any goal");
                    if (g_.objects(id, Property::HasTaskOperator).size() != 1)
                        report("V2", {id}, "task description must have exactly one task operator");
                    if (g_.objects(id, Property::HasTaskOperatorArgument).size() > 1)
                        report("V2", {id}, "task description has more than one operator argument");
                    if (g_.objects(id, Property::HasTaskObject).size() > 1)
                        report("V2", {id}, "task description has more than one task object");
                    check_child_edges(id, Property::HasTaskOperator, CoreClass::TaskOperator,
                                      "hasTaskOperator");
                    check_child_edges(id, Property::HasTaskOperatorArgument,
                                      CoreClass::TaskOperatorArgument, "hasTaskOperatorArgument");
                    check_child_edges(id, Property::HasTaskObject, CoreClass::TaskObject,
                                      "hasTaskObject");
                    check_child_edges(id, Property::HasTaskInputParameter,
                                      CoreClass::TaskInputParameter, "hasTaskInputParameter");
                    check_child_edges(id, Property::HasTaskOutputParameter,
                                      CoreClass::TaskOutputParameter, "hasTaskOutputParameter");
                    break;
                }
                default: {
                    // element nodes must hang off a task
                    if (!structural_parent(g_, id))
                        report("V2", {id}, "element node not attached to any task description");
                    break;
                }
            }
        }
    }

    void v3_reference_discipline() {
        std::set<Iri> as_new_targets;
        for (const auto& t : g_.edges(Property::RefersAsNewTo)) as_new_targets.insert(t.object);
        for (const auto& [id, info] : g_.nodes()) {
            bool is_element = std::any_of(std::begin(kElements), std::end(kElements),
                                          [&](CoreClass c) { return info.classes.count(ElementClass(c)); });
            if (!is_element) continue;
            size_t refs = g_.objects(id, Property::RefersExactlyTo).size() +
                          g_.objects(id, Property::RefersAsNewTo).size();
            if (refs != 1)
                report("V3", {id},
                       "element must carry exactly one of refersExactlyTo/refersAsNewTo");
        }
        for (const auto& t : g_.edges(Property::RefersAsInstanceOf)) {
            if (!as_new_targets.count(t.subject))
                report("V3", {t.subject},
                       "refersAsInstanceOf on an entity that is not a refersAsNewTo target");
        }
    }

    struct CrossRule {
        Property prop;
        const char* rule;
        CoreClass cls;
        LayerTag subj_layer;
        LayerTag obj_layer;
        std::optional<Property> parent_prop;
    };

    void cross_layer_families() {
        using P = Property;
        using L = LayerTag;
        using C = CoreClass;
        static const std::vector<CrossRule> rules = [] {
            std::vector<CrossRule> r;
            auto family = [&](const char* rule, L s, L o, P root, P goal, P task,
                              std::optional<P> object, std::optional<P> op,
                              std::optional<P> arg, std::optional<P> in, std::optional<P> out) {
                r.push_back({root, rule, C::Behaviour, s, o, {}});
                r.push_back({goal, rule, C::GoalDescription, s, o, root});
                r.push_back({task, rule, C::TaskDescription, s, o, goal});
                if (object) r.push_back({*object, rule, C::TaskObject, s, o, task});
                if (op) r.push_back({*op, rule, C::TaskOperator, s, o, task});
                if (arg) r.push_back({*arg, rule, C::TaskOperatorArgument, s, o, task});
                if (in) r.push_back({*in, rule, C::TaskInputParameter, s, o, task});
                if (out) r.push_back({*out, rule, C::TaskOutputParameter, s, o, task});
            };
            family("V4", L::Behaviour, L::Template, P::OverloadsBehaviour,
                   P::OverloadsGoalDescription, P::OverloadsTaskDescription,
                   P::OverloadsTaskObject, P::OverloadsTaskOperator, std::nullopt,
                   P::OverloadsTaskInputParameter, P::OverloadsTaskOutputParameter);
            family("V6", L::Execution, L::Behaviour, P::PlanExecutionDrawnBy,
                   P::GoalExecutionDrawnBy, P::TaskExecutionDrawnBy, P::TaskObjectDrawnBy,
                   P::TaskOperatorDrawnBy, std::nullopt, P::TaskInputParameterDrawnBy,
                   P::TaskOutputParameterDrawnBy);
            family("V7", L::Planning, L::Behaviour, P::PlanDescriptionSubmittedTo,
                   P::GoalDescriptionSubmittedTo, P::TaskDescriptionSubmittedTo,
                   P::TaskObjectSubmittedTo, P::TaskOperatorSubmittedTo, std::nullopt,
                   P::TaskInputParameterSubmittedTo, P::TaskOutputParameterSubmittedTo);
            family("V7", L::Planning, L::Execution, P::HasPlanExecution, P::HasGoalExecution,
                   P::HasTaskExecution, P::HasTaskObjectExecution, P::HasTaskOperatorExecution,
                   std::nullopt, P::HasTaskInputParameterExecution,
                   P::HasTaskOutputParameterExecution);
            family("V7", L::Entrustment, L::Planning, P::PlanEntrustedBy, P::GoalEntrustedBy,
                   P::TaskEntrustedBy, P::TaskObjectEntrustedBy, P::TaskOperatorEntrustedBy,
                   P::TaskOperatorArgumentEntrustedBy, P::TaskInputParameterEntrustedBy,
                   P::TaskOutputParameterEntrustedBy);
            family("V7", L::Entrustment, L::Behaviour, P::PlanEntrustedFrom, P::GoalEntrustedFrom,
                   P::TaskEntrustedFrom, P::TaskObjectEntrustedFrom, P::TaskOperatorEntrustedFrom,
                   P::TaskOperatorArgumentEntrustedFrom, P::TaskInputParameterEntrustedFrom,
                   P::TaskOutputParameterEntrustedFrom);
            family("V7", L::Entrustment, L::Execution, P::PlanEntrustedWith, P::GoalEntrustedWith,
                   P::TaskEntrustedWith, P::TaskObjectEntrustedWith, P::TaskOperatorEntrustedWith,
                   P::TaskOperatorArgumentEntrustedWith, P::TaskInputParameterEntrustedWith,
                   P::TaskOutputParameterEntrustedWith);
            return r;
        }();

        for (const auto& rule : rules) {
            for (const auto& t : g_.edges(rule.prop)) {
                std::string prop(property_name(rule.prop));
                if (!has_class(g_, t.subject, rule.cls) || !has_layer(g_, t.subject, rule.subj_layer))
                    report(rule.rule, {t.subject},
                           prop + " subject is not a " +
                               std::string(core_class_name(rule.cls)) + " of the " +
                               std::string(layer_marker_name(rule.subj_layer)) + " layer");
                if (!has_class(g_, t.object, rule.cls) || !has_layer(g_, t.object, rule.obj_layer))
                    report(rule.rule, {t.object},
                           prop + " object is not a " + std::string(core_class_name(rule.cls)) +
                               " of the " + std::string(layer_marker_name(rule.obj_layer)) +
                               " layer");
                if (rule.parent_prop) {
                    auto ps = structural_parent(g_, t.subject);
                    auto po = structural_parent(g_, t.object);
                    if (!ps || !po || !g_.has_triple(*ps, *rule.parent_prop, *po))
                        report(rule.rule, {t.subject, t.object},
                               prop + " does not commute with " +
                                   std::string(property_name(*rule.parent_prop)) +
                                   " between the parents");
                }
            }
        }

        // entrusts: Entrustment-layer task -> Agent
        for (const auto& t : g_.edges(Property::Entrusts)) {
            if (!has_class(g_, t.subject, CoreClass::TaskDescription) ||
                !has_layer(g_, t.subject, LayerTag::Entrustment))
                report("V7", {t.subject}, "entrusts subject is not an entrustment task");
            if (!has_class(g_, t.object, CoreClass::Agent))
                report("V7", {t.object}, "entrusts target is not an Agent");
        }
    }

    void v5_depends_on_acyclic() {
        std::map<Iri, std::vector<Iri>> deps;
        for (const auto& t : g_.edges(Property::DependsOn)) deps[t.subject].push_back(t.object);
        std::map<Iri, int> state;
        std::set<Iri> on_cycle;
        std::vector<Iri> stack;
        std::function<void(const Iri&)> visit = [&](const Iri& n) {
            state[n] = 1;
            stack.push_back(n);
            for (const auto& d : deps[n]) {
                if (state[d] == 1) {
                    for (auto it = std::find(stack.begin(), stack.end(), d); it != stack.end(); ++it)
                        on_cycle.insert(*it);
                } else if (state[d] == 0) {
                    visit(d);
                }
            }
            stack.pop_back();
            state[n] = 2;
        };
        for (const auto& [n, _] : deps)
            if (state[n] == 0) visit(n);
        if (!on_cycle.empty())
            report("V5", std::vector<Iri>(on_cycle.begin(), on_cycle.end()),
                   "dependsOn edges form a cycle");
    }

    void v8_binding_soundness() {
        for (const auto& [id, info] : g_.nodes()) {
            if (!info.layers.count(LayerTag::Execution)) continue;
            auto cls = structural_class(g_, id);
            if (!cls) continue;
            for (const auto& bound : g_.objects(id, Property::RefersExactlyTo)) {
                for (const auto& edge : g_.family_edges(PropertyFamily::DrawnBy)) {
                    if (edge.subject != id) continue;
                    for (const auto& tmpl : g_.objects(edge.object, Property::RefersAsNewTo)) {
                        for (const auto& required :
                             g_.objects(tmpl, Property::RefersAsInstanceOf)) {
                            if (!g_.is_instance_of(bound, required))
                                report("V8", {id, bound},
                                       "bound individual " + bound.value +
                                           " is not an instance of required class " +
                                           required.value);
                        }
                    }
                }
            }
        }
    }

    const Graph& g_;
    std::vector<Violation> out_;
};

}  // namespace

std::vector<Violation> validate(const Graph& g) { return Checker(g).run(); }

std::string format_report(const std::vector<Violation>& violations) {
    std::ostringstream out;
    for (const auto& v : violations) {
        out << v.rule << "\t";
        for (size_t i = 0; i < v.subjects.size(); ++i) out << (i ? " " : "") << v.subjects[i].value;
        out << "\t" << v.message << "\n";
    }
    return out.str();
}

}  // namespace oasis2
