#include "oasis2/matcher.hpp"

#include <algorithm>
#include <functional>

#include "oasis2/builder.hpp"

namespace oasis2 {

ElementRef element_ref(const Graph& g, const Iri& element) {
    auto exact = g.objects(element, Property::RefersExactlyTo);
    auto as_new = g.objects(element, Property::RefersAsNewTo);
    if (exact.size() + as_new.size() != 1)
        throw MalformedTask("element " + element.value +
                            " must carry exactly one of refersExactlyTo/refersAsNewTo");
    if (!exact.empty()) return ElementRef{true, exact.front(), {}};
    ElementRef ref{false, as_new.front(), g.objects(as_new.front(), Property::RefersAsInstanceOf)};
    return ref;
}

bool element_compatible(const ElementRef& plan_ref, const ElementRef& behaviour_ref,
                        const Graph& g) {
    if (plan_ref.exactly && behaviour_ref.exactly) return plan_ref.target == behaviour_ref.target;
    if (plan_ref.exactly) {
        // precise individual against a templated slot: must satisfy every class
        return std::all_of(behaviour_ref.classes.begin(), behaviour_ref.classes.end(),
                           [&](const Iri& c) { return g.is_instance_of(plan_ref.target, c); });
    }
    if (behaviour_ref.exactly) return false;
    // plan constraints must be at least as specific as the behaviour's
    for (const auto& c2 : behaviour_ref.classes) {
        bool covered = std::any_of(plan_ref.classes.begin(), plan_ref.classes.end(),
                                   [&](const Iri& c1) {
                                       return g.has_node(c1) &&
                                              g.superclass_closure(c1).count(c2) != 0;
                                   });
        if (!covered) return false;
    }
    return true;
}

std::optional<std::map<Iri, Iri>> pair_parameters(const std::vector<Iri>& plan_params,
                                                  const std::vector<Iri>& behaviour_params,
                                                  const Graph& g) {
    if (plan_params.size() != behaviour_params.size()) return std::nullopt;
    const size_t n = plan_params.size();
    if (n == 0) return std::map<Iri, Iri>{};

    std::vector<std::vector<bool>> ok(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i) {
        ElementRef pr = element_ref(g, plan_params[i]);
        for (size_t j = 0; j < n; ++j)
            ok[i][j] = element_compatible(pr, element_ref(g, behaviour_params[j]), g);
    }

    // Kuhn's augmenting paths over the compatibility matrix.
    std::vector<int> match_right(n, -1);
    std::function<bool(size_t, std::vector<bool>&)> augment = [&](size_t i,
                                                                  std::vector<bool>& seen) {
        for (size_t j = 0; j < n; ++j) {
            if (!ok[i][j] || seen[j]) continue;
            seen[j] = true;
            if (match_right[j] < 0 || augment(static_cast<size_t>(match_right[j]), seen)) {
                match_right[j] = static_cast<int>(i);
                return true;
            }
        }
        return false;
    };
    for (size_t i = 0; i < n; ++i) {
        std::vector<bool> seen(n, false);
        if (!augment(i, seen)) return std::nullopt;
    }
    std::map<Iri, Iri> out;
    for (size_t j = 0; j < n; ++j) out[plan_params[match_right[j]]] = behaviour_params[j];
    return out;
}

std::optional<std::map<Iri, Iri>> compatible(const Iri& plan_task, const Iri& behaviour_task,
                                             const Graph& g) {
    auto pv = view_task(g, plan_task);
    auto bv = view_task(g, behaviour_task);
    if (!pv) throw MalformedTask("malformed plan task: " + plan_task.value);
    if (!bv) throw MalformedTask("malformed behaviour task: " + behaviour_task.value);

    if (!element_compatible(element_ref(g, pv->op), element_ref(g, bv->op), g))
        return std::nullopt;
    if (pv->argument.has_value() != bv->argument.has_value()) return std::nullopt;
    if (pv->argument &&
        !element_compatible(element_ref(g, *pv->argument), element_ref(g, *bv->argument), g))
        return std::nullopt;
    if (pv->object.has_value() != bv->object.has_value()) return std::nullopt;
    if (pv->object &&
        !element_compatible(element_ref(g, *pv->object), element_ref(g, *bv->object), g))
        return std::nullopt;

    auto inputs = pair_parameters(pv->inputs, bv->inputs, g);
    if (!inputs) return std::nullopt;
    auto outputs = pair_parameters(pv->outputs, bv->outputs, g);
    if (!outputs) return std::nullopt;

    std::map<Iri, Iri> pairing = *inputs;
    pairing.insert(outputs->begin(), outputs->end());
    return pairing;
}

CandidateAssignment discover(const Graph& plan, const Graph& kb) {
    auto plan_views = view_layer(plan, LayerTag::Planning);
    if (plan_views.empty()) throw InvalidPlan("graph contains no Planning layer");

    Graph merged = plan;
    merged.merge(kb);

    CandidateAssignment out;
    out.plan = plan_views.front().behaviour;

    auto kb_views = view_layer(merged, LayerTag::Behaviour);
    for (const auto& pv : plan_views) {
        for (const auto& pg : pv.goals) {
            for (const auto& pt : pg.tasks) {
                auto& candidates = out.choices[pt.task];
                for (const auto& bv : kb_views) {
                    if (!bv.agent) continue;
                    for (const auto& bg : bv.goals) {
                        for (const auto& bt : bg.tasks) {
                            auto pairing = compatible(pt.task, bt.task, merged);
                            if (pairing)
                                candidates.push_back(Candidate{*bv.agent, bv.behaviour, bg.goal,
                                                               bt.task, std::move(*pairing)});
                        }
                    }
                }
                std::sort(candidates.begin(), candidates.end());
            }
        }
    }
    return out;
}

}  // namespace oasis2
