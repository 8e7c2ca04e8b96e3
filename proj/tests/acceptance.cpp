// Acceptance gate: one line per criterion, "PASS name (x.xs)" or
// "FAIL name (reason)". Exit status 0 iff everything passes.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "oasis2/demo.hpp"
#include "oasis2/harness.hpp"
#include "oasis2/matcher.hpp"
#include "oasis2/turtle.hpp"
#include "oasis2/validator.hpp"
#include "support/random_model.hpp"

using namespace oasis2;

namespace {

struct Check {
    std::string name;
    double limit_seconds;
    std::function<void()> body;  // throws std::runtime_error on failure
};

void fail(const std::string& why) { throw std::runtime_error(why); }

void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) fail("cannot read " + p.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::filesystem::path golden_dir() {
    return std::filesystem::path(GOLDEN_DIR);
}

// ------------------------------------------------------------------ criteria

// Counts enumerated from the modeling rules, element by element, without
// consulting the builders: see the itemization in each comment.
void demo_fidelity() {
    auto tmp = std::filesystem::temp_directory_path() / "oasis2_acceptance_demo";
    std::filesystem::remove_all(tmp);
    auto art = demo::write_files(tmp, 0);

    for (const char* name : {"template.ttl", "behaviour.ttl", "plan.ttl", "entrustment.ttl",
                             "execution.ttl", "events.log"})
        expect(slurp(tmp / name) == slurp(golden_dir() / name),
               std::string(name) + " differs from the golden file");

    // template: agent + behaviour/goal/task + 4 elements + mint,
    // blockchain_digital_token, token entity, ERC721 class = 12 nodes;
    // 7 skeleton edges + 2 exact + 2 as-new + 1 as-instance = 12 triples
    expect(art.template_graph.nodes().size() == 12, "template node count");
    expect(art.template_graph.triples().size() == 12, "template triple count");

    // behaviour: template + 8-node concrete mirror + SWB_token32; triples
    // 12 + 7 skeleton + 4 refs + 6 overloads (argument carries none)
    expect(art.behaviour_graph.nodes().size() == 21, "behaviour node count");
    expect(art.behaviour_graph.triples().size() == 29, "behaviour triple count");

    // plan: behaviour + 8-node request mirror; 29 + 7 skeleton + 4 exact refs
    // + 6 submittedTo
    expect(art.plan_graph.nodes().size() == 29, "plan node count");
    expect(art.plan_graph.triples().size() == 46, "plan triple count");

    // entrustment: plan + 7 mirrors; 46 + 6 skeleton + 7 entrustedBy
    // + 4 copied refs + 7 entrustedFrom
    expect(art.entrustment_graph.nodes().size() == 36, "entrustment node count");
    expect(art.entrustment_graph.triples().size() == 70, "entrustment triple count");

    // linked execution: entrustment + 7 execution mirrors; 70 + 6 skeleton
    // + 1 performs + 6 drawnBy + 4 bound refs + 6 hasExecution
    // + 7 entrustedWith + 1 entrusts
    expect(art.execution_graph.nodes().size() == 43, "execution node count");
    expect(art.execution_graph.triples().size() == 101, "execution triple count");

    Iri token("urn:example:swb#SWB_token32");
    Iri out("urn:example:swb#SWB_mint_token_task_output1_execution");
    expect(art.execution_graph.has_triple(out, Property::RefersExactlyTo, token),
           "SWB_token32 not bound to the execution output");
}

void conformance_soundness() {
    std::mt19937 rng(90001);
    for (int trial = 0; trial < 200; ++trial) {
        auto lc = testsupport::random_lifecycle(rng);
        for (const Graph* g : {&lc.template_graph, &lc.behaviour_graph, &lc.plan_graph,
                               &lc.entrustment_graph, &lc.execution_graph, &lc.linked_graph})
            expect(validate(*g).empty(), "violation at trial " + std::to_string(trial));
    }
}

void mutation_coverage() {
    auto art = demo::run(0);
    Iri tmpl_task("urn:example:swb#mint_ERC721_token_task");
    Iri impl_task("urn:example:swb#SWB_mint_token_task");
    Iri token("urn:example:swb#SWB_token32");

    auto cited = [](const Graph& g, const std::string& rule) {
        for (const auto& v : validate(g))
            if (v.rule == rule) return true;
        return false;
    };

    Graph m1 = art.template_graph;
    m1.add_layer_unchecked(tmpl_task, LayerTag::Execution);
    expect(cited(m1, "V1"), "V1 mutation undetected");

    Graph m2 = art.template_graph;
    m2.remove_triple(tmpl_task, Property::HasTaskOperator, minted_operator(tmpl_task));
    expect(cited(m2, "V2"), "V2 mutation undetected");

    Graph m3 = art.template_graph;
    m3.remove_triple(minted_operator(tmpl_task), Property::RefersExactlyTo,
                     Iri("urn:example:swb#mint"));
    expect(cited(m3, "V3"), "V3 mutation undetected");

    Graph m4 = art.behaviour_graph;
    m4.remove_triple(Iri("urn:example:swb#SWB_mint_token_behaviour"),
                     Property::OverloadsBehaviour,
                     Iri("urn:example:swb#mint_ERC721_token_behaviour"));
    expect(cited(m4, "V4"), "V4 mutation undetected");

    Graph m5 = art.template_graph;
    m5.add_triple(tmpl_task, Property::DependsOn, tmpl_task);
    expect(cited(m5, "V5"), "V5 mutation undetected");

    Graph m6 = art.execution_graph;
    m6.remove_triple(Iri(impl_task.value + "_execution"), Property::TaskExecutionDrawnBy,
                     impl_task);
    expect(cited(m6, "V6"), "V6 mutation undetected");

    Graph m7 = art.plan_graph;
    m7.remove_triple(Iri("urn:example:swb#buy_token32_behaviour"),
                     Property::PlanDescriptionSubmittedTo,
                     Iri("urn:example:swb#SWB_mint_token_behaviour"));
    expect(cited(m7, "V7"), "V7 mutation undetected");

    Graph m8 = art.execution_graph;
    m8.remove_class(token, domain_class(Iri("urn:example:swb#EthereumTokenERC721")));
    expect(cited(m8, "V8"), "V8 mutation undetected");
}

// Permutation-based pairing, independent of the augmenting-path matcher.
bool oracle_pairing(const std::vector<Iri>& a, const std::vector<Iri>& b, const Graph& g) {
    if (a.size() != b.size()) return false;
    std::vector<size_t> perm(b.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    do {
        bool all = true;
        for (size_t i = 0; i < perm.size() && all; ++i)
            all = element_compatible(element_ref(g, a[i]), element_ref(g, b[perm[i]]), g);
        if (all) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

bool oracle_compatible(const TaskView& p, const TaskView& b, const Graph& g) {
    if (!element_compatible(element_ref(g, p.op), element_ref(g, b.op), g)) return false;
    if (p.argument.has_value() != b.argument.has_value()) return false;
    if (p.argument &&
        !element_compatible(element_ref(g, *p.argument), element_ref(g, *b.argument), g))
        return false;
    if (p.object.has_value() != b.object.has_value()) return false;
    if (p.object && !element_compatible(element_ref(g, *p.object), element_ref(g, *b.object), g))
        return false;
    return oracle_pairing(p.inputs, b.inputs, g) && oracle_pairing(p.outputs, b.outputs, g);
}

void matcher_oracle() {
    std::mt19937 rng(90002);
    for (int trial = 0; trial < 500; ++trial) {
        auto world = testsupport::random_world(rng);
        auto plan_shape = testsupport::random_shape(rng, world, 1, 3);
        auto plan_spec = testsupport::materialize(plan_shape, testsupport::rnd_iri("req"), "plan");
        Graph plan = build_plan(plan_spec, plan_spec.agent);

        Graph kb = world.ontology;
        size_t n_agents = testsupport::pick(rng, 1, 4);
        for (size_t i = 0; i < n_agents; ++i) {
            auto shape = testsupport::chance(rng, 0.5)
                             ? plan_shape
                             : testsupport::random_shape(rng, world, 2, 3);
            kb.merge(build_behaviour(testsupport::materialize(
                shape, testsupport::rnd_iri("agent" + std::to_string(i)),
                "kb" + std::to_string(i))));
        }

        auto got = discover(plan, kb);
        Graph merged = plan;
        merged.merge(kb);

        for (const auto& pv : view_layer(merged, LayerTag::Planning)) {
            for (const auto& pg : pv.goals) {
                for (const auto& pt : pg.tasks) {
                    std::set<Iri> expected;
                    for (const auto& bv : view_layer(merged, LayerTag::Behaviour)) {
                        if (!bv.agent) continue;
                        for (const auto& bg : bv.goals)
                            for (const auto& bt : bg.tasks)
                                if (oracle_compatible(pt, bt, merged)) expected.insert(bt.task);
                    }
                    std::set<Iri> found;
                    for (const auto& c : got.choices.at(pt.task)) found.insert(c.task);
                    expect(found == expected,
                           "discover mismatch at trial " + std::to_string(trial));
                }
            }
        }
    }
}

void round_trip() {
    std::mt19937 rng(90003);
    int graphs = 0;
    while (graphs < 200) {
        auto lc = testsupport::random_lifecycle(rng);
        for (const Graph* g : {&lc.template_graph, &lc.behaviour_graph, &lc.plan_graph,
                               &lc.entrustment_graph, &lc.execution_graph, &lc.linked_graph}) {
            std::string text = serialize(*g);
            Graph back = parse(text);
            expect(back == *g, "parse(serialize(g)) != g");
            expect(serialize(back) == text, "serialize unstable");
            ++graphs;
        }
    }
    for (const char* name :
         {"template.ttl", "behaviour.ttl", "plan.ttl", "entrustment.ttl", "execution.ttl"}) {
        std::string text = slurp(golden_dir() / name);
        Graph g = parse(text);
        SerializeOptions opts;
        opts.prefix_hints[std::string(demo::kNamespace)] = "swb";
        expect(serialize(g, opts) == text, std::string(name) + " not byte-stable");
    }
}

void lifecycle_completeness() {
    std::mt19937 rng(90004);
    for (int trial = 0; trial < 25; ++trial) {
        auto world = testsupport::random_world(rng);
        auto shape = testsupport::random_shape(rng, world, 2, 3);
        auto impl_spec = testsupport::materialize(shape, testsupport::rnd_iri("performer"), "i");
        auto plan_spec = testsupport::materialize(shape, testsupport::rnd_iri("requester"), "p");

        Graph kb = build_behaviour(impl_spec);
        kb.merge(world.ontology);
        World w;
        w.requester = plan_spec.agent;
        w.entruster = testsupport::rnd_iri("entruster");
        w.performers = {{impl_spec.agent, kb, shape.bindings}};
        Graph plan = build_plan(plan_spec, plan_spec.agent);

        auto a = run_scenario(w, {plan}, trial);
        auto b = run_scenario(w, {plan}, trial);
        expect(format_event_log(a.events) == format_event_log(b.events),
               "seed-identical logs differ");

        size_t tasks = a.task_states.size();
        for (const auto& [task, state] : a.task_states)
            expect(state == TaskState{TaskStateKind::Executed, ""},
                   "task not executed: " + task.value);
        for (const auto& e : a.events)
            expect(e.tick <= 4 * tasks, "tick bound exceeded");
        expect(validate(a.final_graph).empty(), "final graph has violations");

        for (const auto& t : a.final_graph.edges(Property::TaskExecutionDrawnBy)) {
            auto chain = trace(a.final_graph, t.subject);
            expect(chain.performer == impl_spec.agent, "provenance chain incomplete");
        }
    }
}

}  // namespace

int main() {
    std::vector<Check> checks = {
        {"demo-fidelity", 1.0, demo_fidelity},
        {"conformance-soundness", 30.0, conformance_soundness},
        {"mutation-coverage", 5.0, mutation_coverage},
        {"matcher-oracle", 60.0, matcher_oracle},
        {"round-trip", 30.0, round_trip},
        {"lifecycle-completeness", 10.0, lifecycle_completeness},
    };

    bool all_ok = true;
    for (const auto& check : checks) {
        auto start = std::chrono::steady_clock::now();
        std::string failure;
        try {
            check.body();
        } catch (const std::exception& e) {
            failure = e.what();
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (failure.empty() && seconds > check.limit_seconds)
            failure = "runtime " + std::to_string(seconds) + "s over the " +
                      std::to_string(check.limit_seconds) + "s budget";
        if (failure.empty()) {
            std::printf("PASS %s (%.2fs)\n", check.name.c_str(), seconds);
        } else {
            std::printf("FAIL %s (%s)\n", check.name.c_str(), failure.c_str());
            all_ok = false;
        }
    }
    return all_ok ? 0 : 1;
}
