#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "oasis2/demo.hpp"
#include "oasis2/validator.hpp"
#include "support/random_model.hpp"

using namespace oasis2;

namespace {

Iri swb(std::string_view local) {
    return Iri(std::string(demo::kNamespace) + std::string(local));
}

bool cites(const std::vector<Violation>& violations, const std::string& rule) {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.rule == rule; });
}

}  // namespace

TEST_CASE("builder output is conformant at every lifecycle stage") {
    std::mt19937 rng(7301);
    for (int trial = 0; trial < 50; ++trial) {
        auto lc = testsupport::random_lifecycle(rng);
        CHECK(validate(lc.template_graph).empty());
        CHECK(validate(lc.behaviour_graph).empty());
        CHECK(validate(lc.plan_graph).empty());
        CHECK(validate(lc.entrustment_graph).empty());
        CHECK(validate(lc.execution_graph).empty());
        CHECK(validate(lc.linked_graph).empty());
    }
}

TEST_CASE("V1: a double-tagged node is reported") {
    Graph g = demo::template_graph();
    g.add_layer_unchecked(swb("mint_ERC721_token_task"), LayerTag::Execution);
    auto v = validate(g);
    REQUIRE(cites(v, "V1"));
    for (const auto& violation : v)
        if (violation.rule == "V1")
            CHECK(std::count(violation.subjects.begin(), violation.subjects.end(),
                             swb("mint_ERC721_token_task")) == 1);
}

TEST_CASE("V1: a structural node without any layer is reported") {
    Graph g = demo::template_graph();
    g.clear_layers(swb("mint_ERC721_token_goal"));
    CHECK(cites(validate(g), "V1"));
}

TEST_CASE("V2: a task without an operator is reported") {
    Graph g = demo::template_graph();
    Iri task = swb("mint_ERC721_token_task");
    g.remove_triple(task, Property::HasTaskOperator, minted_operator(task));
    CHECK(cites(validate(g), "V2"));
}

TEST_CASE("V2: a behaviour with no owning agent is reported") {
    Graph g = demo::template_graph();
    g.remove_triple(swb("ERC721_standard"), Property::HasBehaviour,
                    swb("mint_ERC721_token_behaviour"));
    CHECK(cites(validate(g), "V2"));
}

TEST_CASE("V3: an element with both reference modes is reported") {
    Graph g = demo::template_graph();
    Iri obj = minted_object(swb("mint_ERC721_token_task"));
    g.add_triple(obj, Property::RefersExactlyTo, swb("mint"));
    CHECK(cites(validate(g), "V3"));
}

TEST_CASE("V3: an element with no reference is reported") {
    Graph g = demo::template_graph();
    Iri op = minted_operator(swb("mint_ERC721_token_task"));
    g.remove_triple(op, Property::RefersExactlyTo, swb("mint"));
    CHECK(cites(validate(g), "V3"));
}

TEST_CASE("V4: an overloads square that does not commute is reported") {
    Graph g = demo::behaviour_graph();
    g.remove_triple(swb("SWB_mint_token_behaviour"), Property::OverloadsBehaviour,
                    swb("mint_ERC721_token_behaviour"));
    CHECK(cites(validate(g), "V4"));
}

TEST_CASE("V4: an overloads edge between different classes is reported") {
    Graph g = demo::behaviour_graph();
    Iri task = swb("SWB_mint_token_task");
    g.remove_triple(minted_object(task), Property::OverloadsTaskObject,
                    minted_object(swb("mint_ERC721_token_task")));
    g.add_triple(minted_object(task), Property::OverloadsTaskObject,
                 minted_operator(swb("mint_ERC721_token_task")));
    CHECK(cites(validate(g), "V4"));
}

TEST_CASE("V5: a dependsOn cycle is reported with its nodes") {
    Graph g = demo::template_graph();
    Iri task = swb("mint_ERC721_token_task");
    g.add_triple(task, Property::DependsOn, task);
    auto v = validate(g);
    REQUIRE(cites(v, "V5"));
    for (const auto& violation : v)
        if (violation.rule == "V5") CHECK(violation.subjects.front() == task);
}

TEST_CASE("V6: a drawnBy square that does not commute is reported") {
    auto art = demo::run(0);
    Graph g = art.execution_graph;
    g.remove_triple(Iri(swb("SWB_mint_token_behaviour").value + "_execution"),
                    Property::PlanExecutionDrawnBy, swb("SWB_mint_token_behaviour"));
    CHECK(cites(validate(g), "V6"));
}

TEST_CASE("V7: a submittedTo square that does not commute is reported") {
    Graph g = demo::plan_graph();
    g.remove_triple(swb("buy_token32_behaviour"), Property::PlanDescriptionSubmittedTo,
                    swb("SWB_mint_token_behaviour"));
    CHECK(cites(validate(g), "V7"));
}

TEST_CASE("V7: an entrusts edge to a non-agent is reported") {
    auto art = demo::run(0);
    Graph g = art.execution_graph;
    Iri ent_task = Iri(swb("buy_token32_task").value + "_entrustment");
    g.remove_triple(ent_task, Property::Entrusts, swb("SWB_smart_contract"));
    g.add_triple(ent_task, Property::Entrusts, swb("SWB_token32"));
    CHECK(cites(validate(g), "V7"));
}

TEST_CASE("V8: a binding outside the required class is reported") {
    auto art = demo::run(0);
    Graph g = art.execution_graph;
    g.remove_class(swb("SWB_token32"), domain_class(swb("EthereumTokenERC721")));
    auto v = validate(g);
    REQUIRE(cites(v, "V8"));
}

TEST_CASE("validation is deterministic and sorted") {
    Graph g = demo::behaviour_graph();
    g.add_layer_unchecked(swb("SWB_mint_token_task"), LayerTag::Execution);
    g.remove_triple(swb("SWB_mint_token_behaviour"), Property::OverloadsBehaviour,
                    swb("mint_ERC721_token_behaviour"));
    auto a = validate(g);
    auto b = validate(g);
    CHECK(a == b);
    CHECK(std::is_sorted(a.begin(), a.end()));
    CHECK_FALSE(a.empty());
}

TEST_CASE("validation never throws on hostile graphs") {
    Graph g;
    g.add_entity(Iri("urn:x:lonely"), {CoreClass::TaskDescription}, LayerTag::Planning);
    g.add_entity(Iri("urn:x:agent"), {CoreClass::Agent});
    g.add_entity(Iri("urn:x:both"), {CoreClass::Behaviour, CoreClass::TaskObject},
                 LayerTag::Template);
    g.add_triple(Iri("urn:x:agent"), Property::Entrusts, Iri("urn:x:lonely"));
    auto v = validate(g);
    CHECK_FALSE(v.empty());
    CHECK_FALSE(format_report(v).empty());
}

TEST_CASE("the report format is line-oriented with tab separators") {
    std::vector<Violation> v{{"V1", {Iri("urn:x:a")}, "conflicting layer tags"}};
    CHECK(format_report(v) == "V1\turn:x:a\tconflicting layer tags\n");
}
