#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oasis2/builder.hpp"
#include "oasis2/demo.hpp"
#include "oasis2/spec_json.hpp"

using namespace oasis2;

TEST_CASE("spec documents round-trip through JSON") {
    for (const BehaviourSpec& spec :
         {demo::template_spec(), demo::contract_spec(), demo::plan_spec()}) {
        std::string text = spec_to_json(spec);
        BehaviourSpec back = spec_from_json(text);
        CHECK(spec_to_json(back) == text);
        CHECK(build_template(back) == build_template(spec));
    }
}

TEST_CASE("malformed documents are rejected with SpecError") {
    CHECK_THROWS_AS(spec_from_json("not json"), SpecError);
    CHECK_THROWS_AS(spec_from_json("[]"), SpecError);
    CHECK_THROWS_AS(spec_from_json("{}"), SpecError);
    CHECK_THROWS_AS(spec_from_json(R"({"agent": "urn:x:a"})"), SpecError);
    CHECK_THROWS_AS(spec_from_json(R"({"agent": "relative", "behaviours": []})"), SpecError);
    // a task without an operator
    CHECK_THROWS_AS(spec_from_json(R"({
        "agent": "urn:x:a",
        "behaviours": [{"id": "urn:x:b", "goals": [{"id": "urn:x:g",
            "tasks": [{"id": "urn:x:t"}]}]}]})"),
                    SpecError);
    // a reference with both modes
    CHECK_THROWS_AS(spec_from_json(R"({
        "agent": "urn:x:a",
        "behaviours": [{"id": "urn:x:b", "goals": [{"id": "urn:x:g",
            "tasks": [{"id": "urn:x:t",
                       "operator": {"exactly": "urn:x:op", "as_new": "urn:x:e"}}]}]}]})"),
                    SpecError);
}

TEST_CASE("references keep their mode and classes") {
    std::string text = R"({
        "agent": "urn:x:a",
        "behaviours": [{"id": "urn:x:b", "goals": [{"id": "urn:x:g",
            "tasks": [{"id": "urn:x:t",
                       "operator": {"exactly": "urn:x:mint"},
                       "object": {"as_new": "urn:x:slot", "classes": ["urn:x:C1", "urn:x:C2"]},
                       "depends_on": []}]}]}]})";
    BehaviourSpec spec = spec_from_json(text);
    const TaskSpec& task = spec.behaviours[0].goals[0].tasks[0];
    CHECK(task.operator_ref.mode == RefSpec::Mode::Exactly);
    REQUIRE(task.object_ref);
    CHECK(task.object_ref->mode == RefSpec::Mode::AsNew);
    CHECK(task.object_ref->required_classes == std::set<Iri>{Iri("urn:x:C1"), Iri("urn:x:C2")});
    CHECK_FALSE(task.operator_argument);
    CHECK(task.inputs.empty());
}
