#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oasis2/turtle.hpp"
#include "support/random_model.hpp"

using namespace oasis2;
using testsupport::rnd_iri;

namespace {

SerializeOptions hinted() {
    SerializeOptions opts;
    opts.prefix_hints[testsupport::kNs] = "rnd";
    return opts;
}

void check_roundtrip(const Graph& g, const SerializeOptions& opts = {}) {
    std::string text = serialize(g, opts);
    Graph back = parse(text, opts.oasis_ns);
    CHECK(back == g);
    CHECK(serialize(back, opts) == text);  // byte-stable
}

}  // namespace

TEST_CASE("round trip over random graphs at every lifecycle stage") {
    std::mt19937 rng(7101);
    int graphs = 0;
    while (graphs < 200) {
        auto lc = testsupport::random_lifecycle(rng);
        for (const Graph* g : {&lc.template_graph, &lc.behaviour_graph, &lc.plan_graph,
                               &lc.entrustment_graph, &lc.execution_graph, &lc.linked_graph}) {
            check_roundtrip(*g);
            check_roundtrip(*g, hinted());
            ++graphs;
        }
    }
}

TEST_CASE("output is canonical") {
    std::mt19937 rng(7102);
    auto lc = testsupport::random_lifecycle(rng);
    std::string text = serialize(lc.linked_graph);

    SUBCASE("prefixes come first, sorted") {
        auto first_subject = text.find("\n\n");
        REQUIRE(first_subject != std::string::npos);
        std::string header = text.substr(0, first_subject);
        size_t pos = 0;
        std::string prev;
        while ((pos = header.find("@prefix", pos)) != std::string::npos) {
            size_t name_start = pos + 8;
            std::string name = header.substr(name_start, header.find(':', name_start) - name_start);
            CHECK(prev < name);
            prev = name;
            ++pos;
        }
        CHECK_FALSE(prev.empty());
    }

    SUBCASE("insertion order does not matter") {
        Graph ab;
        ab.merge(lc.entrustment_graph);
        ab.merge(lc.execution_graph);
        Graph ba;
        ba.merge(lc.execution_graph);
        ba.merge(lc.entrustment_graph);
        CHECK(serialize(ab) == serialize(ba));
    }

    SUBCASE("types render as 'a'") {
        CHECK(text.find(" a oasis:") != std::string::npos);
        CHECK(text.find("rdf:type") == std::string::npos);
    }
}

TEST_CASE("comments and whitespace are tolerated") {
    std::string text =
        "# leading comment\n"
        "@prefix oasis: <urn:oasis2:core#> .\n"
        "@prefix ex: <urn:example:x#> .\n\n"
        "ex:a a oasis:Agent ;  # trailing comment\n"
        "    oasis:hasBehaviour ex:b .\n"
        "ex:b a oasis:Behaviour, oasis:BehaviourThing .\n";
    Graph g = parse(text);
    CHECK(g.has_triple(Iri("urn:example:x#a"), Property::HasBehaviour, Iri("urn:example:x#b")));
    const NodeInfo* b = g.node(Iri("urn:example:x#b"));
    REQUIRE(b);
    CHECK(b->classes.count(ElementClass(CoreClass::Behaviour)) == 1);
    CHECK(b->layers.count(LayerTag::Behaviour) == 1);
}

TEST_CASE("syntax errors carry line and column") {
    std::string text =
        "@prefix oasis: <urn:oasis2:core#> .\n"
        "@prefix ex: <urn:example:x#> .\n"
        "ex:a oasis:hasBehaviour .\n";  // missing object
    try {
        parse(text);
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.line == 3);
        CHECK(e.column > 0);
    }
}

TEST_CASE("undeclared prefixes are syntax errors") {
    CHECK_THROWS_AS(parse("nope:a a nope:B .\n"), SyntaxError);
}

TEST_CASE("unknown properties in the structural namespace are rejected") {
    std::string text =
        "@prefix oasis: <urn:oasis2:core#> .\n"
        "@prefix ex: <urn:example:x#> .\n"
        "ex:a oasis:hasFriend ex:b .\n";
    CHECK_THROWS_AS(parse(text), UnknownPropertyError);

    std::string foreign =
        "@prefix ex: <urn:example:x#> .\n"
        "ex:a ex:unknownProp ex:b .\n";
    CHECK_THROWS_AS(parse(foreign), UnknownPropertyError);
}

TEST_CASE("layer-conflicting input parses and is left to the validator") {
    std::string text =
        "@prefix oasis: <urn:oasis2:core#> .\n"
        "@prefix ex: <urn:example:x#> .\n"
        "ex:b a oasis:Behaviour, oasis:TemplateThing, oasis:ExecutionThing .\n";
    Graph g = parse(text);
    CHECK(g.node(Iri("urn:example:x#b"))->layers.size() == 2);
}

TEST_CASE("a custom structural namespace applies symmetrically") {
    std::mt19937 rng(7103);
    auto lc = testsupport::random_lifecycle(rng);
    SerializeOptions opts;
    opts.oasis_ns = "https://example.org/agents#";
    std::string text = serialize(lc.behaviour_graph, opts);
    CHECK(text.find("urn:oasis2:core") == std::string::npos);
    CHECK(parse(text, opts.oasis_ns) == lc.behaviour_graph);
}

TEST_CASE("empty graph serializes to just the prefix header") {
    Graph g;
    Graph back = parse(serialize(g));
    CHECK(back == g);
}
