#pragma once

#include <filesystem>

#include "oasis2/builder.hpp"
#include "oasis2/harness.hpp"

namespace oasis2::demo {

// ERC-721 minting scenario: an abstract minting template, a smart-contract
// agent implementing it, and a buyer requesting that token number 32 be
// minted.
inline constexpr std::string_view kNamespace = "urn:example:swb#";

SerializeOptions options();

BehaviourSpec template_spec();
BehaviourSpec contract_spec();
BehaviourSpec plan_spec();

Graph template_graph();
Graph behaviour_graph();  // contract behaviour over the template, plus token facts
Graph plan_graph();       // buyer plan submitted to the contract behaviour

World world();

struct Artifacts {
    Graph template_graph;
    Graph behaviour_graph;
    Graph plan_graph;
    Graph entrustment_graph;
    Graph execution_graph;  // fully linked: execution + entrustment + plan + behaviour
    ScenarioResult result;
};

Artifacts run(uint64_t seed);

// Writes template.ttl, behaviour.ttl, plan.ttl, entrustment.ttl,
// execution.ttl and events.log into dir.
Artifacts write_files(const std::filesystem::path& dir, uint64_t seed);

}  // namespace oasis2::demo
