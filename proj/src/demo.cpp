#include "oasis2/demo.hpp"

#include <fstream>

namespace oasis2::demo {

namespace {

Iri swb(std::string_view local) { return Iri(std::string(kNamespace) + std::string(local)); }

RefSpec token_template_ref() {
    return RefSpec::as_new(swb("ERC721_token_template"), {swb("EthereumTokenERC721")});
}

}  // namespace

SerializeOptions options() {
    SerializeOptions opts;
    opts.prefix_hints[std::string(kNamespace)] = "swb";
    return opts;
}

BehaviourSpec template_spec() {
    TaskSpec task;
    task.task_id = swb("mint_ERC721_token_task");
    task.operator_ref = RefSpec::exactly(swb("mint"));
    task.operator_argument = RefSpec::exactly(swb("blockchain_digital_token"));
    task.object_ref = token_template_ref();
    task.outputs = {token_template_ref()};  // the minted token is the task object

    BehaviourSpec spec;
    spec.agent = swb("ERC721_standard");
    spec.behaviours = {{swb("mint_ERC721_token_behaviour"),
                        {{swb("mint_ERC721_token_goal"), {}, {task}}}}};
    return spec;
}

BehaviourSpec contract_spec() {
    TaskSpec task;
    task.task_id = swb("SWB_mint_token_task");
    task.operator_ref = RefSpec::exactly(swb("mint"));
    task.operator_argument = RefSpec::exactly(swb("blockchain_digital_token"));
    task.object_ref = token_template_ref();
    task.outputs = {token_template_ref()};

    BehaviourSpec spec;
    spec.agent = swb("SWB_smart_contract");
    spec.behaviours = {{swb("SWB_mint_token_behaviour"),
                        {{swb("SWB_mint_token_goal"), {}, {task}}}}};
    return spec;
}

BehaviourSpec plan_spec() {
    TaskSpec task;
    task.task_id = swb("buy_token32_task");
    task.operator_ref = RefSpec::exactly(swb("mint"));
    task.operator_argument = RefSpec::exactly(swb("blockchain_digital_token"));
    task.object_ref = RefSpec::exactly(swb("SWB_token32"));
    task.outputs = {RefSpec::exactly(swb("SWB_token32"))};

    BehaviourSpec spec;
    spec.agent = swb("token_buyer");
    spec.behaviours = {{swb("buy_token32_behaviour"),
                        {{swb("buy_token32_goal"), {}, {task}}}}};
    return spec;
}

Graph template_graph() { return build_template(template_spec()); }

Graph behaviour_graph() {
    auto tmpl = template_spec();
    auto concrete = contract_spec();
    Graph g = build_behaviour(concrete, TemplateLink{build_template(tmpl),
                                                    derive_element_map(concrete, tmpl)});
    // the contract knows the concrete token it will mint
    g.add_entity(swb("SWB_token32"), {domain_class(swb("EthereumTokenERC721"))});
    return g;
}

Graph plan_graph() {
    auto plan = plan_spec();
    auto concrete = contract_spec();
    return build_plan(plan, plan.agent,
                      SubmissionLink{behaviour_graph(), derive_element_map(plan, concrete)});
}

World world() {
    PerformerDef contract;
    contract.agent = swb("SWB_smart_contract");
    contract.knowledge = behaviour_graph();
    contract.bindings[swb("ERC721_token_template")] = swb("SWB_token32");

    World w;
    w.requester = swb("token_buyer");
    w.entruster = swb("SWB_orchestrator");
    w.performers = {contract};
    return w;
}

Artifacts run(uint64_t seed) {
    Artifacts art;
    art.template_graph = template_graph();
    art.behaviour_graph = behaviour_graph();
    art.plan_graph = plan_graph();
    art.result = run_scenario(world(), {art.plan_graph}, seed, options());
    if (art.result.entrustments.size() != 1 || art.result.linked.size() != 1)
        throw Error("demo scenario did not complete");
    art.entrustment_graph = art.result.entrustments.begin()->second;
    art.execution_graph = art.result.linked.begin()->second;
    return art;
}

Artifacts write_files(const std::filesystem::path& dir, uint64_t seed) {
    Artifacts art = run(seed);
    std::filesystem::create_directories(dir);
    auto opts = options();
    auto emit = [&](const char* name, const std::string& text) {
        std::ofstream out(dir / name, std::ios::binary);
        if (!out) throw Error("cannot write " + (dir / name).string());
        out << text;
    };
    emit("template.ttl", serialize(art.template_graph, opts));
    emit("behaviour.ttl", serialize(art.behaviour_graph, opts));
    emit("plan.ttl", serialize(art.plan_graph, opts));
    emit("entrustment.ttl", serialize(art.entrustment_graph, opts));
    emit("execution.ttl", serialize(art.execution_graph, opts));
    emit("events.log", format_event_log(art.result.events));
    return art;
}

}  // namespace oasis2::demo
