#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "oasis2/builder.hpp"
#include "oasis2/demo.hpp"
#include "oasis2/dot.hpp"
#include "oasis2/harness.hpp"
#include "oasis2/matcher.hpp"
#include "oasis2/spec_json.hpp"
#include "oasis2/turtle.hpp"
#include "oasis2/validator.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitInputError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw oasis2::Error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw oasis2::Error("cannot write " + out_path);
    out << text;
}

struct Options {
    std::string ns = std::string(oasis2::kDefaultNamespace);
    std::string out;
    std::string format = "turtle";
    uint64_t seed = 0;

    oasis2::SerializeOptions serialize_options() const {
        oasis2::SerializeOptions opts;
        opts.oasis_ns = ns;
        return opts;
    }
};

int cmd_build(const Options& opt, const std::string& kind, const std::string& spec_path,
              const std::string& link_path) {
    oasis2::BehaviourSpec spec = oasis2::spec_from_json(read_file(spec_path));
    oasis2::Graph g;
    if (kind == "template") {
        g = oasis2::build_template(spec);
    } else if (kind == "behaviour") {
        std::optional<oasis2::TemplateLink> link;
        if (!link_path.empty()) {
            auto tmpl = oasis2::spec_from_json(read_file(link_path));
            link = oasis2::TemplateLink{oasis2::build_template(tmpl),
                                        oasis2::derive_element_map(spec, tmpl)};
        }
        g = oasis2::build_behaviour(spec, link);
    } else {
        std::optional<oasis2::SubmissionLink> link;
        if (!link_path.empty()) {
            auto target = oasis2::spec_from_json(read_file(link_path));
            link = oasis2::SubmissionLink{oasis2::build_behaviour(target),
                                          oasis2::derive_element_map(spec, target)};
        }
        g = oasis2::build_plan(spec, spec.agent, link);
    }
    write_output(opt.out, opt.format == "dot" ? oasis2::to_dot(g)
                                              : oasis2::serialize(g, opt.serialize_options()));
    std::cerr << g.nodes().size() << " nodes, "
              << g.triples().size() + g.subclass_edges().size() << " edges\n";
    return kExitOk;
}

int cmd_validate(const Options& opt, const std::vector<std::string>& paths) {
    bool any_violation = false;
    for (const auto& path : paths) {
        oasis2::Graph g = oasis2::parse(read_file(path), opt.ns);
        auto violations = oasis2::validate(g);
        if (!violations.empty()) {
            any_violation = true;
            std::cout << path << ":\n" << oasis2::format_report(violations);
        }
    }
    if (!any_violation) std::cout << "conformant\n";
    return any_violation ? kExitViolations : kExitOk;
}

int cmd_match(const Options& opt, const std::string& plan_path,
              const std::vector<std::string>& kb_paths) {
    oasis2::Graph plan = oasis2::parse(read_file(plan_path), opt.ns);
    oasis2::Graph kb;
    for (const auto& path : kb_paths) kb.merge(oasis2::parse(read_file(path), opt.ns));

    auto assignment = oasis2::discover(plan, kb);
    bool complete = true;
    for (const auto& [task, candidates] : assignment.choices) {
        if (candidates.empty()) {
            complete = false;
            std::cout << task.value << "\tno candidates\n";
            continue;
        }
        for (const auto& c : candidates)
            std::cout << task.value << "\t" << c.agent.value << "\t" << c.task.value << "\n";
    }
    return complete ? kExitOk : kExitViolations;
}

int cmd_demo(const Options& opt) {
    std::string dir = opt.out.empty() ? "demo_out" : opt.out;
    auto art = oasis2::demo::write_files(dir, opt.seed);
    if (opt.format == "log") std::cout << oasis2::format_event_log(art.result.events);
    std::cerr << "wrote " << dir << "/{template,behaviour,plan,entrustment,execution}.ttl"
              << " and events.log\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"OASIS 2 agent-model toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // allow --ns/--seed/--out/--format after the subcommand

    Options opt;
    if (const char* env_ns = std::getenv("OASIS2_NS")) opt.ns = env_ns;
    app.add_option("--ns", opt.ns, "base namespace for the structural vocabulary");
    app.add_option("--seed", opt.seed, "scenario seed (default 0)");
    app.add_option("--out", opt.out, "output path ('-' for stdout)");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"turtle", "dot", "log"}));

    std::string kind, spec_path, link_path, plan_path;
    std::vector<std::string> paths;

    auto* build = app.add_subcommand("build", "build a layer graph from a JSON spec");
    build->add_option("kind", kind, "layer to build")
        ->required()
        ->check(CLI::IsMember({"template", "behaviour", "plan"}));
    build->add_option("spec", spec_path, "JSON spec file")->required();
    build->add_option("--link", link_path,
                      "counterpart spec: the template to overload (behaviour) or the "
                      "behaviour to submit to (plan)");

    auto* validate = app.add_subcommand("validate", "check structural conformance");
    validate->add_option("files", paths, "Turtle files")->required()->expected(-1);

    auto* match = app.add_subcommand("match", "discover behaviours compatible with a plan");
    match->add_option("plan", plan_path, "plan Turtle file")->required();
    match->add_option("kb", paths, "knowledge Turtle files")->required()->expected(-1);

    app.add_subcommand("demo", "run the token-minting scenario and export artifacts");

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) return cmd_build(opt, kind, spec_path, link_path);
        if (validate->parsed()) return cmd_validate(opt, paths);
        if (match->parsed()) return cmd_match(opt, plan_path, paths);
        return cmd_demo(opt);
    } catch (const oasis2::SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const oasis2::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
