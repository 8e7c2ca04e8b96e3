#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "oasis2/builder.hpp"
#include "oasis2/demo.hpp"
#include "oasis2/dot.hpp"
#include "oasis2/harness.hpp"
#include "oasis2/matcher.hpp"
#include "oasis2/spec_json.hpp"
#include "oasis2/turtle.hpp"
#include "oasis2/validator.hpp"

namespace py = pybind11;
using namespace oasis2;

namespace {

SerializeOptions make_options(const std::string& ns,
                              const std::map<std::string, std::string>& prefix_hints) {
    SerializeOptions opts;
    opts.oasis_ns = ns;
    opts.prefix_hints = prefix_hints;
    return opts;
}

std::optional<TemplateLink> template_link(const Graph* tmpl, const std::string& spec_json,
                                          const std::string& tmpl_spec_json) {
    if (!tmpl) return std::nullopt;
    return TemplateLink{*tmpl, derive_element_map(spec_from_json(spec_json),
                                                  spec_from_json(tmpl_spec_json))};
}

}  // namespace

PYBIND11_MODULE(_oasis2, m) {
    m.doc() = "Behaviouristic agent-model toolkit: typed knowledge graphs, canonical "
              "Turtle serialization, layer builders, structural validation, plan "
              "matching and a deterministic delegation protocol.";

    // translators run newest-first, so the specific one must be registered last
    auto base = py::register_exception<Error>(m, "Oasis2Error");
    py::register_exception<SyntaxError>(m, "TurtleSyntaxError", base);

    py::class_<Graph>(m, "Graph")
        .def(py::init<>())
        .def("node_count", [](const Graph& g) { return g.nodes().size(); })
        .def("edge_count",
             [](const Graph& g) { return g.triples().size() + g.subclass_edges().size(); })
        .def("has_node", [](const Graph& g, const std::string& iri) { return g.has_node(Iri(iri)); })
        .def("merge", &Graph::merge)
        .def("is_instance_of",
             [](const Graph& g, const std::string& x, const std::string& c) {
                 return g.is_instance_of(Iri(x), Iri(c));
             })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph: " + std::to_string(g.nodes().size()) + " nodes, " +
                   std::to_string(g.triples().size()) + " triples>";
        });

    m.def("parse", [](const std::string& text, const std::string& ns) { return parse(text, ns); },
          py::arg("text"), py::arg("ns") = std::string(kDefaultNamespace));
    m.def("serialize",
          [](const Graph& g, const std::string& ns,
             const std::map<std::string, std::string>& prefix_hints) {
              return serialize(g, make_options(ns, prefix_hints));
          },
          py::arg("graph"), py::arg("ns") = std::string(kDefaultNamespace),
          py::arg("prefix_hints") = std::map<std::string, std::string>{});
    m.def("to_dot", &to_dot, py::arg("graph"));

    m.def("validate",
          [](const Graph& g) {
              std::vector<std::tuple<std::string, std::vector<std::string>, std::string>> out;
              for (const auto& v : validate(g)) {
                  std::vector<std::string> subjects;
                  for (const auto& s : v.subjects) subjects.push_back(s.value);
                  out.emplace_back(v.rule, std::move(subjects), v.message);
              }
              return out;
          },
          py::arg("graph"), "Structural conformance check; returns (rule, subjects, message) tuples.");

    m.def("build_template",
          [](const std::string& spec_json) { return build_template(spec_from_json(spec_json)); },
          py::arg("spec_json"));
    m.def("build_behaviour",
          [](const std::string& spec_json, const Graph* tmpl, const std::string& tmpl_spec_json) {
              return build_behaviour(spec_from_json(spec_json),
                                     template_link(tmpl, spec_json, tmpl_spec_json));
          },
          py::arg("spec_json"), py::arg("template_graph") = nullptr,
          py::arg("template_spec_json") = std::string());
    m.def("build_plan",
          [](const std::string& spec_json, const std::string& requester) {
              return build_plan(spec_from_json(spec_json),
                                requester.empty() ? spec_from_json(spec_json).agent
                                                  : Iri(requester));
          },
          py::arg("spec_json"), py::arg("requester") = std::string());

    m.def("discover",
          [](const Graph& plan, const Graph& kb) {
              std::map<std::string, std::vector<std::map<std::string, std::string>>> out;
              for (const auto& [task, candidates] : discover(plan, kb).choices) {
                  auto& rows = out[task.value];
                  for (const auto& c : candidates)
                      rows.push_back({{"agent", c.agent.value},
                                      {"behaviour", c.behaviour.value},
                                      {"goal", c.goal.value},
                                      {"task", c.task.value}});
              }
              return out;
          },
          py::arg("plan"), py::arg("kb"),
          "Per plan task, the compatible behaviour candidates in deterministic order.");

    m.def("run_demo",
          [](const std::filesystem::path& dir, uint64_t seed) {
              auto art = demo::write_files(dir, seed);
              return py::make_tuple(art.execution_graph, format_event_log(art.result.events));
          },
          py::arg("dir"), py::arg("seed") = 0,
          "Runs the token-minting scenario, writes the artifact files, and returns "
          "(execution_graph, event_log).");

    m.def("trace",
          [](const Graph& g, const std::string& execution_task) {
              const auto chain = trace(g, Iri(execution_task));
              py::dict out;
              out["execution_task"] = chain.execution_task.value;
              out["behaviour_task"] = chain.behaviour_task.value;
              auto set_opt = [&](const char* key, const std::optional<Iri>& v) {
                  out[key] = v ? py::object(py::str(v->value)) : py::object(py::none());
              };
              set_opt("template_task", chain.template_task);
              set_opt("plan_task", chain.plan_task);
              set_opt("entrustment_task", chain.entrustment_task);
              set_opt("performer", chain.performer);
              return out;
          },
          py::arg("graph"), py::arg("execution_task"));
}
