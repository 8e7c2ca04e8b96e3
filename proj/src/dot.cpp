#include "oasis2/dot.hpp"

#include <map>
#include <sstream>

namespace oasis2 {

namespace {

std::string escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::string class_label(const ElementClass& c) {
    if (auto core = core_of(c)) return std::string(core_class_name(*core));
    return std::string(domain_of(c)->local_name());
}

}  // namespace

std::string to_dot(const Graph& g) {
    std::map<Iri, std::string> ids;
    size_t n = 0;
    for (const auto& [iri, info] : g.nodes()) ids[iri] = "n" + std::to_string(n++);

    std::ostringstream out;
    out << "digraph {\n  rankdir=LR;\n  node [shape=box, fontsize=10];\n";
    for (const auto& [iri, info] : g.nodes()) {
        std::string label = escape(iri.local_name());
        std::string annot;
        for (const auto& c : info.classes) {
            if (!annot.empty()) annot += ", ";
            annot += class_label(c);
        }
        for (LayerTag t : info.layers) {
            if (!annot.empty()) annot += ", ";
            annot += std::string(layer_marker_name(t));
        }
        if (!annot.empty()) label += "\\n" + escape(annot);
        out << "  " << ids[iri] << " [label=\"" << label << "\"];\n";
    }
    for (const auto& t : g.triples())
        out << "  " << ids[t.subject] << " -> " << ids[t.object] << " [label=\""
            << property_name(t.property) << "\"];\n";
    for (const auto& [sub, super] : g.subclass_edges())
        out << "  " << ids[sub] << " -> " << ids[super]
            << " [style=dashed, label=\"subClassOf\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace oasis2
