#include "oasis2/graph.hpp"

#include <array>
#include <deque>

namespace oasis2 {

namespace {

constexpr std::array<std::pair<LayerTag, std::string_view>, 5> kMarkers{{
    {LayerTag::Template, "TemplateThing"},
    {LayerTag::Behaviour, "BehaviourThing"},
    {LayerTag::Planning, "PlanningThing"},
    {LayerTag::Execution, "ExecutionThing"},
    {LayerTag::Entrustment, "EntrustmentThing"},
}};

constexpr std::array<std::pair<CoreClass, std::string_view>, 11> kCoreClasses{{
    {CoreClass::Agent, "Agent"},
    {CoreClass::Behaviour, "Behaviour"},
    {CoreClass::GoalDescription, "GoalDescription"},
    {CoreClass::TaskDescription, "TaskDescription"},
    {CoreClass::TaskOperator, "TaskOperator"},
    {CoreClass::TaskOperatorArgument, "TaskOperatorArgument"},
    {CoreClass::TaskObject, "TaskObject"},
    {CoreClass::TaskInputParameter, "TaskInputParameter"},
    {CoreClass::TaskOutputParameter, "TaskOutputParameter"},
    {CoreClass::TaskParameter, "TaskParameter"},
    {CoreClass::Action, "Action"},
}};

}  // namespace

std::string_view layer_marker_name(LayerTag t) {
    for (const auto& [tag, name] : kMarkers)
        if (tag == t) return name;
    return {};
}

std::optional<LayerTag> layer_from_marker(std::string_view name) {
    for (const auto& [tag, n] : kMarkers)
        if (n == name) return tag;
    return std::nullopt;
}

std::string_view core_class_name(CoreClass c) {
    for (const auto& [cls, name] : kCoreClasses)
        if (cls == c) return name;
    return {};
}

std::optional<CoreClass> core_class_from_name(std::string_view name) {
    for (const auto& [cls, n] : kCoreClasses)
        if (n == name) return cls;
    return std::nullopt;
}

Iri class_iri(const ElementClass& c, std::string_view ns) {
    if (auto core = core_of(c)) return Iri(std::string(ns) + std::string(core_class_name(*core)));
    return *domain_of(c);
}

void Graph::ensure_node(const Iri& id) {
    if (!id.absolute()) throw InvalidIriError("not an absolute IRI: '" + id.value + "'");
    nodes_.try_emplace(id);
}

void Graph::add_entity(const Iri& id, std::set<ElementClass> classes,
                       std::optional<LayerTag> layer) {
    ensure_node(id);
    NodeInfo& info = nodes_[id];
    if (layer && !info.layers.empty() && !info.layers.count(*layer)) {
        throw LayerConflict("layer conflict on " + id.value + ": already tagged " +
                            std::string(layer_marker_name(*info.layers.begin())) +
                            ", cannot also tag " + std::string(layer_marker_name(*layer)));
    }
    for (const auto& c : classes) {
        if (auto d = domain_of(c)) ensure_node(*d);
        info.classes.insert(c);
    }
    if (layer) info.layers.insert(*layer);
}

void Graph::add_triple(const Iri& subject, Property p, const Iri& object) {
    if (!nodes_.count(subject)) throw MissingNodeError("unknown subject node: " + subject.value);
    if (!nodes_.count(object)) throw MissingNodeError("unknown object node: " + object.value);
    triples_.insert(Triple{subject, p, object});
}

void Graph::add_triple(const Iri& subject, std::string_view property_name, const Iri& object) {
    auto p = property_from_name(property_name);
    if (!p)
        throw UnknownPropertyError("property not in the OASIS 2 vocabulary: '" +
                                   std::string(property_name) + "'");
    add_triple(subject, *p, object);
}

void Graph::add_subclass(const Iri& sub, const Iri& super) {
    if (!nodes_.count(sub)) throw MissingNodeError("unknown subclass node: " + sub.value);
    if (!nodes_.count(super)) throw MissingNodeError("unknown superclass node: " + super.value);
    if (sub == super) throw SubclassCycleError("subClassOf cycle at " + sub.value);
    // reject edges that would close a cycle
    if (superclass_closure_unsafe(super).count(sub))
        throw SubclassCycleError("subClassOf cycle through " + sub.value + " and " + super.value);
    subclass_edges_.insert({sub, super});
}

void Graph::merge(const Graph& other) {
    for (const auto& [id, info] : other.nodes_) {
        NodeInfo& mine = nodes_[id];
        mine.classes.insert(info.classes.begin(), info.classes.end());
        mine.layers.insert(info.layers.begin(), info.layers.end());
    }
    triples_.insert(other.triples_.begin(), other.triples_.end());
    subclass_edges_.insert(other.subclass_edges_.begin(), other.subclass_edges_.end());
}

void Graph::add_layer_unchecked(const Iri& id, LayerTag t) {
    ensure_node(id);
    nodes_[id].layers.insert(t);
}

void Graph::clear_layers(const Iri& id) {
    auto it = nodes_.find(id);
    if (it != nodes_.end()) it->second.layers.clear();
}

void Graph::remove_class(const Iri& id, const ElementClass& c) {
    auto it = nodes_.find(id);
    if (it != nodes_.end()) it->second.classes.erase(c);
}

void Graph::remove_triple(const Iri& subject, Property p, const Iri& object) {
    triples_.erase(Triple{subject, p, object});
}

const NodeInfo* Graph::node(const Iri& id) const {
    auto it = nodes_.find(id);
    return it == nodes_.end() ? nullptr : &it->second;
}

bool Graph::has_triple(const Iri& s, Property p, const Iri& o) const {
    return triples_.count(Triple{s, p, o}) != 0;
}

std::vector<Iri> Graph::objects(const Iri& subject, Property p) const {
    std::vector<Iri> out;
    for (auto it = triples_.lower_bound(Triple{subject, p, Iri("")}); it != triples_.end(); ++it) {
        if (it->subject != subject || it->property != p) break;
        out.push_back(it->object);
    }
    return out;
}

std::vector<Iri> Graph::subjects(Property p, const Iri& object) const {
    std::vector<Iri> out;
    for (const auto& t : triples_)
        if (t.property == p && t.object == object) out.push_back(t.subject);
    return out;
}

std::vector<Triple> Graph::edges(Property p) const {
    std::vector<Triple> out;
    for (const auto& t : triples_)
        if (t.property == p) out.push_back(t);
    return out;
}

std::vector<Triple> Graph::family_edges(PropertyFamily f) const {
    std::vector<Triple> out;
    for (Property p : family_members(f))
        for (const auto& t : edges(p)) out.push_back(t);
    return out;
}

std::set<Iri> Graph::superclass_closure_unsafe(const Iri& c) const {
    std::set<Iri> closure{c};
    std::deque<Iri> frontier{c};
    while (!frontier.empty()) {
        Iri cur = frontier.front();
        frontier.pop_front();
        for (const auto& [sub, super] : subclass_edges_) {
            if (sub == cur && closure.insert(super).second) frontier.push_back(super);
        }
    }
    return closure;
}

std::set<Iri> Graph::superclass_closure(const Iri& c) const {
    if (!nodes_.count(c)) throw UnknownClassError("unknown class node: " + c.value);
    return superclass_closure_unsafe(c);
}

bool Graph::is_instance_of(const Iri& x, const Iri& c) const {
    auto it = nodes_.find(x);
    if (it == nodes_.end()) return false;
    for (const auto& cls : it->second.classes) {
        if (auto d = domain_of(cls)) {
            if (superclass_closure_unsafe(*d).count(c)) return true;
        }
    }
    return false;
}

}  // namespace oasis2
