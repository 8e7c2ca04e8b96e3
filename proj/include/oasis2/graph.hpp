#pragma once

#include <map>
#include <optional>
#include <set>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "oasis2/errors.hpp"
#include "oasis2/iri.hpp"
#include "oasis2/vocab.hpp"

namespace oasis2 {

// One of the five layer marker classes.
enum class LayerTag { Template, Behaviour, Planning, Execution, Entrustment };

std::string_view layer_marker_name(LayerTag t);   // "TemplateThing", ...
std::optional<LayerTag> layer_from_marker(std::string_view name);

// Built-in classes of the vocabulary. Domain classes carry their own Iri.
enum class CoreClass {
    Agent,
    Behaviour,
    GoalDescription,
    TaskDescription,
    TaskOperator,
    TaskOperatorArgument,
    TaskObject,
    TaskInputParameter,
    TaskOutputParameter,
    TaskParameter,
    Action,
};

std::string_view core_class_name(CoreClass c);
std::optional<CoreClass> core_class_from_name(std::string_view name);

using ElementClass = std::variant<CoreClass, Iri>;

inline ElementClass domain_class(Iri iri) { return ElementClass(std::move(iri)); }
inline bool is_core(const ElementClass& c) { return std::holds_alternative<CoreClass>(c); }
inline std::optional<CoreClass> core_of(const ElementClass& c) {
    if (auto* p = std::get_if<CoreClass>(&c)) return *p;
    return std::nullopt;
}
inline std::optional<Iri> domain_of(const ElementClass& c) {
    if (auto* p = std::get_if<Iri>(&c)) return *p;
    return std::nullopt;
}
Iri class_iri(const ElementClass& c, std::string_view ns = kDefaultNamespace);

struct Triple {
    Iri subject;
    Property property;
    Iri object;
    auto operator<=>(const Triple&) const = default;
};

struct NodeInfo {
    std::set<ElementClass> classes;
    // At most one tag on well-formed graphs; parsed fragments may carry more,
    // which validator rule V1 reports.
    std::set<LayerTag> layers;
    bool operator==(const NodeInfo&) const = default;
};

// Typed directed labeled graph over the closed OASIS 2 vocabulary.
// Value type: copy freely, compare with ==. Mutations are single-writer;
// all const queries are safe to run concurrently on a snapshot.
class Graph {
public:
    // Adds or extends a node. Classes are unioned with any prior ones; the
    // layer tag is set if given and not in conflict with an existing tag.
    void add_entity(const Iri& id, std::set<ElementClass> classes = {},
                    std::optional<LayerTag> layer = std::nullopt);

    void add_triple(const Iri& subject, Property p, const Iri& object);
    // Name-based variant; rejects names outside the closed vocabulary and
    // super-property names (those are computed, never asserted).
    void add_triple(const Iri& subject, std::string_view property_name, const Iri& object);

    void add_subclass(const Iri& sub, const Iri& super);

    void merge(const Graph& other);

    // Surgical mutators used by the parser, mutation tests, and tooling.
    // They bypass the add_entity conflict check; validate() reports the damage.
    void add_layer_unchecked(const Iri& id, LayerTag t);
    void clear_layers(const Iri& id);
    void remove_class(const Iri& id, const ElementClass& c);
    void remove_triple(const Iri& subject, Property p, const Iri& object);

    // Queries.
    bool has_node(const Iri& id) const { return nodes_.count(id) != 0; }
    const NodeInfo* node(const Iri& id) const;
    bool has_triple(const Iri& s, Property p, const Iri& o) const;
    std::vector<Iri> objects(const Iri& subject, Property p) const;
    std::vector<Iri> subjects(Property p, const Iri& object) const;
    std::vector<Triple> edges(Property p) const;
    std::vector<Triple> family_edges(PropertyFamily f) const;

    // {c} plus all transitive rdfs:subClassOf ancestors.
    std::set<Iri> superclass_closure(const Iri& c) const;
    // True iff some asserted domain class of x has c in its closure.
    bool is_instance_of(const Iri& x, const Iri& c) const;

    const std::map<Iri, NodeInfo>& nodes() const { return nodes_; }
    const std::set<Triple>& triples() const { return triples_; }
    const std::set<std::pair<Iri, Iri>>& subclass_edges() const { return subclass_edges_; }

    bool operator==(const Graph&) const = default;

private:
    void ensure_node(const Iri& id);
    std::set<Iri> superclass_closure_unsafe(const Iri& c) const;

    std::map<Iri, NodeInfo> nodes_;
    std::set<Triple> triples_;
    std::set<std::pair<Iri, Iri>> subclass_edges_;  // (sub, super), acyclic
};

}  // namespace oasis2
