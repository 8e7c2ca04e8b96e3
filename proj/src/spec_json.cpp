#include "oasis2/spec_json.hpp"

#include <json.hpp>

#include "oasis2/errors.hpp"

namespace oasis2 {

namespace {

using nlohmann::json;

Iri iri_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string())
        throw SpecError(std::string("missing or non-string \"") + key + "\"");
    Iri iri(j[key].get<std::string>());
    if (!iri.absolute()) throw SpecError("not an absolute IRI: " + iri.value);
    return iri;
}

std::set<Iri> iri_set(const json& j, const char* key) {
    std::set<Iri> out;
    if (!j.contains(key)) return out;
    if (!j[key].is_array()) throw SpecError(std::string("\"") + key + "\" must be an array");
    for (const auto& e : j[key]) {
        if (!e.is_string()) throw SpecError(std::string("\"") + key + "\" entries must be strings");
        out.insert(Iri(e.get<std::string>()));
    }
    return out;
}

RefSpec parse_ref(const json& j) {
    if (!j.is_object()) throw SpecError("reference must be an object");
    if (j.contains("exactly")) {
        if (j.contains("as_new") || j.contains("classes"))
            throw SpecError("reference mixes \"exactly\" with \"as_new\"/\"classes\"");
        return RefSpec::exactly(iri_field(j, "exactly"));
    }
    if (j.contains("as_new")) return RefSpec::as_new(iri_field(j, "as_new"), iri_set(j, "classes"));
    throw SpecError("reference needs \"exactly\" or \"as_new\"");
}

std::vector<RefSpec> parse_refs(const json& j, const char* key) {
    std::vector<RefSpec> out;
    if (!j.contains(key)) return out;
    if (!j[key].is_array()) throw SpecError(std::string("\"") + key + "\" must be an array");
    for (const auto& e : j[key]) out.push_back(parse_ref(e));
    return out;
}

TaskSpec parse_task(const json& j) {
    TaskSpec task;
    task.task_id = iri_field(j, "id");
    if (!j.contains("operator")) throw SpecError("task " + task.task_id.value + " lacks operator");
    task.operator_ref = parse_ref(j["operator"]);
    if (j.contains("argument")) task.operator_argument = parse_ref(j["argument"]);
    if (j.contains("object")) task.object_ref = parse_ref(j["object"]);
    task.inputs = parse_refs(j, "inputs");
    task.outputs = parse_refs(j, "outputs");
    task.depends_on = iri_set(j, "depends_on");
    return task;
}

json ref_json(const RefSpec& ref) {
    json j = json::object();
    if (ref.mode == RefSpec::Mode::Exactly) {
        j["exactly"] = ref.target.value;
    } else {
        j["as_new"] = ref.target.value;
        if (!ref.required_classes.empty()) {
            json classes = json::array();
            for (const auto& c : ref.required_classes) classes.push_back(c.value);
            j["classes"] = std::move(classes);
        }
    }
    return j;
}

json iri_array(const std::set<Iri>& iris) {
    json out = json::array();
    for (const auto& i : iris) out.push_back(i.value);
    return out;
}

}  // namespace

BehaviourSpec spec_from_json(std::string_view text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw SpecError("invalid JSON");
    if (!doc.is_object()) throw SpecError("spec document must be a JSON object");

    BehaviourSpec spec;
    spec.agent = iri_field(doc, "agent");
    if (!doc.contains("behaviours") || !doc["behaviours"].is_array())
        throw SpecError("missing \"behaviours\" array");
    for (const auto& bj : doc["behaviours"]) {
        BehaviourUnitSpec behaviour;
        behaviour.behaviour_id = iri_field(bj, "id");
        if (!bj.contains("goals") || !bj["goals"].is_array())
            throw SpecError("behaviour " + behaviour.behaviour_id.value + " lacks goals");
        for (const auto& gj : bj["goals"]) {
            GoalSpec goal;
            goal.goal_id = iri_field(gj, "id");
            goal.depends_on = iri_set(gj, "depends_on");
            if (!gj.contains("tasks") || !gj["tasks"].is_array())
                throw SpecError("goal " + goal.goal_id.value + " lacks tasks");
            for (const auto& tj : gj["tasks"]) goal.tasks.push_back(parse_task(tj));
            behaviour.goals.push_back(std::move(goal));
        }
        spec.behaviours.push_back(std::move(behaviour));
    }
    return spec;
}

std::string spec_to_json(const BehaviourSpec& spec) {
    json doc;
    doc["agent"] = spec.agent.value;
    json behaviours = json::array();
    for (const auto& b : spec.behaviours) {
        json bj;
        bj["id"] = b.behaviour_id.value;
        json goals = json::array();
        for (const auto& g : b.goals) {
            json gj;
            gj["id"] = g.goal_id.value;
            if (!g.depends_on.empty()) gj["depends_on"] = iri_array(g.depends_on);
            json tasks = json::array();
            for (const auto& t : g.tasks) {
                json tj;
                tj["id"] = t.task_id.value;
                tj["operator"] = ref_json(t.operator_ref);
                if (t.operator_argument) tj["argument"] = ref_json(*t.operator_argument);
                if (t.object_ref) tj["object"] = ref_json(*t.object_ref);
                if (!t.inputs.empty()) {
                    json arr = json::array();
                    for (const auto& r : t.inputs) arr.push_back(ref_json(r));
                    tj["inputs"] = std::move(arr);
                }
                if (!t.outputs.empty()) {
                    json arr = json::array();
                    for (const auto& r : t.outputs) arr.push_back(ref_json(r));
                    tj["outputs"] = std::move(arr);
                }
                if (!t.depends_on.empty()) tj["depends_on"] = iri_array(t.depends_on);
                tasks.push_back(std::move(tj));
            }
            gj["tasks"] = std::move(tasks);
            goals.push_back(std::move(gj));
        }
        bj["goals"] = std::move(goals);
        behaviours.push_back(std::move(bj));
    }
    doc["behaviours"] = std::move(behaviours);
    return doc.dump(2) + "\n";
}

}  // namespace oasis2
