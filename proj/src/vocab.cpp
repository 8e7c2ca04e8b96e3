#include "oasis2/vocab.hpp"

#include <array>
#include <map>
#include <vector>

namespace oasis2 {

namespace {

struct PropertyInfo {
    Property prop;
    std::string_view name;
    std::optional<PropertyFamily> family;
};

constexpr std::array<PropertyInfo, 67> kProperties{{
    {Property::HasBehaviour, "hasBehaviour", {}},
    {Property::ConsistsOfGoalDescription, "consistsOfGoalDescription", {}},
    {Property::ConsistsOfTaskDescription, "consistsOfTaskDescription", {}},
    {Property::DependsOn, "dependsOn", {}},
    {Property::HasTaskOperator, "hasTaskOperator", {}},
    {Property::HasTaskOperatorArgument, "hasTaskOperatorArgument", {}},
    {Property::HasTaskObject, "hasTaskObject", {}},
    {Property::HasTaskInputParameter, "hasTaskInputParameter", {}},
    {Property::HasTaskOutputParameter, "hasTaskOutputParameter", {}},
    {Property::RefersExactlyTo, "refersExactlyTo", {}},
    {Property::RefersAsNewTo, "refersAsNewTo", {}},
    {Property::RefersAsInstanceOf, "refersAsInstanceOf", {}},
    {Property::PerformsPlanExecution, "performsPlanExecution", PropertyFamily::Performs},
    {Property::RequestsPlan, "requestsPlan", {}},
    {Property::Entrusts, "entrusts", {}},

    {Property::OverloadsBehaviour, "overloadsBehaviour", PropertyFamily::Overloads},
    {Property::OverloadsGoalDescription, "overloadsGoalDescription", PropertyFamily::Overloads},
    {Property::OverloadsTaskDescription, "overloadsTaskDescription", PropertyFamily::Overloads},
    {Property::OverloadsTaskObject, "overloadsTaskObject", PropertyFamily::Overloads},
    {Property::OverloadsTaskOperator, "overloadsTaskOperator", PropertyFamily::Overloads},
    {Property::OverloadsTaskInputParameter, "overloadsTaskInputParameter", PropertyFamily::Overloads},
    {Property::OverloadsTaskOutputParameter, "overloadsTaskOutputParameter", PropertyFamily::Overloads},

    {Property::PlanExecutionDrawnBy, "planExecutionDrawnBy", PropertyFamily::DrawnBy},
    {Property::GoalExecutionDrawnBy, "goalExecutionDrawnBy", PropertyFamily::DrawnBy},
    {Property::TaskExecutionDrawnBy, "taskExecutionDrawnBy", PropertyFamily::DrawnBy},
    {Property::TaskObjectDrawnBy, "taskObjectDrawnBy", PropertyFamily::DrawnBy},
    {Property::TaskOperatorDrawnBy, "taskOperatorDrawnBy", PropertyFamily::DrawnBy},
    {Property::TaskInputParameterDrawnBy, "taskInputParameterDrawnBy", PropertyFamily::DrawnBy},
    {Property::TaskOutputParameterDrawnBy, "taskOutputParameterDrawnBy", PropertyFamily::DrawnBy},

    {Property::PlanDescriptionSubmittedTo, "planDescriptionSubmittedTo", PropertyFamily::SubmittedTo},
    {Property::GoalDescriptionSubmittedTo, "goalDescriptionSubmittedTo", PropertyFamily::SubmittedTo},
    {Property::TaskDescriptionSubmittedTo, "taskDescriptionSubmittedTo", PropertyFamily::SubmittedTo},
    {Property::TaskObjectSubmittedTo, "taskObjectSubmittedTo", PropertyFamily::SubmittedTo},
    {Property::TaskOperatorSubmittedTo, "taskOperatorSubmittedTo", PropertyFamily::SubmittedTo},
    {Property::TaskInputParameterSubmittedTo, "taskInputParameterSubmittedTo", PropertyFamily::SubmittedTo},
    {Property::TaskOutputParameterSubmittedTo, "taskOutputParameterSubmittedTo", PropertyFamily::SubmittedTo},

    {Property::HasPlanExecution, "hasPlanExecution", PropertyFamily::HasExecution},
    {Property::HasGoalExecution, "hasGoalExecution", PropertyFamily::HasExecution},
    {Property::HasTaskExecution, "hasTaskExecution", PropertyFamily::HasExecution},
    {Property::HasTaskObjectExecution, "hasTaskObjectExecution", PropertyFamily::HasExecution},
    {Property::HasTaskOperatorExecution, "hasTaskOperatorExecution", PropertyFamily::HasExecution},
    {Property::HasTaskInputParameterExecution, "hasTaskInputParameterExecution", PropertyFamily::HasExecution},
    {Property::HasTaskOutputParameterExecution, "hasTaskOutputParameterExecution", PropertyFamily::HasExecution},

    {Property::PlanEntrustedBy, "planEntrustedBy", PropertyFamily::EntrustedBy},
    {Property::GoalEntrustedBy, "goalEntrustedBy", PropertyFamily::EntrustedBy},
    {Property::TaskEntrustedBy, "taskEntrustedBy", PropertyFamily::EntrustedBy},
    {Property::TaskObjectEntrustedBy, "taskObjectEntrustedBy", PropertyFamily::EntrustedBy},
    {Property::TaskOperatorEntrustedBy, "taskOperatorEntrustedBy", PropertyFamily::EntrustedBy},
    {Property::TaskOperatorArgumentEntrustedBy, "taskOperatorArgumentEntrustedBy", PropertyFamily::EntrustedBy},
    {Property::TaskInputParameterEntrustedBy, "taskInputParameterEntrustedBy", PropertyFamily::EntrustedBy},
    {Property::TaskOutputParameterEntrustedBy, "taskOutputParameterEntrustedBy", PropertyFamily::EntrustedBy},

    {Property::PlanEntrustedFrom, "planEntrustedFrom", PropertyFamily::EntrustedFrom},
    {Property::GoalEntrustedFrom, "goalEntrustedFrom", PropertyFamily::EntrustedFrom},
    {Property::TaskEntrustedFrom, "taskEntrustedFrom", PropertyFamily::EntrustedFrom},
    {Property::TaskObjectEntrustedFrom, "taskObjectEntrustedFrom", PropertyFamily::EntrustedFrom},
    {Property::TaskOperatorEntrustedFrom, "taskOperatorEntrustedFrom", PropertyFamily::EntrustedFrom},
    {Property::TaskOperatorArgumentEntrustedFrom, "taskOperatorArgumentEntrustedFrom", PropertyFamily::EntrustedFrom},
    {Property::TaskInputParameterEntrustedFrom, "taskInputParameterEntrustedFrom", PropertyFamily::EntrustedFrom},
    {Property::TaskOutputParameterEntrustedFrom, "taskOutputParameterEntrustedFrom", PropertyFamily::EntrustedFrom},

    {Property::PlanEntrustedWith, "planEntrustedWith", PropertyFamily::EntrustedWith},
    {Property::GoalEntrustedWith, "goalEntrustedWith", PropertyFamily::EntrustedWith},
    {Property::TaskEntrustedWith, "taskEntrustedWith", PropertyFamily::EntrustedWith},
    {Property::TaskObjectEntrustedWith, "taskObjectEntrustedWith", PropertyFamily::EntrustedWith},
    {Property::TaskOperatorEntrustedWith, "taskOperatorEntrustedWith", PropertyFamily::EntrustedWith},
    {Property::TaskOperatorArgumentEntrustedWith, "taskOperatorArgumentEntrustedWith", PropertyFamily::EntrustedWith},
    {Property::TaskInputParameterEntrustedWith, "taskInputParameterEntrustedWith", PropertyFamily::EntrustedWith},
    {Property::TaskOutputParameterEntrustedWith, "taskOutputParameterEntrustedWith", PropertyFamily::EntrustedWith},
}};

const PropertyInfo& info(Property p) {
    for (const auto& i : kProperties)
        if (i.prop == p) return i;
    // unreachable for valid enum values
    return kProperties[0];
}

}  // namespace

std::string_view property_name(Property p) { return info(p).name; }

std::optional<Property> property_from_name(std::string_view name) {
    for (const auto& i : kProperties)
        if (i.name == name) return i.prop;
    return std::nullopt;
}

std::string_view family_name(PropertyFamily f) {
    switch (f) {
        case PropertyFamily::Overloads: return "overloads";
        case PropertyFamily::DrawnBy: return "drawnBy";
        case PropertyFamily::SubmittedTo: return "submittedTo";
        case PropertyFamily::HasExecution: return "hasExecution";
        case PropertyFamily::EntrustedBy: return "entrustedBy";
        case PropertyFamily::EntrustedFrom: return "entrustedFrom";
        case PropertyFamily::EntrustedWith: return "entrustedWith";
        case PropertyFamily::Performs: return "performs";
    }
    return {};
}

std::optional<PropertyFamily> family_of(Property p) { return info(p).family; }

std::span<const Property> family_members(PropertyFamily f) {
    static const std::map<PropertyFamily, std::vector<Property>> members = [] {
        std::map<PropertyFamily, std::vector<Property>> m;
        for (const auto& i : kProperties)
            if (i.family) m[*i.family].push_back(i.prop);
        return m;
    }();
    auto it = members.find(f);
    if (it == members.end()) return {};
    return it->second;
}

std::span<const Property> all_properties() {
    static const std::vector<Property> all = [] {
        std::vector<Property> v;
        for (const auto& i : kProperties) v.push_back(i.prop);
        return v;
    }();
    return all;
}

}  // namespace oasis2
