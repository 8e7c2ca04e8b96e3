#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "oasis2/iri.hpp"

namespace oasis2 {

inline constexpr std::string_view kDefaultNamespace = "urn:oasis2:core#";
inline constexpr std::string_view kRdfNamespace = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfsNamespace = "http://www.w3.org/2000/01/rdf-schema#";

// The closed set of assertable object properties. Super-properties
// (overloads, drawnBy, ...) are never asserted directly; queries over them
// are computed from their members (see PropertyFamily).
enum class Property {
    HasBehaviour,
    ConsistsOfGoalDescription,
    ConsistsOfTaskDescription,
    DependsOn,
    HasTaskOperator,
    HasTaskOperatorArgument,
    HasTaskObject,
    HasTaskInputParameter,
    HasTaskOutputParameter,
    RefersExactlyTo,
    RefersAsNewTo,
    RefersAsInstanceOf,
    PerformsPlanExecution,
    RequestsPlan,
    Entrusts,
    // overloads
    OverloadsBehaviour,
    OverloadsGoalDescription,
    OverloadsTaskDescription,
    OverloadsTaskObject,
    OverloadsTaskOperator,
    OverloadsTaskInputParameter,
    OverloadsTaskOutputParameter,
    // drawnBy
    PlanExecutionDrawnBy,
    GoalExecutionDrawnBy,
    TaskExecutionDrawnBy,
    TaskObjectDrawnBy,
    TaskOperatorDrawnBy,
    TaskInputParameterDrawnBy,
    TaskOutputParameterDrawnBy,
    // submittedTo
    PlanDescriptionSubmittedTo,
    GoalDescriptionSubmittedTo,
    TaskDescriptionSubmittedTo,
    TaskObjectSubmittedTo,
    TaskOperatorSubmittedTo,
    TaskInputParameterSubmittedTo,
    TaskOutputParameterSubmittedTo,
    // hasExecution
    HasPlanExecution,
    HasGoalExecution,
    HasTaskExecution,
    HasTaskObjectExecution,
    HasTaskOperatorExecution,
    HasTaskInputParameterExecution,
    HasTaskOutputParameterExecution,
    // entrustedBy
    PlanEntrustedBy,
    GoalEntrustedBy,
    TaskEntrustedBy,
    TaskObjectEntrustedBy,
    TaskOperatorEntrustedBy,
    TaskOperatorArgumentEntrustedBy,
    TaskInputParameterEntrustedBy,
    TaskOutputParameterEntrustedBy,
    // entrustedFrom
    PlanEntrustedFrom,
    GoalEntrustedFrom,
    TaskEntrustedFrom,
    TaskObjectEntrustedFrom,
    TaskOperatorEntrustedFrom,
    TaskOperatorArgumentEntrustedFrom,
    TaskInputParameterEntrustedFrom,
    TaskOutputParameterEntrustedFrom,
    // entrustedWith
    PlanEntrustedWith,
    GoalEntrustedWith,
    TaskEntrustedWith,
    TaskObjectEntrustedWith,
    TaskOperatorEntrustedWith,
    TaskOperatorArgumentEntrustedWith,
    TaskInputParameterEntrustedWith,
    TaskOutputParameterEntrustedWith,
};

// Computed super-properties.
enum class PropertyFamily {
    Overloads,
    DrawnBy,
    SubmittedTo,
    HasExecution,
    EntrustedBy,
    EntrustedFrom,
    EntrustedWith,
    Performs,
};

std::string_view property_name(Property p);
std::optional<Property> property_from_name(std::string_view name);

std::string_view family_name(PropertyFamily f);
std::optional<PropertyFamily> family_of(Property p);
std::span<const Property> family_members(PropertyFamily f);
std::span<const Property> all_properties();

inline Iri property_iri(Property p, std::string_view ns = kDefaultNamespace) {
    return Iri(std::string(ns) + std::string(property_name(p)));
}

}  // namespace oasis2
