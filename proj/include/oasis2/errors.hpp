#pragma once

#include <stdexcept>
#include <string>

namespace oasis2 {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// kg-core
struct LayerConflict : Error { using Error::Error; };
struct UnknownPropertyError : Error { using Error::Error; };
struct MissingNodeError : Error { using Error::Error; };
struct UnknownClassError : Error { using Error::Error; };
struct InvalidIriError : Error { using Error::Error; };
struct SubclassCycleError : Error { using Error::Error; };

// rdf-io
struct SyntaxError : Error {
    int line = 0;
    int column = 0;
    SyntaxError(int line, int column, const std::string& what)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line(line),
          column(column) {}
};

// model-builder
struct SpecError : Error { using Error::Error; };
struct OverloadMismatch : Error { using Error::Error; };
struct SubmissionMismatch : Error { using Error::Error; };
struct BindingError : Error { using Error::Error; };
struct AgentMismatch : Error { using Error::Error; };
struct IncompleteAssignment : Error { using Error::Error; };
struct IncompatibleAssignment : Error { using Error::Error; };
struct MissingExecution : Error { using Error::Error; };

// matcher
struct MalformedTask : Error { using Error::Error; };
struct InvalidPlan : Error { using Error::Error; };

// protocol-harness
struct WorldInvalid : Error { using Error::Error; };
struct NotAnExecution : Error { using Error::Error; };
struct BrokenChain : Error {
    std::string missing_link;
    explicit BrokenChain(const std::string& link)
        : Error("broken provenance chain, missing link: " + link), missing_link(link) {}
};

}  // namespace oasis2
