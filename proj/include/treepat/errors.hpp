#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace treepat {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Pattern validation failures.
struct ValidationError : Error { using Error::Error; };
struct CoverageError : ValidationError { using ValidationError::ValidationError; };
struct OverlapError : ValidationError { using ValidationError::ValidationError; };
struct CycleError : ValidationError { using ValidationError::ValidationError; };
struct DisconnectedError : ValidationError { using ValidationError::ValidationError; };
struct SizeError : ValidationError { using ValidationError::ValidationError; };

// Text input that is not even a pattern file.
struct ParseError : Error { using Error::Error; };

// Precondition violations on operation arguments.
struct DomainError : Error { using Error::Error; };
struct IndexError : DomainError { using DomainError::DomainError; };

// Iteration budget exhausted in a numeric routine.
struct ConvergenceError : Error { using Error::Error; };

// Pattern lacks the block/collapse structure an operation requires.
struct StructureError : Error { using Error::Error; };

// Maximal shadows of a collapse do not form a valid pattern.
struct InvalidCollapseError : StructureError { using StructureError::StructureError; };

// A verification harness found a counterexample.
struct VerificationFailure : Error {
    explicit VerificationFailure(const std::string& msg, std::string counterexample_json = "")
        : Error(msg), counterexample(std::move(counterexample_json)) {}
    std::string counterexample;
};

}  // namespace treepat
