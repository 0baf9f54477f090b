#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fedhgn {

// Runtime failures surfaced to operators (exit code 1 paths).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user-supplied values: config files, CLI flags, operation parameters
// (exit code 2 paths).
struct ParameterError : Error {
    using Error::Error;
};

struct ConfigError : ParameterError {
    using ParameterError::ParameterError;
};

// Text input that does not conform to an expected grammar.
struct ParseError : Error {
    ParseError(std::size_t line_number, const std::string& what)
        : Error("line " + std::to_string(line_number) + ": " + what), line(line_number) {}
    std::size_t line;
};

struct IngestError : Error {
    using Error::Error;
};

// Malformed or inconsistent wire frames; the connection is dropped.
struct ProtocolError : Error {
    using Error::Error;
};

struct NumericError : Error {
    using Error::Error;
};

struct TransportError : Error {
    using Error::Error;
};

struct TransportTimeout : TransportError {
    using TransportError::TransportError;
};

// Shape or precondition violations between internal components. These are
// programming errors, not input errors.
struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace fedhgn
