#pragma once

#include <stdexcept>
#include <string>

namespace pcb {

/// Base class for all library errors. The CLI maps the concrete types to
/// process exit codes, so new error kinds should subclass one of these.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input file (graph or strings format). CLI exit code 2.
struct ParseError : Error {
    using Error::Error;
};

/// Structurally valid input that violates an operation's precondition:
/// isolated vertex at a solver entry, width mismatch, non-tree input,
/// non-2-regular string and the like. CLI exit code 3.
struct InvalidInputError : Error {
    using Error::Error;
};

/// An enumeration budget (brute-force edge cap, closure size cap, audit
/// budget) would be exceeded. CLI exit code 4.
struct CapExceededError : Error {
    using Error::Error;
};

} // namespace pcb
