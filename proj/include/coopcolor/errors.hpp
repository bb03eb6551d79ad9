#pragma once

#include <stdexcept>
#include <string>

namespace coopcolor {

// Violated precondition or invariant of a public operation. The CLI maps
// these to exit code 2.
struct ContractError : std::runtime_error {
  explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

// A bug: an internal consistency check failed (e.g. a solver produced a
// witness its own verifier rejects). CLI exit code 3.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace coopcolor
