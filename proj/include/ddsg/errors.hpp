#pragma once

#include <stdexcept>
#include <string>

namespace ddsg {

// Malformed input: bad files, out-of-range ids, invalid parameters.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Well-formed instance that provably has no feasible solution.
struct InfeasibleError : std::runtime_error {
  explicit InfeasibleError(const std::string& what)
      : std::runtime_error(what) {}
};

// Internal numeric or logic failure inside a solver. Never a silent wrong
// answer.
struct SolverError : std::runtime_error {
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

// A configurable resource limit (branch-and-bound nodes) was exceeded.
struct ResourceExhausted : std::runtime_error {
  explicit ResourceExhausted(const std::string& what)
      : std::runtime_error(what) {}
};

// Diversify ran out of nodes before reaching the requested dominance bound.
struct InfeasibleExtension : std::runtime_error {
  explicit InfeasibleExtension(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace ddsg
