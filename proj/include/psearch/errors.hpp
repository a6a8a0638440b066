#pragma once

#include <stdexcept>
#include <string>

namespace psearch {

// Bad user input: malformed instance, K not dividing N, size caps, bad flags.
class InvalidInstance : public std::invalid_argument {
 public:
  explicit InvalidInstance(const std::string& what) : std::invalid_argument(what) {}
};

// An (epsilon, K) pair outside the region where the arcsin arguments stay <= 1.
class Infeasible : public std::domain_error {
 public:
  explicit Infeasible(const std::string& what) : std::domain_error(what) {}
};

// Operator applied to a state it is not defined on (e.g. diffusion on an
// ancilla-bearing state, a second move-out).
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace psearch
