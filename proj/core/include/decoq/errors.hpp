#pragma once

#include <stdexcept>
#include <string>

namespace decoq {

// Caller passed a structurally invalid argument (bad index, unknown tag).
struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input lies outside the physical domain (below threshold, empty region).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// A value broke a type contract (non-Hermitian, wrong trace, not PSD).
struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// Mass/momentum configuration outside the supported set.
struct NotImplementedError : std::logic_error {
  using std::logic_error::logic_error;
};

// Two independently computed quantities that must agree do not
// (e.g. infrared pole cancellation beyond tolerance).
struct PhysicsConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace decoq
