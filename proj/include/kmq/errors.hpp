#pragma once

#include <stdexcept>

namespace kmq {

// Malformed or out-of-contract input (bad type symbol, non-dominant weight, ...).
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A quantity lies inside the positive cone but beyond the requested truncation depth.
struct DepthExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A construction would exceed the configured size ceiling.
struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Combinatorial data that does not describe a consistent object (level-rank inputs).
struct Inconsistent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace kmq
