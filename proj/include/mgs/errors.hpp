#pragma once

#include <stdexcept>

namespace mgs {

// Input fails a structural precondition: not a quiver of the expected shape,
// crossing arcs, non-type-A input, and so on.
struct StructureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal invariant broke (sign coherence violated, cycle in the green
// mutation graph). Signals a corrupted state rather than bad user input.
struct IntegrityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed text input.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Work exceeded a configured budget.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mgs
