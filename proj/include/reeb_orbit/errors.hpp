#pragma once

#include <stdexcept>
#include <string>

namespace reeb_orbit {

// Base class for every domain error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Grid too small for the diagonal triangulation, or a perturbation matrix
// whose shape does not match the grid.
struct DimensionError : Error {
  using Error::Error;
};

// An edge lift is exactly zero: the function is not in generic position.
// Carries the canonical edge (tail vertex plus family 0=right 1=up 2=diag).
struct FlatEdgeError : Error {
  int tail;
  int family;
  FlatEdgeError(int tail_, int family_, const std::string& what_)
      : Error(what_), tail(tail_), family(family_) {}
};

// Requested level value is a vertex value (or outside [0,1)).
struct ValueNotRegularError : Error {
  using Error::Error;
};

// The function has no critical vertex; it fibers over the circle and the
// level-set graph machinery does not apply.
struct FibrationError : Error {
  using Error::Error;
};

struct DisconnectedError : Error {
  using Error::Error;
};

// The level-set graph is a tree.
struct NoCycleError : Error {
  using Error::Error;
};

// A global real-valued lift was requested for a function whose cohomology
// class is nonzero.
struct NotNullHomotopicError : Error {
  long a, b;
  NotNullHomotopicError(long a_, long b_, const std::string& what_)
      : Error(what_), a(a_), b(b_) {}
};

// Wreath elements from algebras with different base group or block count.
struct AlgebraMismatchError : Error {
  using Error::Error;
};

// A listed element set is not closed under the group operation.
struct NotASubgroupError : Error {
  using Error::Error;
};

// The splitting hypotheses do not hold for the given (ambient, L0, g, n).
struct HypothesesFailError : Error {
  using Error::Error;
};

// A report field was requested for a branch that does not carry it.
struct WrongBranchError : Error {
  using Error::Error;
};

// A structural theorem failed on concrete data; indicates a bug, not bad
// input.
struct InvariantError : Error {
  using Error::Error;
};

// Malformed input document.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace reeb_orbit
