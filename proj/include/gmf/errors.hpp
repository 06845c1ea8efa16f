#pragma once

#include <stdexcept>
#include <string>

namespace gmf {

/// Incompatible matrix shapes.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A scalar argument outside its admissible range (negative t, ε ∉ (0,1), ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The inputs are well-formed but violate an operation's precondition,
/// e.g. rge B ⊄ rge A or a witness requested for a point outside Ω(A,B).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Operation not defined for this constraint pair (gauge calculus with B ≠ 0).
class ConfigurationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline void require_dims(bool ok, const std::string& what) {
  if (!ok) throw DimensionError(what);
}

}  // namespace detail
}  // namespace gmf
