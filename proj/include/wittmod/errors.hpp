#pragma once

#include <stdexcept>
#include <string>

#include "wittmod/scalar.hpp"

namespace wittmod {

/// Operand shapes disagree (vector length, polynomial rank, row width).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text input for scalars, vectors, polynomials or Witt elements.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the domain of an operation (zero polynomial, bad index, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A polynomial does not fit into the requested degree-truncated space.
class TruncationError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A weight-module action left the truncation box.
class OverflowError : public std::out_of_range {
 public:
  OverflowError(const std::string& what, MultiIndex index)
      : std::out_of_range(what), index_(std::move(index)) {}
  const MultiIndex& index() const noexcept { return index_; }

 private:
  MultiIndex index_;
};

/// The degree-lowering operator has vanishing leading coefficient d(d-1+(n+1)a).
class ObstructionError : public std::runtime_error {
 public:
  ObstructionError(int degree, Scalar a)
      : std::runtime_error("degree reduction obstructed at degree " +
                           std::to_string(degree) + " (a = " + to_string(a) + ")"),
        degree_(degree),
        a_(std::move(a)) {}
  int degree() const noexcept { return degree_; }
  const Scalar& a() const noexcept { return a_; }

 private:
  int degree_;
  Scalar a_;
};

/// A structural identity that must hold (e.g. a lowering image lying in W) failed.
class StructuralViolation : public std::runtime_error {
 public:
  StructuralViolation(const std::string& generator, const std::string& detail)
      : std::runtime_error(generator + ": " + detail), generator_(generator) {}
  const std::string& generator() const noexcept { return generator_; }

 private:
  std::string generator_;
};

}  // namespace wittmod
