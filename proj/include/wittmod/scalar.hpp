#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace wittmod {

/// Exact rational number, always canonical (lowest terms, positive denominator).
using Scalar = mpq_class;

/// Parses "p" or "p/q" (optional sign, surrounding blanks allowed).
Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar& s);

/// Signed integer vector of fixed length: exponents of t, polynomial
/// exponents, and index tuples.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t n) : e_(n, 0) {}
  MultiIndex(std::initializer_list<int> init) : e_(init) {}
  explicit MultiIndex(std::vector<int> v) : e_(std::move(v)) {}

  static MultiIndex unit(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }
  int& operator[](std::size_t i) { return e_[i]; }
  const std::vector<int>& entries() const noexcept { return e_; }
  auto begin() const noexcept { return e_.begin(); }
  auto end() const noexcept { return e_.end(); }

  int total() const noexcept;
  bool is_zero() const noexcept;

  MultiIndex operator+(const MultiIndex& o) const;
  MultiIndex operator-(const MultiIndex& o) const;
  MultiIndex operator-() const;

  auto operator<=>(const MultiIndex&) const = default;
  bool operator==(const MultiIndex&) const = default;

 private:
  std::vector<int> e_;
};

/// Vector of scalars, the home of u, v and alpha.
class CVec {
 public:
  CVec() = default;
  explicit CVec(std::size_t n) : e_(n, Scalar(0)) {}
  CVec(std::initializer_list<Scalar> init) : e_(init) {}
  explicit CVec(std::vector<Scalar> v) : e_(std::move(v)) {}

  static CVec unit(std::size_t n, std::size_t i);
  static CVec constant(std::size_t n, const Scalar& c);

  std::size_t size() const noexcept { return e_.size(); }
  const Scalar& operator[](std::size_t i) const { return e_[i]; }
  Scalar& operator[](std::size_t i) { return e_[i]; }
  const std::vector<Scalar>& entries() const noexcept { return e_; }

  bool is_zero() const;

  CVec operator+(const CVec& o) const;
  CVec operator-(const CVec& o) const;
  CVec operator-() const;
  friend CVec operator*(const Scalar& c, const CVec& v);

  bool operator==(const CVec& o) const { return e_ == o.e_; }

 private:
  std::vector<Scalar> e_;
};

/// (u|k) = sum_i u_i k_i.
Scalar pairing(const CVec& u, const MultiIndex& k);
Scalar pairing(const CVec& u, const CVec& v);

/// Accepts "(1/2,-3)"; the parentheses are optional.
CVec parse_cvec(std::string_view text);
MultiIndex parse_multi_index(std::string_view text);
std::string to_string(const CVec& v);
std::string to_string(const MultiIndex& k);

std::ostream& operator<<(std::ostream& os, const MultiIndex& k);
std::ostream& operator<<(std::ostream& os, const CVec& v);

/// Exact binomial coefficient C(n, k) for small arguments.
unsigned long binomial(unsigned n, unsigned k);

/// Scalar power with signed exponent; base must be nonzero when exp < 0.
Scalar power(const Scalar& base, int exp);

}  // namespace wittmod
