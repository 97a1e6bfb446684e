#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wittmod/matrix.hpp"
#include "wittmod/scalar.hpp"

namespace wittmod {

/// Graded order on exponent vectors: lower total degree first, ties broken
/// lexicographically with d1 > d2 > ... > dn (so d1^k precedes d2^k).
/// This is the canonical iteration order of Poly and the column layout of
/// coeff_vector.
struct GradedOrder {
  bool operator()(const MultiIndex& x, const MultiIndex& y) const;
};

/// Sparse polynomial in commuting indeterminates d1..dn with rational
/// coefficients. No stored coefficient is zero.
class Poly {
 public:
  using Terms = std::map<MultiIndex, Scalar, GradedOrder>;

  explicit Poly(std::size_t n) : n_(n) {}
  Poly(std::size_t n, Terms terms);

  static Poly constant(std::size_t n, const Scalar& c);
  static Poly monomial(std::size_t n, const MultiIndex& exps, const Scalar& c = 1);
  /// d_i, 0-based variable index.
  static Poly variable(std::size_t n, std::size_t i);

  std::size_t rank() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Scalar coeff(const MultiIndex& exps) const;
  Scalar constant_term() const;

  /// Adds c * x^exps in place.
  void add_term(const MultiIndex& exps, const Scalar& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator*(const Scalar& c, const Poly& p);

  bool operator==(const Poly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

 private:
  void check_rank(const Poly& o) const;

  std::size_t n_;
  Terms terms_;
};

Poly add(const Poly& p, const Poly& q);
Poly mul(const Poly& p, const Poly& q);
Poly scale(const Scalar& c, const Poly& p);
Poly pow(const Poly& p, unsigned e);

/// p(d1 - j1, ..., dn - jn), expanded.
Poly shift(const Poly& p, const MultiIndex& j);

/// Sentinel degree of the zero polynomial.
inline constexpr int kMinusInfinity = -1;

int total_degree(const Poly& p);
/// Largest exponent of d_i (0-based i) occurring in p.
int degree_in(const Poly& p, std::size_t i);

/// Monomials of total degree <= bound in GradedOrder, with their positions.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t n, int bound);
  std::size_t rank() const noexcept { return n_; }
  int bound() const noexcept { return bound_; }
  std::size_t dimension() const noexcept { return monomials_.size(); }
  const std::vector<MultiIndex>& monomials() const noexcept { return monomials_; }
  std::size_t position(const MultiIndex& m) const;
  /// Number of monomials of degree <= d (a prefix of the layout).
  std::size_t prefix_dimension(int d) const;

 private:
  std::size_t n_;
  int bound_;
  std::vector<MultiIndex> monomials_;
  std::map<MultiIndex, std::size_t, GradedOrder> index_;
};

/// Coefficients over all monomials of degree <= bound in GradedOrder; length
/// C(n + bound, n). Throws TruncationError if deg p > bound.
Row coeff_vector(const Poly& p, int degree_bound);
Row coeff_vector(const Poly& p, const MonomialBasis& basis);
Poly from_coeff_vector(const Row& row, const MonomialBasis& basis);

/// Text form "(3/2)*d1^2*d2 - d3 + 1" over d1..dn. Parentheses, products and
/// integer powers of subexpressions are accepted on input.
Poly parse_poly(std::string_view text, std::size_t n);
std::string to_string(const Poly& p);

}  // namespace wittmod
