#pragma once

#include <cstddef>
#include <map>

#include "wittmod/poly.hpp"
#include "wittmod/scalar.hpp"
#include "wittmod/witt.hpp"

namespace wittmod {

/// Parameters of the twisted module Omega_b(lambda_1, ..., lambda_n) on the
/// polynomial space in d1..dn. The sl(n+1) parameter is a = 1 - b.
class OmegaModule {
 public:
  /// Throws DomainError if some lambda_i is zero or n == 0.
  OmegaModule(std::size_t n, Scalar b, CVec lambda);

  static OmegaModule from_a(std::size_t n, const Scalar& a, CVec lambda) {
    return OmegaModule(n, Scalar(1 - a), std::move(lambda));
  }

  std::size_t rank() const noexcept { return n_; }
  const Scalar& b() const noexcept { return b_; }
  Scalar a() const { return Scalar(1 - b_); }
  const CVec& lambda() const noexcept { return lambda_; }

  /// lambda^j = prod_i lambda_i^{j_i}
  Scalar lambda_power(const MultiIndex& j) const;

  /// Same lambda, different twist.
  OmegaModule with_b(const Scalar& b) const { return OmegaModule(n_, b, lambda_); }

  bool operator==(const OmegaModule&) const = default;

 private:
  std::size_t n_;
  Scalar b_;
  CVec lambda_;
};

/// Weight module with constant alpha: basis t^k, |k_i| <= box, and
/// D(u,r) t^k = (u | alpha + k + b r) t^{r+k}.
class WeightModule {
 public:
  WeightModule(std::size_t n, Scalar b, CVec alpha, int box);

  std::size_t rank() const noexcept { return n_; }
  const Scalar& b() const noexcept { return b_; }
  const CVec& alpha() const noexcept { return alpha_; }
  int box() const noexcept { return box_; }
  bool contains(const MultiIndex& k) const;

  bool operator==(const WeightModule&) const = default;

 private:
  std::size_t n_;
  Scalar b_;
  CVec alpha_;
  int box_;
};

/// Finite combination sum_k c_k t^k inside a WeightModule's box.
class WeightVec {
 public:
  using Coords = std::map<MultiIndex, Scalar>;
  explicit WeightVec(std::size_t n) : n_(n) {}
  static WeightVec basis(const MultiIndex& k, const Scalar& c = 1);

  std::size_t rank() const noexcept { return n_; }
  const Coords& coords() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  Scalar coeff(const MultiIndex& k) const;
  void add(const MultiIndex& k, const Scalar& c);

  WeightVec operator+(const WeightVec& o) const;
  WeightVec operator-(const WeightVec& o) const;
  bool operator==(const WeightVec&) const = default;

 private:
  std::size_t n_;
  Coords c_;
};

/// Weyl monomial t^j d^l acting on Omega(lambda): lambda^j * shift(d^l p, j).
Poly act_weyl(const OmegaModule& m, const MultiIndex& j, const MultiIndex& l, const Poly& p);

/// D(u,j) acting on Omega_b(lambda):
///   lambda^j (sum_i u_i d_i + (b-1)(u|j)) shift(p, j).
Poly act_witt_omega(const OmegaModule& m, const CVec& u, const MultiIndex& j, const Poly& p);

/// Linear extension over all terms; torus terms t^r act untwisted as the
/// Weyl monomial t^r.
Poly act_witt_element(const OmegaModule& m, const WittElement& x, const Poly& p);

/// D(u,r) on a WeightVec. Throws OverflowError naming the first index that
/// leaves the box.
WeightVec act_witt_weight(const WeightModule& m, const CVec& u, const MultiIndex& r, const WeightVec& v);

/// Linear extension on the weight module; t^r shifts t^k to t^{r+k}.
WeightVec act_witt_element(const WeightModule& m, const WittElement& x, const WeightVec& v);

/// D(u,k) on Omega_b equals the untwisted action plus b(u|k) t^k.
bool twist_consistency(const OmegaModule& m, const CVec& u, const MultiIndex& k, const Poly& p);

/// -1/2 D_b(u,k-i)D_b(v,i)p - 1/2 D_b(u,k+i)D_b(v,-i)p + D_b(u,k)D_b(v,0)p,
/// with the rightmost operator applied first.
Poly delta_combination(const OmegaModule& m, const CVec& u, const CVec& v, const MultiIndex& i,
                       const MultiIndex& k, const Poly& p);

/// delta_combination == b(b-1)(u|i)(v|i) t^k p.
bool delta_check(const OmegaModule& m, const CVec& u, const CVec& v, const MultiIndex& i,
                 const MultiIndex& k, const Poly& p);

/// act([x,y], p) == act(x, act(y,p)) - act(y, act(x,p)).
bool module_axiom(const OmegaModule& m, const WittElement& x, const WittElement& y, const Poly& p);
bool module_axiom(const WeightModule& m, const WittElement& x, const WittElement& y, const WeightVec& v);

}  // namespace wittmod
