#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "wittmod/scalar.hpp"

namespace wittmod {

/// Element of the extended Witt algebra: a finite sum of derivation terms
/// D(u, r) = t^r sum_i u_i d_i and torus terms c t^r.
///
/// D(u, r) is linear in u, so derivation terms sharing r are merged by adding
/// their (coefficient-scaled) u vectors; a derivation term is stored as the
/// folded vector u alone. Terms with zero u or zero coefficient are dropped.
class WittElement {
 public:
  using Derivations = std::map<MultiIndex, CVec>;
  using Torus = std::map<MultiIndex, Scalar>;

  explicit WittElement(std::size_t n) : n_(n) {}

  /// c * D(u, r)
  static WittElement derivation(const CVec& u, const MultiIndex& r, const Scalar& c = 1);
  /// c * t^r
  static WittElement torus(const MultiIndex& r, const Scalar& c = 1);

  std::size_t rank() const noexcept { return n_; }
  const Derivations& derivations() const noexcept { return d_; }
  const Torus& torus_terms() const noexcept { return t_; }
  bool is_zero() const noexcept { return d_.empty() && t_.empty(); }

  void add_derivation(const CVec& u, const MultiIndex& r);
  void add_torus(const MultiIndex& r, const Scalar& c);

  WittElement operator+(const WittElement& o) const;
  WittElement operator-(const WittElement& o) const;
  WittElement operator-() const;
  WittElement& operator+=(const WittElement& o);
  friend WittElement operator*(const Scalar& c, const WittElement& x);

  bool operator==(const WittElement& o) const {
    return n_ == o.n_ && d_ == o.d_ && t_ == o.t_;
  }

 private:
  void check_rank(const WittElement& o) const;

  std::size_t n_;
  Derivations d_;
  Torus t_;
};

/// Lie bracket, extended bilinearly from
///   [t^k, t^s] = 0,  [D(u,k), t^s] = (u|s) t^{k+s},
///   [D(u,k), D(v,s)] = D((u|s)v - (v|k)u, k+s).
WittElement bracket(const WittElement& x, const WittElement& y);

/// The twisting automorphism D(u,k) -> D(u,k) + b(u|k) t^k, t^k -> t^k.
WittElement sigma(const WittElement& x, const Scalar& b);

/// sigma_b([x,y]) == [sigma_b(x), sigma_b(y)].
bool is_homomorphism_witness(const Scalar& b, const WittElement& x, const WittElement& y);

/// Matrix unit e_{ij} of sl(n+1) realised inside the rank-n Witt algebra,
/// 1-based indices 1 <= i, j <= n+1:
///   e_ij        = D(e_j, e_i - e_j)      (i, j <= n)
///   e_{i,n+1}   = D(-(1,...,1), e_i)
///   e_{n+1,i}   = D(e_i, -e_i)
///   e_{n+1,n+1} = D(-(1,...,1), 0)
WittElement sl_embed(std::size_t i, std::size_t j, std::size_t n);

/// Cartan element e_ii - e_{i+1,i+1}, 1 <= i <= n.
WittElement sl_cartan(std::size_t i, std::size_t n);

/// Text form "D((1,0),(1,-1)) + 2*t^(0,1)"; derivations may carry a scalar
/// coefficient on input ("3/2*D((1,0),(0,0))").
WittElement parse_witt(std::string_view text, std::size_t n);
std::string to_string(const WittElement& x);

}  // namespace wittmod
