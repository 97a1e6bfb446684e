#include "wittmod/modules.hpp"

#include <cstdlib>

#include "wittmod/errors.hpp"

namespace wittmod {

OmegaModule::OmegaModule(std::size_t n, Scalar b, CVec lambda)
    : n_(n), b_(std::move(b)), lambda_(std::move(lambda)) {
  if (n_ == 0) throw DomainError("rank must be positive");
  if (lambda_.size() != n_)
    throw DimensionError("lambda has " + std::to_string(lambda_.size()) + " entries, rank is " +
                         std::to_string(n_));
  for (std::size_t i = 0; i < n_; ++i)
    if (lambda_[i] == 0) throw DomainError("lambda_" + std::to_string(i + 1) + " must be nonzero");
}

Scalar OmegaModule::lambda_power(const MultiIndex& j) const {
  if (j.size() != n_) throw DimensionError("exponent length does not match rank");
  Scalar r = 1;
  for (std::size_t i = 0; i < n_; ++i)
    if (j[i] != 0) r *= power(lambda_[i], j[i]);
  return r;
}

WeightModule::WeightModule(std::size_t n, Scalar b, CVec alpha, int box)
    : n_(n), b_(std::move(b)), alpha_(std::move(alpha)), box_(box) {
  if (n_ == 0) throw DomainError("rank must be positive");
  if (alpha_.size() != n_) throw DimensionError("alpha length does not match rank");
  if (box_ < 1) throw DomainError("truncation box radius must be at least 1");
}

bool WeightModule::contains(const MultiIndex& k) const {
  if (k.size() != n_) return false;
  for (int x : k)
    if (std::abs(x) > box_) return false;
  return true;
}

WeightVec WeightVec::basis(const MultiIndex& k, const Scalar& c) {
  WeightVec v(k.size());
  v.add(k, c);
  return v;
}

Scalar WeightVec::coeff(const MultiIndex& k) const {
  auto it = c_.find(k);
  return it == c_.end() ? Scalar(0) : it->second;
}

void WeightVec::add(const MultiIndex& k, const Scalar& c) {
  if (k.size() != n_) throw DimensionError("weight index length does not match rank");
  if (c == 0) return;
  auto [it, inserted] = c_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

WeightVec WeightVec::operator+(const WeightVec& o) const {
  if (n_ != o.n_) throw DimensionError("weight vector rank mismatch");
  WeightVec r(*this);
  for (const auto& [k, c] : o.c_) r.add(k, c);
  return r;
}

WeightVec WeightVec::operator-(const WeightVec& o) const {
  if (n_ != o.n_) throw DimensionError("weight vector rank mismatch");
  WeightVec r(*this);
  for (const auto& [k, c] : o.c_) r.add(k, -c);
  return r;
}

// ---------------------------------------------------------------------------

Poly act_weyl(const OmegaModule& m, const MultiIndex& j, const MultiIndex& l, const Poly& p) {
  if (j.size() != m.rank() || l.size() != m.rank() || p.rank() != m.rank())
    throw DimensionError("act_weyl: rank mismatch");
  Poly q = l.is_zero() ? p : Poly::monomial(m.rank(), l) * p;
  return m.lambda_power(j) * shift(q, j);
}

Poly act_witt_omega(const OmegaModule& m, const CVec& u, const MultiIndex& j, const Poly& p) {
  const std::size_t n = m.rank();
  if (u.size() != n || j.size() != n || p.rank() != n)
    throw DimensionError("act_witt_omega: rank mismatch");
  Poly factor = Poly::constant(n, (m.b() - 1) * pairing(u, j));
  for (std::size_t i = 0; i < n; ++i)
    if (u[i] != 0) factor.add_term(MultiIndex::unit(n, i), u[i]);
  return m.lambda_power(j) * (factor * shift(p, j));
}

Poly act_witt_element(const OmegaModule& m, const WittElement& x, const Poly& p) {
  if (x.rank() != m.rank() || p.rank() != m.rank())
    throw DimensionError("act_witt_element: rank mismatch");
  Poly out(m.rank());
  if (p.is_zero()) return out;
  const MultiIndex zero(m.rank());
  for (const auto& [r, u] : x.derivations()) out += act_witt_omega(m, u, r, p);
  for (const auto& [r, c] : x.torus_terms()) out += c * act_weyl(m, r, zero, p);
  return out;
}

WeightVec act_witt_weight(const WeightModule& m, const CVec& u, const MultiIndex& r, const WeightVec& v) {
  if (u.size() != m.rank() || r.size() != m.rank() || v.rank() != m.rank())
    throw DimensionError("act_witt_weight: rank mismatch");
  WeightVec out(m.rank());
  const CVec br = m.b() * CVec(std::vector<Scalar>(r.begin(), r.end()));
  for (const auto& [k, c] : v.coords()) {
    const Scalar w = pairing(u, m.alpha()) + pairing(u, k) + pairing(u, br);
    if (w == 0) continue;
    const MultiIndex target = r + k;
    if (!m.contains(target))
      throw OverflowError("weight action leaves the box at t^" + to_string(target), target);
    out.add(target, c * w);
  }
  return out;
}

WeightVec act_witt_element(const WeightModule& m, const WittElement& x, const WeightVec& v) {
  if (x.rank() != m.rank() || v.rank() != m.rank())
    throw DimensionError("act_witt_element: rank mismatch");
  WeightVec out(m.rank());
  for (const auto& [r, u] : x.derivations()) out = out + act_witt_weight(m, u, r, v);
  for (const auto& [r, c] : x.torus_terms())
    for (const auto& [k, a] : v.coords()) {
      const MultiIndex target = r + k;
      if (!m.contains(target))
        throw OverflowError("torus action leaves the box at t^" + to_string(target), target);
      out.add(target, c * a);
    }
  return out;
}

bool twist_consistency(const OmegaModule& m, const CVec& u, const MultiIndex& k, const Poly& p) {
  const OmegaModule untwisted = m.with_b(0);
  const Poly lhs = act_witt_omega(m, u, k, p);
  const Poly rhs = act_witt_omega(untwisted, u, k, p) +
                   (m.b() * pairing(u, k)) * act_weyl(m, k, MultiIndex(m.rank()), p);
  return lhs == rhs;
}

Poly delta_combination(const OmegaModule& m, const CVec& u, const CVec& v, const MultiIndex& i,
                       const MultiIndex& k, const Poly& p) {
  const MultiIndex zero(m.rank());
  const Scalar half(1, 2);
  Poly out = (-half) * act_witt_omega(m, u, k - i, act_witt_omega(m, v, i, p));
  out -= half * act_witt_omega(m, u, k + i, act_witt_omega(m, v, -i, p));
  out += act_witt_omega(m, u, k, act_witt_omega(m, v, zero, p));
  return out;
}

bool delta_check(const OmegaModule& m, const CVec& u, const CVec& v, const MultiIndex& i,
                 const MultiIndex& k, const Poly& p) {
  const Scalar theta = m.b() * (m.b() - 1) * pairing(u, i) * pairing(v, i);
  const Poly rhs = theta * act_weyl(m, k, MultiIndex(m.rank()), p);
  return delta_combination(m, u, v, i, k, p) == rhs;
}

bool module_axiom(const OmegaModule& m, const WittElement& x, const WittElement& y, const Poly& p) {
  const Poly lhs = act_witt_element(m, bracket(x, y), p);
  const Poly rhs = act_witt_element(m, x, act_witt_element(m, y, p)) -
                   act_witt_element(m, y, act_witt_element(m, x, p));
  return lhs == rhs;
}

bool module_axiom(const WeightModule& m, const WittElement& x, const WittElement& y, const WeightVec& v) {
  const WeightVec lhs = act_witt_element(m, bracket(x, y), v);
  const WeightVec rhs = act_witt_element(m, x, act_witt_element(m, y, v)) -
                        act_witt_element(m, y, act_witt_element(m, x, v));
  return lhs == rhs;
}

}  // namespace wittmod
