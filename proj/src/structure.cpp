#include "wittmod/structure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "wittmod/errors.hpp"

namespace wittmod {

namespace {

const MonomialBasis& check_layout(const MonomialBasis& mb, const SubspaceBasis& b) {
  if (mb.rank() != b.n || mb.bound() != b.degree_bound) throw DimensionError("layout mismatch");
  return mb;
}

Poly one(std::size_t n) { return Poly::constant(n, 1); }

// Echelon form keyed by leading (highest) monomial. With a graded order the
// span's intersection with P_{<=D} is spanned by the rows leading in degree <= D.
class Echelon {
 public:
  explicit Echelon(std::size_t n) : n_(n) {}

  // Reduced form of p, or the zero polynomial when p lies in the span.
  Poly reduce(Poly p) const {
    Poly rest(n_);
    while (!p.is_zero()) {
      const MultiIndex lead = p.terms().rbegin()->first;
      const Scalar c = p.terms().rbegin()->second;
      const auto it = rows_.find(lead);
      if (it == rows_.end()) {
        rest.add_term(lead, c);
        p.add_term(lead, -c);
      } else {
        p -= scale(c, it->second);
      }
    }
    return rest;
  }

  // Adds p to the span; returns the new row if p was independent.
  std::optional<Poly> insert(const Poly& p) {
    Poly r = reduce(p);
    if (r.is_zero()) return std::nullopt;
    const Scalar inv = 1 / r.terms().rbegin()->second;
    r = scale(inv, r);
    const MultiIndex lead = r.terms().rbegin()->first;
    rows_.emplace(lead, r);
    return r;
  }

  std::size_t size() const noexcept { return rows_.size(); }

  std::vector<Poly> rows_up_to(int degree) const {
    std::vector<Poly> out;
    for (const auto& [lead, r] : rows_)
      if (lead.total() <= degree) out.push_back(r);
    return out;
  }

 private:
  std::size_t n_;
  std::map<MultiIndex, Poly, GradedOrder> rows_;
};

// V <- V + (g(V) cap P_{<=window}) for every generator g until nothing changes.
// Generators raise degree by at most one, so g(V) is spanned inside P_{<=window+1}.
ClosureResult closure_in_window(const OmegaModule& m, const std::vector<Poly>& gens, int degree_bound, int window,
                                int max_rounds) {
  const std::size_t n = m.rank();
  const auto generators = sl_generators(n);
  Echelon span(n);
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (total_degree(g) > window) throw TruncationError("sl_closure: generator above the window");
    span.insert(g);
  }
  ClosureResult res;
  bool grew = span.size() > 0;
  while (grew && res.rounds < max_rounds) {
    ++res.rounds;
    grew = false;
    const std::vector<Poly> rows = span.rows_up_to(window);
    for (const auto& [name, x] : generators) {
      Echelon images(n);
      for (const auto& p : rows) images.insert(act_witt_element(m, x, p));
      for (const auto& q : images.rows_up_to(window)) grew = span.insert(q).has_value() || grew;
    }
  }
  res.stable = !grew;
  res.basis = span_of(n, span.rows_up_to(degree_bound), degree_bound);
  return res;
}

}  // namespace

std::vector<Poly> SubspaceBasis::polys() const {
  const MonomialBasis mb(n, degree_bound);
  std::vector<Poly> out;
  out.reserve(rows.nrows());
  for (const auto& r : rows.rows) out.push_back(from_coeff_vector(r, mb));
  return out;
}

Scalar reducible_a(std::size_t n, int m) {
  if (m < 0) throw DomainError("m must be non-negative");
  Scalar a(-m, static_cast<long>(n) + 1);
  a.canonicalize();
  return a;
}

std::optional<int> reducibility_index(std::size_t n, const Scalar& a) {
  const Scalar m = -a * static_cast<long>(n + 1);
  if (m.get_den() != 1 || m < 0 || !m.get_num().fits_sint_p()) return std::nullopt;
  return static_cast<int>(m.get_num().get_si());
}

Poly y_factor(std::size_t n, std::size_t i, int j, const Scalar& a) {
  if (i < 1 || i > n) throw DomainError("y_factor: variable index outside 1..n");
  if (j < 0) throw DomainError("y_factor: negative length");
  Poly out = one(n);
  for (int s = 0; s < j; ++s) {
    Poly lin = Poly::variable(n, i - 1);
    lin.add_term(MultiIndex(n), a + s);
    out = out * lin;
  }
  return out;
}

Poly y_product(const YSpec& spec) {
  const std::size_t n = spec.j.size();
  Poly out = one(n);
  for (std::size_t i = 0; i < n; ++i)
    if (spec.j[i] != 0) out = out * y_factor(n, i + 1, spec.j[i], spec.a);
  return out;
}

std::vector<MultiIndex> compositions(std::size_t n, int total) {
  std::vector<MultiIndex> out;
  if (n == 0 || total < 0) return out;
  MultiIndex cur(n);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int x = left; x >= 0; --x) {
      cur[i] = x;
      rec(i + 1, left - x);
    }
  };
  rec(0, total);
  return out;
}

std::vector<Poly> w_spanning_set(std::size_t n, int m, int degree_bound) {
  std::vector<Poly> out;
  const int spare = degree_bound - (m + 1);
  if (spare < 0) return out;
  const Scalar a = reducible_a(n, m);
  const MonomialBasis mults(n, spare);
  for (const auto& j : compositions(n, m + 1)) {
    const Poly y = y_product({j, a});
    for (const auto& k : mults.monomials()) out.push_back(Poly::monomial(n, k) * y);
  }
  return out;
}

SubspaceBasis span_of(std::size_t n, const std::vector<Poly>& polys, int degree_bound) {
  const MonomialBasis mb(n, degree_bound);
  Matrix m(mb.dimension());
  for (const auto& p : polys)
    if (!p.is_zero()) m.append(coeff_vector(p, mb));
  return SubspaceBasis{n, degree_bound, row_reduce(m).rref};
}

SubspaceBasis w_basis(std::size_t n, int m, int degree_bound) {
  return span_of(n, w_spanning_set(n, m, degree_bound), std::max(degree_bound, 0));
}

bool member_w(const Poly& p, const SubspaceBasis& basis) {
  if (p.rank() != basis.n) throw DimensionError("member_w: rank mismatch");
  return in_span(coeff_vector(p, basis.degree_bound), basis.rows);
}

Poly reduce_modulo(const Poly& p, const SubspaceBasis& basis) {
  const MonomialBasis mb(basis.n, basis.degree_bound);
  check_layout(mb, basis);
  return from_coeff_vector(normal_form(coeff_vector(p, mb), basis.rows), mb);
}

std::size_t quotient_dim(std::size_t n, int m, int degree_bound) {
  if (degree_bound < m + 1) throw DomainError("quotient_dim needs degree_bound >= m + 1");
  const std::size_t total = binomial(static_cast<unsigned>(n + degree_bound), static_cast<unsigned>(n));
  return total - w_basis(n, m, degree_bound).dimension();
}

QuotientDimension quotient_dim_stable(std::size_t n, int m, int extra_bounds) {
  QuotientDimension q;
  for (int d = m + 1; d <= m + 1 + extra_bounds; ++d) q.by_bound.emplace_back(d, quotient_dim(n, m, d));
  q.value = q.by_bound.back().second;
  q.stable = std::all_of(q.by_bound.begin(), q.by_bound.end(),
                         [&](const auto& e) { return e.second == q.value; });
  return q;
}

unsigned long weyl_dimension(const std::vector<int>& w) {
  // prod over positive roots e_i - e_j of <lambda + rho, root> / <rho, root>
  const std::size_t n = w.size();
  Scalar dim = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      long num = 0;
      for (std::size_t k = i; k < j; ++k) num += w[k] + 1;
      Scalar f(num, static_cast<long>(j - i));
      f.canonicalize();
      dim *= f;
    }
  return dim.get_num().get_ui();
}

std::vector<std::pair<std::string, WittElement>> sl_generators(std::size_t n) {
  auto label = [](std::size_t i, std::size_t j) {
    return "e_{" + std::to_string(i) + "," + std::to_string(j) + "}";
  };
  std::vector<std::pair<std::string, WittElement>> out;
  for (std::size_t i = 1; i + 1 <= n; ++i) {
    out.emplace_back(label(i, i + 1), sl_embed(i, i + 1, n));
    out.emplace_back(label(i + 1, i), sl_embed(i + 1, i, n));
  }
  out.emplace_back(label(n, n + 1), sl_embed(n, n + 1, n));
  out.emplace_back(label(n + 1, n), sl_embed(n + 1, n, n));
  return out;
}

ClosureResult sl_closure(const OmegaModule& m, const std::vector<Poly>& gens, int degree_bound,
                         int slack, int max_rounds) {
  const std::size_t n = m.rank();
  if (degree_bound < 0) throw DomainError("sl_closure: negative degree bound");
  for (const auto& g : gens)
    if (g.rank() != n) throw DimensionError("sl_closure: generator rank mismatch");
  if (slack >= 0) return closure_in_window(m, gens, degree_bound, degree_bound + slack, max_rounds);

  int top = 0;
  for (const auto& g : gens) top = std::max(top, total_degree(g));
  const int mm = std::max(0, top - 1);
  const int first = mm + 2;
  const int last = first + kClosureWindowGrowth;

  ClosureResult res = closure_in_window(m, gens, degree_bound, degree_bound + first, max_rounds);
  int unchanged = 0;
  bool fixpoints = res.stable;
  for (int s = first + 1; s <= last && unchanged < 2; ++s) {
    ClosureResult wider = closure_in_window(m, gens, degree_bound, degree_bound + s, max_rounds);
    fixpoints = fixpoints && wider.stable;
    unchanged = wider.basis == res.basis ? unchanged + 1 : 0;
    wider.rounds += res.rounds;
    res = std::move(wider);
  }
  res.stable = fixpoints && unchanged >= 2;
  return res;
}

WittElement elimination_operator(const OmegaModule& m, std::size_t r) {
  const std::size_t n = m.rank();
  if (r < 2 || r > n) throw DomainError("elimination_operator: r outside 2..n");
  const Scalar& l1 = m.lambda()[0];
  return (l1 / m.lambda()[r - 1]) * sl_embed(r, 1, n) - l1 * sl_embed(n + 1, 1, n);
}

WittElement lowering_operator(const OmegaModule& m) {
  const std::size_t n = m.rank();
  const Scalar& l1 = m.lambda()[0];
  WittElement x = Scalar(-1 / l1) * sl_embed(1, n + 1, n) + l1 * sl_embed(n + 1, 1, n) -
                  (sl_embed(1, 1, n) - sl_embed(n + 1, n + 1, n));
  for (std::size_t j = 2; j <= n; ++j) {
    const Scalar& lj = m.lambda()[j - 1];
    x = x - Scalar(lj / l1) * sl_embed(1, j, n) + lj * sl_embed(n + 1, j, n);
  }
  return x;
}

Poly eliminate_to_first_variable(const OmegaModule& m, const Poly& p) {
  const std::size_t n = m.rank();
  const int d = total_degree(p);
  const int guard = std::max(1, d * std::max<int>(d, static_cast<int>(n) - 1));
  int steps = 0;
  Poly f = p;
  for (std::size_t r = n; r >= 2; --r) {
    const WittElement op = elimination_operator(m, r);
    while (degree_in(f, r - 1) > 0) {
      if (++steps > guard)
        throw StructuralViolation("elimination", "no termination after " + std::to_string(guard) + " steps");
      const int before = degree_in(f, r - 1);
      f = act_witt_element(m, op, f);
      if (f.is_zero() || degree_in(f, r - 1) != before - 1)
        throw StructuralViolation("elimination", "d" + std::to_string(r) + "-degree did not drop by one");
    }
  }
  return f;
}

Poly reduce_degree(const OmegaModule& m, const Poly& p) {
  if (p.rank() != m.rank()) throw DimensionError("reduce_degree: rank mismatch");
  if (p.is_zero()) throw DomainError("reduce_degree: zero polynomial");
  const int d = total_degree(p);
  if (d == 0) throw DomainError("reduce_degree: constant polynomial has nothing to reduce");

  Poly f = eliminate_to_first_variable(m, p);
  if (total_degree(f) < d) return f;

  const std::size_t n = m.rank();
  const Scalar lead = Scalar(d) * (Scalar(d - 1) + Scalar(static_cast<long>(n + 1)) * m.a());
  if (lead == 0) throw ObstructionError(d, m.a());
  Poly g = act_witt_element(m, lowering_operator(m), f);
  if (total_degree(g) != d - 1)
    throw StructuralViolation("lowering", "expected degree " + std::to_string(d - 1) + ", got " +
                                              std::to_string(total_degree(g)));
  return g;
}

WitnessChain irreducible_chain(const OmegaModule& m, const Poly& p) {
  if (p.is_zero()) throw DomainError("irreducible_witness: zero polynomial");
  WitnessChain chain;
  Poly f = p;
  chain.degrees.push_back(total_degree(f));
  while (total_degree(f) > 0) {
    try {
      f = reduce_degree(m, f);
    } catch (const ObstructionError& e) {
      chain.obstruction_degree = e.degree();
      chain.final_poly = f;
      return chain;
    }
    chain.degrees.push_back(total_degree(f));
  }
  chain.final_poly = Scalar(1 / f.constant_term()) * f;
  chain.reached_one = true;
  return chain;
}

bool irreducible_witness(const OmegaModule& m, const Poly& p) { return irreducible_chain(m, p).reached_one; }

bool LowestWeightReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.pass; });
}

LowestWeightReport lowest_weight_report(std::size_t n, int m, const CVec& lambda) {
  const Scalar a = reducible_a(n, m);
  const OmegaModule mod = OmegaModule::from_a(n, a, lambda);
  const SubspaceBasis w = w_basis(n, m, m + 1);
  const MonomialBasis mb(n, m + 1);
  const Poly y = y_factor(n, 1, m, a);
  const Row y_nf = normal_form(coeff_vector(y, mb), w.rows);

  LowestWeightReport rep;
  rep.checks.push_back({"Y^1_m not in W", !is_zero_row(y_nf)});
  std::size_t lead = 0;
  while (lead < y_nf.size() && y_nf[lead] == 0) ++lead;

  for (std::size_t i = 1; i <= n; ++i) {
    const std::string name = "e_{" + std::to_string(i) + "," + std::to_string(i) + "}-e_{" +
                             std::to_string(i + 1) + "," + std::to_string(i + 1) + "}";
    const Poly img = act_witt_element(mod, sl_cartan(i, n), y);
    const Row nf = normal_form(coeff_vector(img, mb), w.rows);
    Scalar c = lead < y_nf.size() ? Scalar(nf[lead] / y_nf[lead]) : Scalar(0);
    bool eigen = lead < y_nf.size();
    for (std::size_t k = 0; eigen && k < nf.size(); ++k) eigen = nf[k] == c * y_nf[k];
    rep.weight.values.push_back(c);
    rep.checks.push_back({name + " eigen mod W", eigen});
  }

  for (std::size_t i = 1; i <= n; ++i) {
    const std::string name = "e_{" + std::to_string(i + 1) + "," + std::to_string(i) + "}";
    const Poly img = act_witt_element(mod, sl_embed(i + 1, i, n), y);
    rep.checks.push_back({name + " lowers into W", member_w(img, w)});
  }

  // e_{n+1,n} Y^1_m = lambda_n^{-1} Y^1_m Y^n_1 holds exactly
  const Poly direct = act_witt_element(mod, sl_embed(n + 1, n, n), y);
  rep.checks.push_back({"e_{n+1,n} identity", direct == Scalar(1 / lambda[n - 1]) * (y * y_factor(n, n, 1, a))});

  std::vector<Scalar> expected(n, Scalar(0));
  expected[0] = -m;
  rep.checks.push_back({"weight is -m Lambda_1", rep.weight.values == expected});
  return rep;
}

Weight lowest_weight_check(std::size_t n, int m, const CVec& lambda) {
  const LowestWeightReport rep = lowest_weight_report(n, m, lambda);
  for (const auto& c : rep.checks)
    if (!c.pass) throw StructuralViolation(c.name, "identity fails for (n,m)=(" + std::to_string(n) + "," +
                                                       std::to_string(m) + ")");
  return rep.weight;
}

ModuleParams extract_params(const OmegaModule& m) {
  const std::size_t n = m.rank();
  const Poly unit = one(n);
  ModuleParams out{Scalar(0), CVec(n)};
  for (std::size_t i = 1; i <= n; ++i) {
    const Poly q = act_witt_element(m, sl_embed(n + 1, i, n), unit);
    const Scalar c = q.coeff(MultiIndex::unit(n, i - 1));
    if (c == 0) throw StructuralViolation("e_{n+1,i}", "no d_i term in e_{n+1,i} acting on 1");
    const Scalar li = 1 / c;
    const Poly shifted = li * q - act_witt_element(m, WittElement::derivation(CVec::unit(n, i - 1), MultiIndex(n)), unit);
    if (total_degree(shifted) > 0)
      throw StructuralViolation("e_{n+1,i}", "lambda_i e_{n+1,i} 1 - d_i is not constant");
    const Scalar ai = shifted.constant_term();
    if (i > 1 && ai != out.a) throw StructuralViolation("e_{n+1,i}", "inconsistent a across i");
    out.a = ai;
    out.lambda[i - 1] = li;
  }
  return out;
}

bool isomorphic(const OmegaModule& m1, const OmegaModule& m2) {
  if (m1.rank() != m2.rank()) return false;
  return extract_params(m1) == extract_params(m2);
}

bool isomorphic_w(const OmegaModule& m1, const OmegaModule& m2) {
  if (!reducibility_index(m1.rank(), m1.a()) || !reducibility_index(m2.rank(), m2.a())) return false;
  return isomorphic(m1, m2);
}

}  // namespace wittmod
