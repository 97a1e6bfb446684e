#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wittmod/errors.hpp"
#include "wittmod/random.hpp"
#include "wittmod/structure.hpp"

using namespace wittmod;

namespace {

Poly P(const char* text, std::size_t n = 2) { return parse_poly(text, n); }

std::size_t dim_p(std::size_t n, int d) {
  return binomial(static_cast<unsigned>(n + static_cast<std::size_t>(d)), static_cast<unsigned>(n));
}

Matrix matrix_of(const std::vector<Poly>& polys, int bound) {
  const MonomialBasis mb(polys.front().rank(), bound);
  Matrix m(mb.dimension());
  for (const auto& p : polys) m.append(coeff_vector(p, mb));
  return m;
}

}  // namespace

TEST(Parameters, Reducibility) {
  EXPECT_EQ(reducible_a(2, 1), Scalar(-1, 3));
  EXPECT_EQ(reducibility_index(2, Scalar(-2, 3)), 2);
  EXPECT_EQ(reducibility_index(3, Scalar(-1, 2)), 2);
  EXPECT_EQ(reducibility_index(2, 0), 0);
  EXPECT_FALSE(reducibility_index(2, Scalar(1, 2)).has_value());
  EXPECT_FALSE(reducibility_index(2, Scalar(-1, 4)).has_value());
  EXPECT_FALSE(reducibility_index(2, Scalar(1, 3)).has_value());
  for (std::size_t n = 1; n <= 4; ++n)
    for (int m = 0; m < 6; ++m) EXPECT_EQ(reducibility_index(n, reducible_a(n, m)), m);
}

TEST(YPolynomials, Factors) {
  EXPECT_EQ(y_factor(2, 1, 0, Scalar(5, 7)), P("1"));
  EXPECT_EQ(y_factor(2, 1, 2, Scalar(-1, 3)), P("d1^2 + (1/3)*d1 - 2/9"));
  EXPECT_EQ(y_factor(2, 2, 1, Scalar(3, 4)), P("d2 + 3/4"));
  EXPECT_THROW(y_factor(2, 3, 1, 0), DomainError);
}

TEST(YPolynomials, Products) {
  const Scalar a(-1, 3);
  EXPECT_EQ(y_product({MultiIndex{0, 0}, a}), P("1"));
  EXPECT_EQ(y_product({MultiIndex{1, 1}, a}), P("(d1 - 1/3)*(d2 - 1/3)"));
  EXPECT_EQ(y_product({MultiIndex{2, 0}, a}), y_factor(2, 1, 2, a));
  EXPECT_EQ(total_degree(y_product({MultiIndex{2, 0}, a})), 2);
}

TEST(YPolynomials, Compositions) {
  EXPECT_EQ(compositions(2, 2), (std::vector<MultiIndex>{{2, 0}, {1, 1}, {0, 2}}));
  for (std::size_t n = 1; n <= 4; ++n)
    for (int t = 0; t <= 4; ++t)
      EXPECT_EQ(compositions(n, t).size(), binomial(static_cast<unsigned>(t + static_cast<int>(n) - 1),
                                                    static_cast<unsigned>(n - 1)));
}

TEST(WBasis, GeneratorsIndependentInLowDegree) {
  const auto gens = w_spanning_set(2, 1, 2);
  ASSERT_EQ(gens.size(), 3u);
  EXPECT_EQ(row_reduce(matrix_of(gens, 2)).rank, 3u);
  EXPECT_EQ(w_basis(2, 1, 2).dimension(), 3u);
}

TEST(WBasis, SpanningSetIsDependent) {
  // {Y(j), d1 Y(j), d2 Y(j)} with |j| = 2 has 9 members but rank 7
  const auto span = w_spanning_set(2, 1, 3);
  EXPECT_EQ(span.size(), 9u);
  EXPECT_EQ(oracle::modular_rank(matrix_of(span, 3)), 7u);
  EXPECT_EQ(w_basis(2, 1, 3).dimension(), 7u);
}

TEST(WBasis, MZero) {
  const SubspaceBasis w = w_basis(2, 0, 1);
  EXPECT_EQ(w.dimension(), 2u);
  EXPECT_EQ(w, span_of(2, {P("d1"), P("d2")}, 1));
  EXPECT_EQ(w_basis(2, 3, 2).dimension(), 0u);
}

TEST(WBasis, DimensionsAgainstOracle) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      for (int bound = m + 1; bound <= m + 3; ++bound) {
        if (n == 3 && bound > 5) continue;
        const auto span = w_spanning_set(n, m, bound);
        const std::size_t dim = w_basis(n, m, bound).dimension();
        EXPECT_EQ(dim, oracle::modular_rank(matrix_of(span, bound))) << n << m << bound;
        EXPECT_EQ(dim, dim_p(n, bound) - dim_p(n, m)) << n << m << bound;
      }
}

TEST(Membership, Examples) {
  const Scalar a(-1, 3);
  const SubspaceBasis w = w_basis(2, 1, 4);
  EXPECT_TRUE(member_w(y_product({MultiIndex{2, 0}, a}) * P("d2"), w));
  EXPECT_FALSE(member_w(P("1"), w));
  const OmegaModule mod = OmegaModule::from_a(2, a, CVec{2, 3});
  EXPECT_TRUE(member_w(act_witt_element(mod, sl_cartan(1, 2), y_product({MultiIndex{2, 0}, a})), w));
  EXPECT_TRUE(member_w(Poly(2), w));
  EXPECT_THROW(member_w(P("d1^5"), w), TruncationError);
}

TEST(Membership, RandomMultiplesOfY) {
  Sampler rng(600);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 2);
    const int m = rng.uniform(0, 2);
    const auto js = compositions(n, m + 1);
    const MultiIndex& j = js[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(js.size()) - 1))];
    const Poly q = rng.poly_of_degree(n, 2);
    const Poly f = q * y_product({j, reducible_a(n, m)});
    const SubspaceBasis w = w_basis(n, m, m + 3);
    EXPECT_TRUE(member_w(f, w));
    EXPECT_TRUE(reduce_modulo(f, w).is_zero());
    // adding a constant leaves W
    EXPECT_FALSE(member_w(f + Poly::constant(n, 1), w));
  }
}

TEST(QuotientDim, Examples) {
  EXPECT_EQ(quotient_dim(2, 1, 2), 3u);
  EXPECT_EQ(quotient_dim(2, 0, 1), 1u);
  EXPECT_EQ(quotient_dim(3, 2, 3), 10u);
  EXPECT_THROW(quotient_dim(2, 2, 2), DomainError);
  const QuotientDimension q = quotient_dim_stable(2, 3);
  EXPECT_TRUE(q.stable);
  EXPECT_EQ(q.value, 10u);
  ASSERT_EQ(q.by_bound.size(), 3u);
  EXPECT_EQ(q.by_bound.front().first, 4);
}

TEST(QuotientDim, QuotientSpannedByLowMonomials) {
  // monomials of degree <= m are independent modulo W
  for (std::size_t n = 1; n <= 3; ++n)
    for (int m = 0; m <= 2; ++m) {
      const SubspaceBasis w = w_basis(n, m, m + 1);
      std::vector<Poly> all = w.polys();
      const MonomialBasis low(n, m);
      for (const auto& e : low.monomials()) all.push_back(Poly::monomial(n, e));
      EXPECT_EQ(span_of(n, all, m + 1).dimension(), dim_p(n, m + 1));
    }
}

TEST(WeylDimension, AgainstHookContent) {
  for (std::size_t rank = 1; rank <= 4; ++rank) {
    std::vector<int> w(rank, 0);
    for (int trial = 0; trial < 60; ++trial) {
      for (std::size_t i = 0; i < rank; ++i) w[i] = (trial / static_cast<int>(i + 1) + static_cast<int>(i)) % 4;
      EXPECT_EQ(Scalar(weyl_dimension(w)), oracle::hook_content_dim(w));
    }
  }
  EXPECT_EQ(weyl_dimension({1, 1}), 8u);
  for (std::size_t n = 1; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m) {
      std::vector<int> top(n, 0), bottom(n, 0);
      top[n - 1] = m;
      bottom[0] = m;
      EXPECT_EQ(weyl_dimension(top), binomial(static_cast<unsigned>(m + static_cast<int>(n)), static_cast<unsigned>(m)));
      EXPECT_EQ(weyl_dimension(bottom), weyl_dimension(top));
    }
}

TEST(Closure, CyclicOnOne) {
  for (const Scalar a : {Scalar(1, 2), Scalar(2), Scalar(-1, 4)}) {
    const OmegaModule mod = OmegaModule::from_a(2, a, CVec{2, 3});
    const ClosureResult c = sl_closure(mod, {P("1")}, 3);
    EXPECT_TRUE(c.stable);
    EXPECT_EQ(c.basis.dimension(), dim_p(2, 3));
  }
}

TEST(Closure, YGeneratesW) {
  for (const auto& [n, m] : std::vector<std::pair<std::size_t, int>>{{2, 0}, {2, 1}, {2, 2}, {3, 1}}) {
    const Scalar a = reducible_a(n, m);
    const OmegaModule mod = OmegaModule::from_a(n, a, CVec::constant(n, Scalar(3, 2)));
    for (const MultiIndex& j : compositions(n, m + 1)) {
      const ClosureResult c = sl_closure(mod, {y_product({j, a})}, m + 2);
      EXPECT_TRUE(c.stable);
      EXPECT_EQ(c.basis, w_basis(n, m, m + 2)) << "n=" << n << " m=" << m << " j=" << j;
    }
  }
}

TEST(Closure, ZeroAndNarrowWindow) {
  const OmegaModule mod = OmegaModule::from_a(2, Scalar(1, 2), CVec{1, 1});
  EXPECT_EQ(sl_closure(mod, {Poly(2)}, 3).basis.dimension(), 0u);
  EXPECT_EQ(sl_closure(mod, {}, 2).basis.dimension(), 0u);
  // window closures grow with the window and never leave W
  const Scalar a = reducible_a(2, 2);
  const OmegaModule red = OmegaModule::from_a(2, a, CVec{1, 1});
  const Poly y = y_product({MultiIndex{0, 3}, a});
  const SubspaceBasis w = w_basis(2, 2, 4);
  std::size_t last = 0;
  for (int slack = 0; slack <= 3; ++slack) {
    const ClosureResult c = sl_closure(red, {y}, 4, slack);
    EXPECT_TRUE(c.stable);
    EXPECT_GE(c.basis.dimension(), last);
    last = c.basis.dimension();
    for (const Poly& f : c.basis.polys()) EXPECT_TRUE(member_w(f, w));
  }
  EXPECT_EQ(last, w.dimension());
  EXPECT_LT(sl_closure(red, {y}, 4, 0).basis.dimension(), w.dimension());
}

// the slice must not depend on which spanning set of the generators is given
TEST(Closure, BasisIndependent) {
  const Scalar a = reducible_a(2, 1);
  const OmegaModule red = OmegaModule::from_a(2, a, CVec{2, 3});
  const Poly y1 = y_product({MultiIndex{2, 0}, a}), y2 = y_product({MultiIndex{1, 1}, a});
  for (int slack = 0; slack <= 2; ++slack)
    EXPECT_EQ(sl_closure(red, {y1, y2}, 3, slack).basis, sl_closure(red, {y1 + y2, y1 - y2}, 3, slack).basis);
}

TEST(Closure, GeneratorsPreserveW) {
  for (const auto& [n, m] : std::vector<std::pair<std::size_t, int>>{{2, 1}, {2, 2}, {3, 1}}) {
    const OmegaModule mod = OmegaModule::from_a(n, reducible_a(n, m), CVec::constant(n, 5));
    const SubspaceBasis w = w_basis(n, m, m + 2), next = w_basis(n, m, m + 3);
    for (const Poly& f : w.polys())
      for (const auto& [name, x] : sl_generators(n)) EXPECT_TRUE(member_w(act_witt_element(mod, x, f), next)) << name;
  }
}

TEST(ReduceDegree, Examples) {
  const OmegaModule mod = OmegaModule::from_a(2, Scalar(1, 2), CVec{2, 3});
  const Poly g = reduce_degree(mod, P("d1^2"));
  EXPECT_EQ(total_degree(g), 1);
  EXPECT_EQ(g.coeff(MultiIndex{1, 0}), 5);
  EXPECT_EQ(g.coeff(MultiIndex{0, 1}), 0);
  EXPECT_THROW(reduce_degree(mod, P("7")), DomainError);
  EXPECT_THROW(reduce_degree(mod, Poly(2)), DomainError);
  // d(d-1+3a) at d = 1 is 3a, nonzero for a = -1/3 and zero for a = 0
  const OmegaModule third = OmegaModule::from_a(2, Scalar(-1, 3), CVec{2, 3});
  EXPECT_EQ(total_degree(reduce_degree(third, P("d1 + 4"))), 0);
  const OmegaModule zero = OmegaModule::from_a(2, 0, CVec{2, 3});
  try {
    reduce_degree(zero, P("d1 + 4"));
    FAIL() << "expected ObstructionError";
  } catch (const ObstructionError& e) {
    EXPECT_EQ(e.degree(), 1);
    EXPECT_EQ(e.a(), 0);
  }
  EXPECT_THROW(reduce_degree(third, y_product({MultiIndex{1, 1}, Scalar(-1, 3)})), ObstructionError);
}

TEST(ReduceDegree, EliminationClearsOtherVariables) {
  Sampler rng(700);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 2);
    const OmegaModule mod = OmegaModule::from_a(n, Scalar(1, 2), CVec::constant(n, rng.nonzero_rational()));
    const Poly p = rng.poly_of_degree(n, 4);
    const Poly f = eliminate_to_first_variable(mod, p);
    for (std::size_t i = 1; i < n; ++i) EXPECT_LE(degree_in(f, i), 0);
    EXPECT_FALSE(f.is_zero());
  }
}

TEST(ReduceDegree, StaysInGeneratedSubmodule) {
  Sampler rng(701);
  for (int t = 0; t < 8; ++t) {
    const OmegaModule mod = OmegaModule::from_a(2, Scalar(1, 3), CVec{2, Scalar(1, 2)});
    const Poly p = rng.poly_of_degree(2, 2);
    if (total_degree(p) == 0) continue;
    const Poly g = reduce_degree(mod, p);
    EXPECT_LT(total_degree(g), total_degree(p));
    const ClosureResult c = sl_closure(mod, {p}, 2, 3);
    EXPECT_TRUE(member_w(g, c.basis));
  }
}

TEST(Witness, IrreducibleParameters) {
  for (const Scalar a : {Scalar(1, 2), Scalar(1, 3), Scalar(2), Scalar(-1, 4)}) {
    const OmegaModule mod = OmegaModule::from_a(2, a, CVec{2, 3});
    Sampler rng(800);
    for (int s = 0; s < 20; ++s) {
      const Poly p = rng.poly_of_degree(2, 5);
      const WitnessChain c = irreducible_chain(mod, p);
      EXPECT_TRUE(c.reached_one);
      EXPECT_EQ(c.final_poly, P("1"));
      EXPECT_EQ(c.degrees.front(), total_degree(p));
      EXPECT_EQ(c.degrees.back(), 0);
      for (std::size_t i = 1; i < c.degrees.size(); ++i) EXPECT_LT(c.degrees[i], c.degrees[i - 1]);
    }
  }
}

TEST(Witness, ObstructionAtMPlusOne) {
  const OmegaModule red = OmegaModule::from_a(2, Scalar(-1, 3), CVec{2, 3});
  const WitnessChain c = irreducible_chain(red, y_product({MultiIndex{2, 0}, Scalar(-1, 3)}));
  EXPECT_FALSE(c.reached_one);
  EXPECT_EQ(c.obstruction_degree, 2);
  for (std::size_t n = 2; n <= 3; ++n)
    for (int m = 0; m <= 2; ++m) {
      const Scalar a = reducible_a(n, m);
      const OmegaModule mod = OmegaModule::from_a(n, a, CVec::constant(n, 2));
      for (const auto& j : compositions(n, m + 1)) {
        const WitnessChain w = irreducible_chain(mod, y_product({j, a}));
        EXPECT_EQ(w.obstruction_degree, m + 1);
        EXPECT_FALSE(irreducible_witness(mod, y_product({j, a})));
      }
    }
}

TEST(LowestWeight, CartanEigenvalues) {
  const int m = 1;
  const Scalar a = reducible_a(2, m);
  const OmegaModule mod = OmegaModule::from_a(2, a, CVec{2, 3});
  const SubspaceBasis w = w_basis(2, m, m + 1);
  const Poly y = y_factor(2, 1, m, a);
  EXPECT_TRUE(reduce_modulo(act_witt_element(mod, sl_cartan(1, 2), y) + y, w).is_zero());
  // e_{n+1,n} Y = lambda_n^{-1} Y Y^n_1
  EXPECT_EQ(act_witt_element(mod, sl_embed(3, 2, 2), y), scale(Scalar(1, 3), y * y_factor(2, 2, 1, a)));
  for (std::size_t n = 3; n <= 4; ++n) {
    const Scalar an = reducible_a(n, 2);
    const OmegaModule modn = OmegaModule::from_a(n, an, CVec::constant(n, 7));
    const SubspaceBasis wn = w_basis(n, 2, 3);
    const Poly yn = y_factor(n, 1, 2, an);
    for (std::size_t i = 2; i <= n - 1; ++i)
      EXPECT_TRUE(reduce_modulo(act_witt_element(modn, sl_cartan(i, n), yn), wn).is_zero());
  }
}

TEST(LowestWeight, Check) {
  for (const auto& [n, m] : std::vector<std::pair<std::size_t, int>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {2, 0}}) {
    const LowestWeightReport r = lowest_weight_report(n, m, CVec::constant(n, Scalar(2, 5)));
    EXPECT_TRUE(r.all_pass());
    std::vector<Scalar> want(n, 0);
    want[0] = -m;
    EXPECT_EQ(r.weight.values, want);
    EXPECT_EQ(lowest_weight_check(n, m, CVec::constant(n, 3)).values, want);
  }
}

TEST(Isomorphism, ExtractParams) {
  const OmegaModule mod(2, Scalar(1, 2), CVec{2, 3});
  EXPECT_EQ(extract_params(mod), (ModuleParams{Scalar(1, 2), CVec{2, 3}}));
  EXPECT_EQ(extract_params(OmegaModule(3, 1, CVec{1, 2, 3})).a, 0);
  EXPECT_NE(extract_params(mod), extract_params(OmegaModule(2, Scalar(1, 2), CVec{5, 3})));
}

TEST(Isomorphism, Verdicts) {
  const OmegaModule m1 = OmegaModule::from_a(2, Scalar(1, 2), CVec{2, 3});
  EXPECT_TRUE(isomorphic(m1, m1));
  EXPECT_FALSE(isomorphic(m1, OmegaModule::from_a(2, Scalar(1, 3), CVec{2, 3})));
  EXPECT_FALSE(isomorphic(m1, OmegaModule::from_a(2, Scalar(1, 2), CVec{3, 2})));
  EXPECT_FALSE(isomorphic(m1, OmegaModule::from_a(3, Scalar(1, 2), CVec{2, 3, 1})));
  const OmegaModule w1 = OmegaModule::from_a(2, Scalar(-1, 3), CVec{2, 3});
  EXPECT_TRUE(isomorphic_w(w1, w1));
  EXPECT_FALSE(isomorphic_w(w1, OmegaModule::from_a(2, Scalar(-2, 3), CVec{2, 3})));
  EXPECT_FALSE(isomorphic_w(w1, OmegaModule::from_a(2, Scalar(-1, 3), CVec{2, 5})));
  EXPECT_FALSE(isomorphic_w(m1, m1));
}
