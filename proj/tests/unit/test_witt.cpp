#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wittmod/errors.hpp"
#include "wittmod/random.hpp"
#include "wittmod/witt.hpp"

using namespace wittmod;

namespace {

WittElement D(const CVec& u, const MultiIndex& r) { return WittElement::derivation(u, r); }
WittElement T(const MultiIndex& r) { return WittElement::torus(r); }

}  // namespace

TEST(Bracket, Examples) {
  EXPECT_EQ(bracket(D({1, 0}, {0, 1}), D({0, 1}, {1, 0})), D({-1, 1}, {1, 1}));
  EXPECT_TRUE(bracket(T({1, 2}), T({-3, 0})).is_zero());
  EXPECT_TRUE(bracket(D({1, 0}, {1, 0}), T({0, 1})).is_zero());
  EXPECT_EQ(bracket(D({0, 1}, {1, 0}), T({0, 1})), T({1, 1}));
  EXPECT_EQ(bracket(T({0, 1}), D({0, 1}, {1, 0})), -T({1, 1}));
  EXPECT_THROW(bracket(D({1, 0}, {0, 0}), D({1, 0, 0}, {0, 0, 0})), DimensionError);
}

TEST(Bracket, MatchesOperatorCommutator) {
  Sampler rng(101);
  for (int t = 0; t < 80; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 3);
    const WittElement x = rng.witt(n), y = rng.witt(n);
    const WittElement z = bracket(x, y);
    for (int s = 0; s < 3; ++s) {
      const oracle::Laurent f{{rng.multi_index(n), 1}};
      EXPECT_EQ(oracle::operate(z, f), oracle::commutator(x, y, f)) << to_string(x) << " , " << to_string(y);
    }
  }
}

TEST(Bracket, LieAxioms) {
  Sampler rng(202);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 2);
    const WittElement x = rng.witt(n), y = rng.witt(n), z = rng.witt(n);
    EXPECT_EQ(bracket(x, y), -bracket(y, x));
    EXPECT_TRUE(bracket(x, x).is_zero());
    const WittElement jacobi = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
    EXPECT_TRUE(jacobi.is_zero());
    const Scalar c = rng.rational();
    EXPECT_EQ(bracket(c * x + y, z), c * bracket(x, z) + bracket(y, z));
  }
}

TEST(Sigma, Examples) {
  EXPECT_EQ(sigma(D({1, 0}, {1, 0}), 2), D({1, 0}, {1, 0}) + 2 * T({1, 0}));
  EXPECT_EQ(sigma(D({3, Scalar(1, 2)}, {0, 0}), Scalar(7, 3)), D({3, Scalar(1, 2)}, {0, 0}));
  EXPECT_EQ(sigma(T({2, -1}), 5), T({2, -1}));
}

TEST(Sigma, IsHomomorphism) {
  EXPECT_TRUE(is_homomorphism_witness(0, D({1, 0}, {2, 1}), T({0, 1})));
  EXPECT_TRUE(is_homomorphism_witness(3, D({1, 0}, {1, 0}), D({0, 1}, {0, 1})));
  EXPECT_TRUE(is_homomorphism_witness(Scalar(1, 2), D({1, 0}, {2, 0}), T({0, 1})));
  Sampler rng(303);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 3);
    const Scalar b = rng.rational();
    const WittElement x = rng.witt(n), y = rng.witt(n);
    EXPECT_TRUE(is_homomorphism_witness(b, x, y));
    EXPECT_EQ(sigma(sigma(x, b), -b), x);
  }
}

TEST(SlEmbed, Examples) {
  EXPECT_EQ(sl_embed(1, 2, 2), D({0, 1}, {1, -1}));
  EXPECT_EQ(sl_embed(3, 1, 2), D({1, 0}, {-1, 0}));
  EXPECT_EQ(sl_embed(1, 3, 2), D({-1, -1}, {1, 0}));
  EXPECT_EQ(sl_embed(3, 3, 2), D({-1, -1}, {0, 0}));
  EXPECT_EQ(sl_cartan(2, 2), D({0, 1}, {0, 0}) - D({-1, -1}, {0, 0}));
  EXPECT_THROW(sl_embed(0, 1, 2), DomainError);
  EXPECT_THROW(sl_embed(1, 4, 2), DomainError);
}

// [e_ij, e_kl] = delta_jk e_il - delta_li e_kj
TEST(SlEmbed, MatrixUnitRelations) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t i = 1; i <= n + 1; ++i)
      for (std::size_t j = 1; j <= n + 1; ++j)
        for (std::size_t k = 1; k <= n + 1; ++k)
          for (std::size_t l = 1; l <= n + 1; ++l) {
            WittElement want(n);
            if (j == k) want += sl_embed(i, l, n);
            if (l == i) want = want - sl_embed(k, j, n);
            EXPECT_EQ(bracket(sl_embed(i, j, n), sl_embed(k, l, n)), want)
                << "n=" << n << " e" << i << j << " e" << k << l;
          }
}

TEST(SlEmbed, TraceVanishes) {
  for (std::size_t n = 1; n <= 4; ++n) {
    WittElement s(n);
    for (std::size_t i = 1; i <= n + 1; ++i) s += sl_embed(i, i, n);
    EXPECT_TRUE(s.is_zero());
  }
}

TEST(WittText, RoundTrip) {
  const WittElement x = parse_witt("D((1,0),(1,-1)) + 2*t^(0,1)", 2);
  EXPECT_EQ(x, D({1, 0}, {1, -1}) + 2 * T({0, 1}));
  EXPECT_EQ(parse_witt("3/2*D((1,0),(0,0)) - D((1,2),(0,0))", 2), D({Scalar(1, 2), -2}, {0, 0}));
  EXPECT_TRUE(parse_witt("0", 3).is_zero());
  Sampler rng(404);
  for (int t = 0; t < 40; ++t) {
    const WittElement w = rng.witt(3);
    EXPECT_EQ(parse_witt(to_string(w), 3), w);
  }
  EXPECT_THROW(parse_witt("D((1,0),(1))", 2), DimensionError);
  EXPECT_THROW(parse_witt("D((1,0)", 2), ParseError);
  EXPECT_THROW(parse_witt("t^(1/2,0)", 2), ParseError);
}
