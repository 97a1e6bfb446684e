#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "wittmod/poly.hpp"
#include "wittmod/scalar.hpp"
#include "wittmod/witt.hpp"

namespace wittmod {

/// Seeded generator for randomized checks. Draws use mt19937_64 with
/// rejection sampling only, so a seed reproduces the same stream on every
/// platform.
///
/// Sampling ranges: numerators in [-10, 10], denominators in [1, 10],
/// at most 3 terms per element, t-exponents in [-3, 3], polynomial exponents
/// in [0, 3].
class Sampler {
 public:
  static constexpr int kScalarBound = 10;
  static constexpr int kMaxTerms = 3;
  static constexpr int kIndexBound = 3;
  static constexpr int kMaxExponent = 3;

  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi);
  Scalar rational();
  Scalar nonzero_rational();
  MultiIndex multi_index(std::size_t n, int lo = -kIndexBound, int hi = kIndexBound);
  MultiIndex nonzero_multi_index(std::size_t n);
  CVec cvec(std::size_t n);
  /// Nonzero polynomial with 1..kMaxTerms terms, exponents <= max_exponent.
  Poly poly(std::size_t n, int max_exponent = kMaxExponent);
  /// Nonzero polynomial with 1..kMaxTerms terms of total degree <= max_degree.
  Poly poly_of_degree(std::size_t n, int max_degree);
  /// Nonzero element with 1..kMaxTerms terms; torus terms only if allowed.
  WittElement witt(std::size_t n, bool with_torus = true);

 private:
  std::mt19937_64 rng_;
};

/// splitmix64 mix of (seed, index); used to give every sample its own
/// reproducible seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace wittmod
