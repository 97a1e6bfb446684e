#include "wittmod/random.hpp"

#include <limits>

namespace wittmod {

int Sampler::uniform(int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = rng_();
  } while (x >= limit);
  return lo + static_cast<int>(x % span);
}

Scalar Sampler::rational() {
  Scalar q(uniform(-kScalarBound, kScalarBound), uniform(1, kScalarBound));
  q.canonicalize();
  return q;
}

Scalar Sampler::nonzero_rational() {
  Scalar q;
  do {
    q = rational();
  } while (q == 0);
  return q;
}

MultiIndex Sampler::multi_index(std::size_t n, int lo, int hi) {
  MultiIndex k(n);
  for (std::size_t i = 0; i < n; ++i) k[i] = uniform(lo, hi);
  return k;
}

MultiIndex Sampler::nonzero_multi_index(std::size_t n) {
  MultiIndex k;
  do {
    k = multi_index(n);
  } while (k.is_zero());
  return k;
}

CVec Sampler::cvec(std::size_t n) {
  CVec u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = rational();
  return u;
}

Poly Sampler::poly(std::size_t n, int max_exponent) {
  Poly p(n);
  while (p.is_zero()) {
    const int terms = uniform(1, kMaxTerms);
    for (int t = 0; t < terms; ++t) p.add_term(multi_index(n, 0, max_exponent), nonzero_rational());
  }
  return p;
}

Poly Sampler::poly_of_degree(std::size_t n, int max_degree) {
  Poly p(n);
  while (p.is_zero()) {
    const int terms = uniform(1, kMaxTerms);
    for (int t = 0; t < terms; ++t) {
      MultiIndex e;
      do {
        e = multi_index(n, 0, max_degree);
      } while (e.total() > max_degree);
      p.add_term(e, nonzero_rational());
    }
  }
  return p;
}

WittElement Sampler::witt(std::size_t n, bool with_torus) {
  WittElement x(n);
  while (x.is_zero()) {
    const int terms = uniform(1, kMaxTerms);
    for (int t = 0; t < terms; ++t) {
      const bool torus = with_torus && uniform(0, 2) == 0;
      if (torus)
        x.add_torus(multi_index(n), nonzero_rational());
      else
        x.add_derivation(cvec(n), multi_index(n));
    }
  }
  return x;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace wittmod
