#include "wittmod/poly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <utility>

#include "wittmod/errors.hpp"

namespace wittmod {

bool GradedOrder::operator()(const MultiIndex& x, const MultiIndex& y) const {
  const int dx = x.total(), dy = y.total();
  if (dx != dy) return dx < dy;
  return y < x;
}

Poly::Poly(std::size_t n, Terms terms) : n_(n) {
  for (auto& [e, c] : terms) {
    if (e.size() != n) throw DimensionError("monomial length does not match rank");
    if (c != 0) terms_.emplace(e, c);
  }
}

Poly Poly::constant(std::size_t n, const Scalar& c) {
  Poly p(n);
  p.add_term(MultiIndex(n), c);
  return p;
}

Poly Poly::monomial(std::size_t n, const MultiIndex& exps, const Scalar& c) {
  Poly p(n);
  p.add_term(exps, c);
  return p;
}

Poly Poly::variable(std::size_t n, std::size_t i) {
  if (i >= n) throw DomainError("variable index out of range");
  return monomial(n, MultiIndex::unit(n, i));
}

Scalar Poly::coeff(const MultiIndex& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar Poly::constant_term() const { return coeff(MultiIndex(n_)); }

void Poly::add_term(const MultiIndex& exps, const Scalar& c) {
  if (exps.size() != n_) throw DimensionError("monomial length does not match rank");
  if (c == 0) return;
  for (int x : exps)
    if (x < 0) throw DomainError("negative exponent in polynomial");
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Poly::check_rank(const Poly& o) const {
  if (n_ != o.n_)
    throw DimensionError("polynomial ranks " + std::to_string(n_) + " and " + std::to_string(o.n_));
}

Poly& Poly::operator+=(const Poly& o) {
  check_rank(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_rank(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r(*this);
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r(*this);
  r -= o;
  return r;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check_rank(o);
  Poly r(n_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

Poly operator*(const Scalar& c, const Poly& p) {
  if (c == 0) return Poly(p.n_);
  Poly r(p);
  for (auto& [e, x] : r.terms_) x *= c;
  return r;
}

Poly add(const Poly& p, const Poly& q) { return p + q; }
Poly mul(const Poly& p, const Poly& q) { return p * q; }
Poly scale(const Scalar& c, const Poly& p) { return c * p; }

Poly pow(const Poly& p, unsigned e) {
  Poly r = Poly::constant(p.rank(), 1);
  Poly base = p;
  while (e) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return r;
}

namespace {

// (x - j)^k = sum_t C(k,t) (-j)^(k-t) x^t, returned as coefficients indexed by t.
std::vector<Scalar> shifted_power(int k, int j) {
  std::vector<Scalar> out(static_cast<std::size_t>(k) + 1);
  const mpz_class minus_j = -j;
  mpz_class binom = 1;
  for (int t = 0; t <= k; ++t) {
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), minus_j.get_mpz_t(), static_cast<unsigned long>(k - t));
    out[static_cast<std::size_t>(t)] = binom * p;
    binom = binom * (k - t) / (t + 1);
  }
  return out;
}

}  // namespace

Poly shift(const Poly& p, const MultiIndex& j) {
  if (j.size() != p.rank()) throw DimensionError("shift vector length does not match rank");
  if (j.is_zero()) return p;
  const std::size_t n = p.rank();
  Poly out(n);
  for (const auto& [e, c] : p.terms()) {
    // expand variable by variable
    std::vector<std::pair<MultiIndex, Scalar>> acc{{MultiIndex(n), c}};
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] == 0) continue;
      if (j[i] == 0) {
        for (auto& [m, x] : acc) m[i] = e[i];
        continue;
      }
      const auto factor = shifted_power(e[i], j[i]);
      std::vector<std::pair<MultiIndex, Scalar>> next;
      next.reserve(acc.size() * factor.size());
      for (const auto& [m, x] : acc)
        for (std::size_t t = 0; t < factor.size(); ++t) {
          if (factor[t] == 0) continue;
          MultiIndex mm = m;
          mm[i] = static_cast<int>(t);
          next.emplace_back(std::move(mm), x * factor[t]);
        }
      acc = std::move(next);
    }
    for (const auto& [m, x] : acc) out.add_term(m, x);
  }
  return out;
}

int total_degree(const Poly& p) {
  if (p.is_zero()) return kMinusInfinity;
  return p.terms().rbegin()->first.total();
}

int degree_in(const Poly& p, std::size_t i) {
  if (i >= p.rank()) throw DomainError("variable index out of range");
  if (p.is_zero()) return kMinusInfinity;
  int d = 0;
  for (const auto& [e, c] : p.terms()) d = std::max(d, e[i]);
  return d;
}

MonomialBasis::MonomialBasis(std::size_t n, int bound) : n_(n), bound_(bound) {
  if (bound < 0) return;
  for (int d = 0; d <= bound; ++d) {
    // exponent vectors of total degree d, lexicographically decreasing
    MultiIndex cur(n);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
      if (i + 1 == n) {
        cur[i] = left;
        monomials_.push_back(cur);
        return;
      }
      for (int x = left; x >= 0; --x) {
        cur[i] = x;
        rec(i + 1, left - x);
      }
    };
    if (n == 0) {
      if (d == 0) monomials_.push_back(cur);
    } else {
      rec(0, d);
    }
  }
  for (std::size_t k = 0; k < monomials_.size(); ++k) index_.emplace(monomials_[k], k);
}

std::size_t MonomialBasis::position(const MultiIndex& m) const {
  auto it = index_.find(m);
  if (it == index_.end())
    throw TruncationError("monomial " + to_string(m) + " exceeds degree bound " +
                          std::to_string(bound_));
  return it->second;
}

std::size_t MonomialBasis::prefix_dimension(int d) const {
  if (d < 0) return 0;
  if (d >= bound_) return monomials_.size();
  return binomial(static_cast<unsigned>(n_ + d), static_cast<unsigned>(n_));
}

Row coeff_vector(const Poly& p, const MonomialBasis& basis) {
  if (p.rank() != basis.rank()) throw DimensionError("polynomial rank does not match basis");
  if (total_degree(p) > basis.bound())
    throw TruncationError("polynomial of degree " + std::to_string(total_degree(p)) +
                          " exceeds bound " + std::to_string(basis.bound()));
  Row row(basis.dimension());
  for (const auto& [e, c] : p.terms()) row[basis.position(e)] = c;
  return row;
}

Row coeff_vector(const Poly& p, int degree_bound) {
  return coeff_vector(p, MonomialBasis(p.rank(), degree_bound));
}

Poly from_coeff_vector(const Row& row, const MonomialBasis& basis) {
  if (row.size() != basis.dimension()) throw DimensionError("row width does not match basis");
  Poly p(basis.rank());
  for (std::size_t k = 0; k < row.size(); ++k) p.add_term(basis.monomials()[k], row[k]);
  return p;
}

// ---------------------------------------------------------------------------
// text form

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view s, std::size_t n) : s_(s), n_(n) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("polynomial '" + std::string(s_) + "' at " + std::to_string(pos_) + ": " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  mpz_class integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)), 10);
  }

  Poly expr() {
    skip();
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Poly acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Poly term() {
    Poly acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  Poly factor() {
    Poly base = primary();
    if (eat('^')) {
      mpz_class e = integer();
      if (!e.fits_uint_p()) fail("exponent too large");
      base = pow(base, static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Poly primary() {
    skip();
    if (eat('(')) {
      Poly inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (pos_ < s_.size() && s_[pos_] == 'd') {
      ++pos_;
      mpz_class idx = integer();
      if (idx < 1 || idx > static_cast<long>(n_)) fail("variable index out of range 1.." + std::to_string(n_));
      return Poly::variable(n_, static_cast<std::size_t>(idx.get_ui() - 1));
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      mpz_class num = integer();
      mpz_class den = 1;
      if (eat('/')) den = integer();
      if (den == 0) fail("zero denominator");
      Scalar q(num, den);
      q.canonicalize();
      return Poly::constant(n_, q);
    }
    fail("expected a term");
  }

  std::string_view s_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const MultiIndex& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'd' + std::to_string(i + 1);
    if (e[i] > 1) s += '^' + std::to_string(e[i]);
  }
  return s;
}

}  // namespace

Poly parse_poly(std::string_view text, std::size_t n) { return PolyParser(text, n).parse(); }

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool neg = c < 0;
    const Scalar mag = neg ? Scalar(-c) : c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    const std::string mono = monomial_text(e);
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else if (mag.get_den() == 1) {
      out += to_string(mag) + "*" + mono;
    } else {
      out += "(" + to_string(mag) + ")*" + mono;
    }
  }
  return out;
}

}  // namespace wittmod
