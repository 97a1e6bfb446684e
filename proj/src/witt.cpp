#include "wittmod/witt.hpp"

#include <cctype>

#include "wittmod/errors.hpp"

namespace wittmod {

WittElement WittElement::derivation(const CVec& u, const MultiIndex& r, const Scalar& c) {
  if (u.size() != r.size()) throw DimensionError("D(u,r): u and r lengths differ");
  WittElement x(r.size());
  x.add_derivation(c * u, r);
  return x;
}

WittElement WittElement::torus(const MultiIndex& r, const Scalar& c) {
  WittElement x(r.size());
  x.add_torus(r, c);
  return x;
}

void WittElement::add_derivation(const CVec& u, const MultiIndex& r) {
  if (u.size() != n_ || r.size() != n_) throw DimensionError("derivation term rank mismatch");
  if (u.is_zero()) return;
  auto [it, inserted] = d_.try_emplace(r, u);
  if (!inserted) {
    it->second = it->second + u;
    if (it->second.is_zero()) d_.erase(it);
  }
}

void WittElement::add_torus(const MultiIndex& r, const Scalar& c) {
  if (r.size() != n_) throw DimensionError("torus term rank mismatch");
  if (c == 0) return;
  auto [it, inserted] = t_.try_emplace(r, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

void WittElement::check_rank(const WittElement& o) const {
  if (n_ != o.n_)
    throw DimensionError("Witt element ranks " + std::to_string(n_) + " and " + std::to_string(o.n_));
}

WittElement& WittElement::operator+=(const WittElement& o) {
  check_rank(o);
  for (const auto& [r, u] : o.d_) add_derivation(u, r);
  for (const auto& [r, c] : o.t_) add_torus(r, c);
  return *this;
}

WittElement WittElement::operator+(const WittElement& o) const {
  WittElement x(*this);
  x += o;
  return x;
}

WittElement WittElement::operator-() const { return Scalar(-1) * *this; }

WittElement WittElement::operator-(const WittElement& o) const { return *this + (-o); }

WittElement operator*(const Scalar& c, const WittElement& x) {
  WittElement y(x.n_);
  if (c == 0) return y;
  for (const auto& [r, u] : x.d_) y.d_.emplace(r, c * u);
  for (const auto& [r, s] : x.t_) y.t_.emplace(r, c * s);
  return y;
}

WittElement bracket(const WittElement& x, const WittElement& y) {
  if (x.rank() != y.rank()) throw DimensionError("bracket of elements of different rank");
  WittElement out(x.rank());
  for (const auto& [k, u] : x.derivations()) {
    for (const auto& [s, v] : y.derivations()) {
      CVec w = pairing(u, s) * v - pairing(v, k) * u;
      out.add_derivation(w, k + s);
    }
    for (const auto& [s, c] : y.torus_terms()) out.add_torus(k + s, c * pairing(u, s));
  }
  for (const auto& [s, c] : x.torus_terms())
    for (const auto& [k, u] : y.derivations()) out.add_torus(k + s, -c * pairing(u, s));
  return out;
}

WittElement sigma(const WittElement& x, const Scalar& b) {
  WittElement out(x);
  if (b == 0) return out;
  for (const auto& [k, u] : x.derivations()) out.add_torus(k, b * pairing(u, k));
  return out;
}

bool is_homomorphism_witness(const Scalar& b, const WittElement& x, const WittElement& y) {
  return sigma(bracket(x, y), b) == bracket(sigma(x, b), sigma(y, b));
}

WittElement sl_embed(std::size_t i, std::size_t j, std::size_t n) {
  if (n == 0 || i < 1 || j < 1 || i > n + 1 || j > n + 1)
    throw DomainError("sl_embed: indices (" + std::to_string(i) + "," + std::to_string(j) +
                      ") outside 1.." + std::to_string(n + 1));
  const CVec minus_ones = CVec::constant(n, -1);
  if (i <= n && j <= n) {
    return WittElement::derivation(CVec::unit(n, j - 1),
                                   MultiIndex::unit(n, i - 1) - MultiIndex::unit(n, j - 1));
  }
  if (i <= n) return WittElement::derivation(minus_ones, MultiIndex::unit(n, i - 1));
  if (j <= n) return WittElement::derivation(CVec::unit(n, j - 1), -MultiIndex::unit(n, j - 1));
  return WittElement::derivation(minus_ones, MultiIndex(n));
}

WittElement sl_cartan(std::size_t i, std::size_t n) {
  if (i < 1 || i > n) throw DomainError("sl_cartan: index outside 1..n");
  return sl_embed(i, i, n) - sl_embed(i + 1, i + 1, n);
}

// ---------------------------------------------------------------------------
// text form

namespace {

class WittParser {
 public:
  WittParser(std::string_view s, std::size_t n) : s_(s), n_(n) {}

  WittElement parse() {
    WittElement acc(n_);
    skip();
    if (pos_ == s_.size()) fail("empty input");
    if (s_.substr(pos_) == "0") return acc;
    bool first = true;
    for (;;) {
      skip();
      if (pos_ == s_.size()) break;
      Scalar sign = 1;
      if (eat('-'))
        sign = -1;
      else if (!eat('+') && !first)
        fail("expected '+' or '-'");
      first = false;
      term(acc, sign);
    }
    return acc;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("Witt element '" + std::string(s_) + "' at " + std::to_string(pos_) + ": " + msg);
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

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  std::string_view group() {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != '(') fail("expected '('");
    std::size_t close = s_.find(')', pos_);
    if (close == std::string_view::npos) fail("unbalanced '('");
    std::string_view g = s_.substr(pos_, close - pos_ + 1);
    pos_ = close + 1;
    return g;
  }

  void check_len(std::size_t len) const {
    if (len != n_) throw DimensionError("vector of length " + std::to_string(len) + " in rank " + std::to_string(n_));
  }

  void term(WittElement& acc, const Scalar& sign) {
    skip();
    Scalar coef = 1;
    if (pos_ < s_.size() && s_[pos_] != 'D' && s_[pos_] != 't') {
      std::string_view c;
      if (s_[pos_] == '(') {
        c = group();
      } else {
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
        c = s_.substr(start, pos_ - start);
      }
      if (!c.empty() && c.front() == '(') c = c.substr(1, c.size() - 2);
      coef = parse_scalar(c);
      skip();
      if (pos_ == s_.size() || s_[pos_] == '+' || s_[pos_] == '-') {
        fail("bare scalar is not an element");
      }
      expect('*');
      skip();
    }
    coef *= sign;
    if (eat('D')) {
      expect('(');
      CVec u = parse_cvec(group());
      expect(',');
      MultiIndex r = parse_multi_index(group());
      expect(')');
      check_len(u.size());
      check_len(r.size());
      acc.add_derivation(coef * u, r);
    } else if (eat('t')) {
      expect('^');
      MultiIndex r = parse_multi_index(group());
      check_len(r.size());
      acc.add_torus(r, coef);
    } else {
      fail("expected D(...) or t^(...)");
    }
  }

  std::string_view s_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

WittElement parse_witt(std::string_view text, std::size_t n) { return WittParser(text, n).parse(); }

std::string to_string(const WittElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [r, u] : x.derivations()) {
    if (!first) out += " + ";
    first = false;
    out += "D(" + to_string(u) + "," + to_string(r) + ")";
  }
  for (const auto& [r, c] : x.torus_terms()) {
    const bool neg = c < 0;
    const Scalar mag = neg ? Scalar(-c) : c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    if (mag != 1) out += (mag.get_den() == 1 ? to_string(mag) : "(" + to_string(mag) + ")") + "*";
    out += "t^" + to_string(r);
  }
  return out;
}

}  // namespace wittmod
