#include "wittmod/scalar.hpp"

#include <cctype>
#include <sstream>

#include "wittmod/errors.hpp"

namespace wittmod {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::vector<std::string_view> split_list(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw ParseError("unbalanced parentheses in '" + std::string(text) + "'");
    text = trim(text.substr(1, text.size() - 2));
  }
  std::vector<std::string_view> parts;
  if (text.empty()) return parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      parts.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  return parts;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view s = trim(text);
  std::string_view num = s, den;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = trim(s.substr(0, slash));
    den = trim(s.substr(slash + 1));
    if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+')
      throw ParseError("bad denominator in scalar '" + std::string(text) + "'");
  }
  if (!is_integer_literal(num)) throw ParseError("bad scalar '" + std::string(text) + "'");
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  mpz_class numerator(n, 10);
  mpz_class denominator = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (denominator == 0) throw ParseError("zero denominator in scalar '" + std::string(text) + "'");
  Scalar q(numerator, denominator);
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& s) { return s.get_str(); }

MultiIndex MultiIndex::unit(std::size_t n, std::size_t i) {
  MultiIndex k(n);
  k[i] = 1;
  return k;
}

int MultiIndex::total() const noexcept {
  int t = 0;
  for (int x : e_) t += x;
  return t;
}

bool MultiIndex::is_zero() const noexcept {
  for (int x : e_)
    if (x != 0) return false;
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  if (size() != o.size()) throw DimensionError("multi-index length mismatch");
  MultiIndex r(*this);
  for (std::size_t i = 0; i < size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const {
  if (size() != o.size()) throw DimensionError("multi-index length mismatch");
  MultiIndex r(*this);
  for (std::size_t i = 0; i < size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

MultiIndex MultiIndex::operator-() const {
  MultiIndex r(*this);
  for (int& x : r.e_) x = -x;
  return r;
}

CVec CVec::unit(std::size_t n, std::size_t i) {
  CVec v(n);
  v[i] = 1;
  return v;
}

CVec CVec::constant(std::size_t n, const Scalar& c) { return CVec(std::vector<Scalar>(n, c)); }

bool CVec::is_zero() const {
  for (const auto& x : e_)
    if (x != 0) return false;
  return true;
}

CVec CVec::operator+(const CVec& o) const {
  if (size() != o.size()) throw DimensionError("vector length mismatch");
  CVec r(*this);
  for (std::size_t i = 0; i < size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

CVec CVec::operator-(const CVec& o) const {
  if (size() != o.size()) throw DimensionError("vector length mismatch");
  CVec r(*this);
  for (std::size_t i = 0; i < size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

CVec CVec::operator-() const {
  CVec r(*this);
  for (auto& x : r.e_) x = -x;
  return r;
}

CVec operator*(const Scalar& c, const CVec& v) {
  CVec r(v);
  for (auto& x : r.e_) x *= c;
  return r;
}

Scalar pairing(const CVec& u, const MultiIndex& k) {
  if (u.size() != k.size())
    throw DimensionError("pairing: lengths " + std::to_string(u.size()) + " and " +
                         std::to_string(k.size()));
  Scalar s = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (k[i] != 0) s += u[i] * k[i];
  return s;
}

Scalar pairing(const CVec& u, const CVec& v) {
  if (u.size() != v.size()) throw DimensionError("pairing: length mismatch");
  Scalar s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

CVec parse_cvec(std::string_view text) {
  std::vector<Scalar> out;
  for (auto part : split_list(text)) out.push_back(parse_scalar(part));
  return CVec(std::move(out));
}

MultiIndex parse_multi_index(std::string_view text) {
  std::vector<int> out;
  for (auto part : split_list(text)) {
    if (!is_integer_literal(part)) throw ParseError("bad integer '" + std::string(part) + "'");
    out.push_back(std::stoi(std::string(part)));
  }
  return MultiIndex(std::move(out));
}

std::string to_string(const CVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += to_string(v[i]);
  }
  return s + ")";
}

std::string to_string(const MultiIndex& k) {
  std::string s = "(";
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(k[i]);
  }
  return s + ")";
}

std::ostream& operator<<(std::ostream& os, const MultiIndex& k) { return os << to_string(k); }
std::ostream& operator<<(std::ostream& os, const CVec& v) { return os << to_string(v); }

unsigned long binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r.get_ui();
}

Scalar power(const Scalar& base, int exp) {
  if (exp < 0 && base == 0) throw DomainError("negative power of zero");
  Scalar r = 1;
  unsigned e = static_cast<unsigned>(exp < 0 ? -exp : exp);
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  if (exp < 0) r = 1 / r;
  r.canonicalize();
  return r;
}

}  // namespace wittmod
