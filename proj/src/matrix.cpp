#include "wittmod/matrix.hpp"

#include <utility>

#include "wittmod/errors.hpp"

namespace wittmod {

namespace {

using IntRow = std::vector<mpz_class>;

IntRow clear_denominators(const Row& r) {
  mpz_class l = 1;
  for (const auto& x : r)
    if (x != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntRow out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = r[i].get_num() * (l / r[i].get_den());
  return out;
}

void remove_content(IntRow& r) {
  mpz_class g = 0;
  for (const auto& x : r) {
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

Matrix::Matrix(std::size_t cols, std::vector<Row> r) : ncols(cols), rows(std::move(r)) {
  for (const auto& row : rows)
    if (row.size() != ncols) throw DimensionError("matrix row width mismatch");
}

void Matrix::append(Row r) {
  if (r.size() != ncols) throw DimensionError("matrix row width mismatch");
  rows.push_back(std::move(r));
}

Reduced row_reduce(const Matrix& m) {
  std::vector<IntRow> a;
  a.reserve(m.nrows());
  for (const auto& r : m.rows) a.push_back(clear_denominators(r));

  // forward elimination, fraction-free
  std::vector<std::size_t> pivots;
  std::size_t top = 0;
  for (std::size_t col = 0; col < m.ncols && top < a.size(); ++col) {
    std::size_t sel = top;
    while (sel < a.size() && a[sel][col] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[top], a[sel]);
    remove_content(a[top]);
    const mpz_class& p = a[top][col];
    for (std::size_t r = top + 1; r < a.size(); ++r) {
      if (a[r][col] == 0) continue;
      mpz_class f = a[r][col];
      for (std::size_t c = col; c < m.ncols; ++c) a[r][c] = a[r][c] * p - f * a[top][c];
      remove_content(a[r]);
    }
    pivots.push_back(col);
    ++top;
  }

  // back-substitution over the rationals
  Reduced out;
  out.rank = pivots.size();
  out.pivots = pivots;
  out.rref.ncols = m.ncols;
  out.rref.rows.resize(out.rank);
  for (std::size_t r = 0; r < out.rank; ++r) {
    Row row(m.ncols);
    const mpz_class& p = a[r][pivots[r]];
    for (std::size_t c = 0; c < m.ncols; ++c) {
      if (a[r][c] != 0) {
        row[c] = Scalar(a[r][c], p);
        row[c].canonicalize();
      }
    }
    out.rref.rows[r] = std::move(row);
  }
  for (std::size_t r = out.rank; r-- > 0;) {
    for (std::size_t above = 0; above < r; ++above) {
      Scalar f = out.rref.rows[above][pivots[r]];
      if (f == 0) continue;
      for (std::size_t c = pivots[r]; c < m.ncols; ++c)
        if (out.rref.rows[r][c] != 0) out.rref.rows[above][c] -= f * out.rref.rows[r][c];
    }
  }
  return out;
}

std::vector<std::size_t> pivot_columns(const Matrix& rref) {
  std::vector<std::size_t> piv;
  piv.reserve(rref.nrows());
  for (const auto& r : rref.rows) {
    std::size_t c = 0;
    while (c < r.size() && r[c] == 0) ++c;
    if (c == r.size()) throw DomainError("zero row in RREF basis");
    piv.push_back(c);
  }
  return piv;
}

Row normal_form(const Row& v, const Matrix& rref) {
  if (v.size() != rref.ncols)
    throw DimensionError("row of width " + std::to_string(v.size()) + " against basis of width " +
                         std::to_string(rref.ncols));
  Row w = v;
  const auto piv = pivot_columns(rref);
  for (std::size_t r = 0; r < rref.nrows(); ++r) {
    Scalar f = w[piv[r]];
    if (f == 0) continue;
    const Row& b = rref.rows[r];
    for (std::size_t c = piv[r]; c < w.size(); ++c)
      if (b[c] != 0) w[c] -= f * b[c];
  }
  return w;
}

bool in_span(const Row& v, const Matrix& rref) { return is_zero_row(normal_form(v, rref)); }

bool is_zero_row(const Row& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace wittmod
