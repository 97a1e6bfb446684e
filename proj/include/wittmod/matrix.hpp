#pragma once

#include <cstddef>
#include <vector>

#include "wittmod/scalar.hpp"

namespace wittmod {

using Row = std::vector<Scalar>;

/// Dense rectangular matrix over the rationals.
struct Matrix {
  std::size_t ncols = 0;
  std::vector<Row> rows;

  Matrix() = default;
  explicit Matrix(std::size_t cols) : ncols(cols) {}
  Matrix(std::size_t cols, std::vector<Row> r);

  std::size_t nrows() const noexcept { return rows.size(); }
  void append(Row r);

  bool operator==(const Matrix&) const = default;
};

struct Reduced {
  Matrix rref;  // nonzero rows only, pivots strictly increasing
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. Rows are cleared of denominators and eliminated
/// fraction-free over the integers (content removed after each step); the pivot
/// column is the leftmost column holding a nonzero entry, the pivot row the first
/// remaining row with a nonzero there. Back-substitution and normalisation
/// produce the canonical RREF.
Reduced row_reduce(const Matrix& m);

/// Pivot column of each row of a matrix already in RREF.
std::vector<std::size_t> pivot_columns(const Matrix& rref);

/// v minus its projection onto the pivot coordinates of an RREF basis. Zero
/// iff v lies in the row span.
Row normal_form(const Row& v, const Matrix& rref);

/// Exact row-span membership; the basis must already be in RREF.
bool in_span(const Row& v, const Matrix& rref);

bool is_zero_row(const Row& v);

}  // namespace wittmod
