#include "nilharm/linalg.hpp"

#include <sstream>

#include "nilharm/errors.hpp"

namespace nilharm {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Rational> RationalMatrix::column(std::size_t c) const {
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

RationalMatrix RationalMatrix::select_columns(std::span<const std::size_t> columns) const {
  RationalMatrix out(rows_, columns.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < columns.size(); ++j) out(r, j) = (*this)(r, columns[j]);
  }
  return out;
}

std::vector<Rational> operator*(const RationalMatrix& a, std::span<const Rational> x) {
  if (x.size() != a.cols()) throw DimensionError("matrix-vector size mismatch");
  std::vector<Rational> out(a.rows(), Rational(0));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (a(r, c) != 0 && x[c] != 0) out[r] += a(r, c) * x[c];
    }
  }
  return out;
}

RrefResult rref(RationalMatrix a) {
  RrefResult result;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t pivot_row = 0;
  Rational factor;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t r = pivot_row;
    while (r < rows && a(r, c) == 0) ++r;
    if (r == rows) continue;
    if (r != pivot_row) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a(r, j), a(pivot_row, j));
    }
    const Rational inv_pivot = 1 / a(pivot_row, c);
    for (std::size_t j = c; j < cols; ++j) a(pivot_row, j) *= inv_pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pivot_row || a(i, c) == 0) continue;
      factor = a(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (a(pivot_row, j) != 0) a(i, j) -= factor * a(pivot_row, j);
      }
    }
    result.pivots.push_back(c);
    ++pivot_row;
  }
  result.reduced = std::move(a);
  return result;
}

std::size_t rank(const RationalMatrix& a) { return rref(a).pivots.size(); }

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& a) {
  const auto [reduced, pivots] = rref(a);
  const std::size_t cols = a.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

SolveResult solve(const RationalMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw DimensionError("right-hand side size does not match matrix rows");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const auto [reduced, pivots] = rref(std::move(aug));

  SolveResult result;
  if (!pivots.empty() && pivots.back() == a.cols()) {
    result.inconsistent_row = pivots.size() - 1;
    return result;
  }
  std::vector<Rational> x(a.cols(), Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = reduced(i, a.cols());
  result.solution = std::move(x);
  return result;
}

RationalMatrix from_rows(std::span<const std::vector<Rational>> rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::string to_string(const RationalMatrix& a) {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < a.rows(); ++r) {
    out << (r ? ", [" : "[");
    for (std::size_t c = 0; c < a.cols(); ++c) out << (c ? ", " : "") << format_rational_short(a(r, c));
    out << ']';
  }
  out << ']';
  return out.str();
}

}  // namespace nilharm
