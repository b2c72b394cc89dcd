#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nilharm/rational.hpp"

namespace nilharm {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<Rational> column(std::size_t c) const;

  /// Keeps only the listed columns, in the given order.
  RationalMatrix select_columns(std::span<const std::size_t> columns) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::vector<Rational> operator*(const RationalMatrix& a, std::span<const Rational> x);

struct RrefResult {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Pivot rows are the first pivots.size() rows,
/// remaining rows are zero.
RrefResult rref(RationalMatrix a);

std::size_t rank(const RationalMatrix& a);

/// Null-space basis: one vector per free column, with that free variable set
/// to 1, the other free variables 0, and pivot variables solved from the RREF.
/// Ordered by free column index.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& a);

struct SolveResult {
  /// Particular solution with every free variable 0, if consistent.
  std::optional<std::vector<Rational>> solution;
  /// For an inconsistent system: the row of the reduced augmented matrix
  /// that reads 0 = nonzero.
  std::optional<std::size_t> inconsistent_row;

  bool consistent() const { return solution.has_value(); }
};

SolveResult solve(const RationalMatrix& a, std::span<const Rational> b);

/// Stacks vectors as rows.
RationalMatrix from_rows(std::span<const std::vector<Rational>> rows, std::size_t cols);

std::string to_string(const RationalMatrix& a);

}  // namespace nilharm
