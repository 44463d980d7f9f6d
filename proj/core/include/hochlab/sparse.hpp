#pragma once

#include <cstddef>
#include <cstdint>
#include <tuple>
#include <vector>

#include "hochlab/rational.hpp"

namespace hochlab {

struct Entry {
  std::uint32_t index;
  Rational value;

  friend bool operator==(const Entry&, const Entry&) = default;
};

// Sorted by index, no stored zeros.
using SparseVector = std::vector<Entry>;

/// Sorts by index, merges duplicates and drops zeros.
void canonicalize(SparseVector& v);

/// Returns a + scale * b for canonical a, b.
SparseVector add_scaled(const SparseVector& a, const SparseVector& b, const Rational& scale);

SparseVector scaled(const SparseVector& v, const Rational& scale);

Rational coefficient(const SparseVector& v, std::uint32_t index);

/// Column-major sparse matrix over the rationals.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  static SparseMatrix identity(std::size_t n);
  /// Triplets may repeat; duplicates are summed.
  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols,
                                    const std::vector<std::tuple<std::size_t, std::size_t, Rational>>& triplets);
  static SparseMatrix from_dense(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nonzeros() const;

  const SparseVector& column(std::size_t c) const { return columns_[c]; }
  /// Replaces column c; v is canonicalized and range checked.
  void set_column(std::size_t c, SparseVector v);
  Rational at(std::size_t r, std::size_t c) const;

  SparseMatrix transpose() const;
  SparseVector apply(const SparseVector& v) const;
  bool is_zero() const;

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVector> columns_;
};

}  // namespace hochlab
