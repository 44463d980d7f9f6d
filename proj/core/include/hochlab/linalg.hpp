#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hochlab/sparse.hpp"

namespace hochlab {

/// Incremental row echelon form of a subspace of Q^n.
///
/// Rows are kept with distinct pivot columns; a row inserted at time t has
/// zeros in the pivot columns of all earlier rows, so reducing a vector by
/// the rows in insertion order eliminates every pivot coordinate. Pivots are
/// chosen Markowitz-style (sparsest column first) when column weights are
/// supplied.
///
/// With Scalar = Integer the elimination is fraction-free: rows are combined
/// by cross multiplication and divided by their content, which keeps entries
/// integral and small. With Scalar = Rational pivots are normalized to 1 and
/// reduce() returns the exact residual.
template <class Scalar>
class Echelon {
 public:
  struct Row {
    std::uint32_t pivot;
    std::vector<std::uint32_t> index;
    std::vector<Scalar> value;
  };

  explicit Echelon(std::size_t ambient_dim, std::vector<std::uint32_t> column_weight = {});

  std::size_t ambient_dim() const noexcept { return pivot_of_.size(); }
  std::size_t rank() const noexcept { return rows_.size(); }
  bool is_pivot(std::uint32_t column) const { return pivot_of_[column] >= 0; }
  const std::vector<Row>& rows() const noexcept { return rows_; }

  /// Adds v to the span; returns whether it was independent.
  bool insert(const SparseVector& v);

  /// Residual of v modulo the span. Supported on non-pivot columns; for
  /// Scalar = Integer it is only determined up to a nonzero factor.
  SparseVector reduce(const SparseVector& v) const;

  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  /// Reduced row echelon rows (pivot 1, zeros in all other pivot columns).
  /// Only for Scalar = Rational.
  std::vector<SparseVector> reduced_rows() const;

 private:
  struct Work {
    std::vector<std::uint32_t> index;
    std::vector<Scalar> value;
  };
  void reduce_in_place(Work& w) const;

  std::vector<std::uint32_t> weight_;
  std::vector<std::int32_t> pivot_of_;
  std::vector<Row> rows_;
};

using RationalEchelon = Echelon<Rational>;
using IntegerEchelon = Echelon<Integer>;

/// Rank over Q: splits the matrix into connected blocks of its support
/// graph and runs fraction-free elimination on each.
std::size_t rank(const SparseMatrix& m);

/// Rank of the span of vectors living in Q^ambient_dim.
std::size_t rank_of_vectors(std::size_t ambient_dim, const std::vector<SparseVector>& vectors);

/// Basis of {v : m v = 0}, one vector per free column, free columns ascending.
std::vector<SparseVector> kernel_basis(const SparseMatrix& m);

struct HomologyAt {
  std::size_t dim_chains = 0;
  std::size_t dim_kernel = 0;
  std::size_t rank_incoming = 0;
  std::size_t betti = 0;
  std::vector<SparseVector> representatives;
};

/// Homology at the middle of  . --d_in--> V --d_out--> .
/// Throws NotAComplex (witness: first column of d_in with d_out d_in != 0).
HomologyAt homology_at(const SparseMatrix& d_out, const SparseMatrix& d_in, bool with_representatives = false);

/// Subspace S of Q^n presented through its echelon form; the non-pivot
/// coordinates give a basis of coset representatives of Q^n / S.
class Subspace {
 public:
  Subspace(std::size_t ambient_dim, const std::vector<SparseVector>& spanning,
           std::vector<std::uint32_t> column_weight = {});

  std::size_t ambient_dim() const noexcept { return echelon_.ambient_dim(); }
  std::size_t dim() const noexcept { return echelon_.rank(); }
  std::size_t quotient_dim() const noexcept { return quotient_basis_.size(); }
  bool contains(const SparseVector& v) const { return echelon_.contains(v); }

  /// Ambient coordinates of the coset representatives, ascending.
  const std::vector<std::uint32_t>& quotient_basis() const noexcept { return quotient_basis_; }

  /// Coordinates of v + S in the coset basis.
  SparseVector project(const SparseVector& v) const;

  /// A basis of S (the echelon rows, rational).
  std::vector<SparseVector> basis() const;

 private:
  RationalEchelon echelon_;
  std::vector<std::uint32_t> quotient_basis_;
  std::vector<std::int32_t> quotient_index_;
};

/// Matrix of the map V/S -> W/T induced by m : V -> W (requires m(S) in T,
/// which is not rechecked here).
SparseMatrix induced_map(const SparseMatrix& m, const Subspace& source, const Subspace& target);

}  // namespace hochlab
