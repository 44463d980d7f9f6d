#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hochlab/sparse.hpp"

namespace hochlab {

using BasisIndex = std::uint32_t;

/// Raw structure-constant description. Omitted products are zero.
struct AlgebraSpec {
  struct Product {
    BasisIndex left;
    BasisIndex right;
    SparseVector value;
  };

  std::size_t dim = 0;
  std::string label;
  std::vector<std::string> basis_labels;  // empty: generated "e0", "e1", ...
  std::vector<Product> mult;
  std::optional<SparseVector> unit;
  std::optional<std::vector<int>> grading;
  std::optional<int> degree_cap;
  // Set for graded models of an untruncated algebra (polynomial rings cut at
  // degree_cap). Homology of such an algebra is only meaningful in graded
  // pieces <= degree_cap.
  bool graded_truncated = false;

  // Optional structure recorded by the constructors.
  std::optional<std::vector<std::uint32_t>> components;  // factor of a product
  std::optional<std::vector<std::vector<int>>> monomials;  // exponents of a jet basis
};

/// A validated finite-dimensional associative algebra over Q, given by
/// structure constants e_i e_j = sum_k c_ij^k e_k. Immutable.
class Algebra {
 public:
  std::size_t dim() const noexcept { return dim_; }
  const std::string& label() const noexcept { return label_; }
  const std::vector<std::string>& basis_labels() const noexcept { return basis_labels_; }

  const SparseVector& product(BasisIndex i, BasisIndex j) const { return table_[i * dim_ + j]; }
  SparseVector multiply(const SparseVector& a, const SparseVector& b) const;

  bool is_unital() const noexcept { return unit_.has_value(); }
  const std::optional<SparseVector>& unit() const noexcept { return unit_; }
  /// Index u with unit == e_u, if the unit is a basis vector.
  std::optional<BasisIndex> unit_basis_index() const;

  bool is_graded() const noexcept { return grading_.has_value(); }
  int degree(BasisIndex i) const { return grading_ ? (*grading_)[i] : 0; }
  const std::optional<std::vector<int>>& grading() const noexcept { return grading_; }
  std::optional<int> degree_cap() const noexcept { return degree_cap_; }
  bool is_graded_truncated() const noexcept { return graded_truncated_; }

  const std::optional<std::vector<std::uint32_t>>& components() const noexcept { return components_; }
  const std::optional<std::vector<std::vector<int>>>& monomials() const noexcept { return monomials_; }

  bool is_commutative() const;

  /// Isomorphic copy whose basis contains the unit: the first basis vector
  /// with a nonzero unit coefficient is replaced by the unit. Returns a copy
  /// of *this when the unit already is a basis vector.
  Algebra rebased_on_unit() const;

  /// Round-trips through AlgebraSpec (used by serialization and hashing).
  AlgebraSpec to_spec() const;

  friend Algebra build_algebra(AlgebraSpec spec);

 private:
  Algebra() = default;

  std::size_t dim_ = 0;
  std::string label_;
  std::vector<std::string> basis_labels_;
  std::vector<SparseVector> table_;
  std::optional<SparseVector> unit_;
  std::optional<std::vector<int>> grading_;
  std::optional<int> degree_cap_;
  bool graded_truncated_ = false;
  std::optional<std::vector<std::uint32_t>> components_;
  std::optional<std::vector<std::vector<int>>> monomials_;
};

/// Validates every invariant eagerly: index ranges, associativity on all
/// basis triples, unit laws, grading compatibility. Throws ValidationError
/// (NonAssociative / BadUnit / GradingViolation) with a witness.
Algebra build_algebra(AlgebraSpec spec);

}  // namespace hochlab
