#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hochlab/hochschild.hpp"
#include "hochlab/sparse.hpp"

namespace hochlab {

/// Total complex of the (b,B) bicomplex: Tot_k = C_k (+) C_{k-2} (+) ...,
/// column 0 first, for k = 0..N.
class TotalComplex {
 public:
  const ComplexSlice& hochschild() const noexcept { return slice_; }
  std::size_t max_degree() const noexcept { return slice_.max_degree(); }

  std::size_t dim(std::size_t k) const { return offsets_.at(k).back(); }
  std::size_t columns(std::size_t k) const { return offsets_.at(k).size() - 1; }
  /// First coordinate of column j inside Tot_k.
  std::size_t offset(std::size_t k, std::size_t j) const { return offsets_.at(k).at(j); }

  /// Total differential D_k : Tot_k -> Tot_{k-1} (b within a column, B to the
  /// previous column).
  const SparseMatrix& differential(std::size_t k) const { return differential_.at(k); }
  /// Connes' operator B_k : C_k -> C_{k+1}, k < N.
  const SparseMatrix& connes(std::size_t k) const { return connes_.at(k); }

  friend TotalComplex build_total_complex(const Algebra&, std::size_t, std::optional<GradedPiece>,
                                          const ComputeOptions&);

 private:
  explicit TotalComplex(ComplexSlice slice) : slice_(std::move(slice)) {}

  ComplexSlice slice_;
  std::vector<std::vector<std::size_t>> offsets_;
  std::vector<SparseMatrix> differential_;
  std::vector<SparseMatrix> connes_;
};

/// Throws NonUnitalAlgebra, ResourceLimit (on the total dimension).
TotalComplex build_total_complex(const Algebra& a, std::size_t max_degree, std::optional<GradedPiece> piece = {},
                                 const ComputeOptions& options = {});

/// HC_0..HC_{N-1} exactly plus HC_N provisional.
HomologyReport hc(const Algebra& a, std::size_t max_degree, std::optional<GradedPiece> piece = {},
                  const ComputeOptions& options = {});

struct BicomplexCheck {
  bool b_squared_zero = false;
  bool B_squared_zero = false;
  bool anticommute = false;  // bB + Bb = 0
  bool ok() const { return b_squared_zero && B_squared_zero && anticommute; }
};

/// Matrix identities on every materialized cell.
BicomplexCheck check_bicomplex(const TotalComplex& t);

struct LambdaReport {
  HomologyReport homology;                   // theory "hc_lambda"
  std::vector<std::size_t> quotient_dims;    // dim C_k / im(1 - lambda)
  std::vector<std::size_t> rank_one_minus_lambda;
  bool differential_squared_zero = false;
};

/// Homology of C_k / im(1 - lambda) with the differential induced by b.
LambdaReport lambda_complex_hc(const Algebra& a, std::size_t max_degree, std::optional<GradedPiece> piece = {},
                               const ComputeOptions& options = {});

/// One exactness node of the SBI sequence: rank of the map into the group
/// plus rank of the map out of it equals its dimension.
struct SbiNode {
  std::string group;  // "HH_k" or "HC_k"
  std::size_t degree = 0;
  std::size_t dim = 0;
  std::size_t rank_in = 0;
  std::size_t rank_out = 0;
  bool exact = false;
};

struct SbiReport {
  std::string algebra;
  std::vector<std::size_t> hh;  // exact degrees
  std::vector<std::size_t> hc;
  std::vector<std::size_t> rank_I;  // HH_k -> HC_k
  std::vector<std::size_t> rank_S;  // HC_k -> HC_{k-2}
  std::vector<std::size_t> rank_B;  // HC_{k-2} -> HH_{k-1} (connecting map), index k
  std::vector<SbiNode> nodes;
  bool exact = false;
};

/// Materializes I, S and the connecting map and checks exactness at
/// HH_k, HC_k and HC_{k-2} for k <= N-2.
SbiReport sbi_check(const Algebra& a, std::size_t max_degree, const ComputeOptions& options = {});

struct LambdaCompatibility {
  bool commutes = true;
  std::size_t chains_checked = 0;
  std::optional<Tuple> witness;
};

/// Checks P lambda = lambda P on every basis chain of degree <= N, where P
/// kills the tuples selected by `kill` (default: mixed tuples).
LambdaCompatibility localization_commutes_with_lambda_check(
    const Algebra& product, std::size_t max_degree, std::function<bool(const Tuple&)> kill = {});

struct DeRhamRow {
  int D = 0;
  int k = 0;
  std::size_t dim = 0;
  std::size_t rank_d = 0;  // rank of d : Omega^k -> Omega^{k+1}
  std::size_t betti = 0;
};

struct DeRhamReport {
  int n = 0;
  std::vector<DeRhamRow> rows;  // D-major, k = 0..min(n, k_max)
  bool d_squared_zero = true;
  std::vector<long> euler;      // per D, over all k = 0..n
  bool poincare = true;         // H^0 = Q at D = 0 and everything else vanishes
};

/// de Rham complex of Q[x_1..x_n] with x_i and dx_i of weight 1, piece by piece.
DeRhamReport whitney_de_rham(int n, int k_max, int D_max);

struct HcFormulaCheck {
  std::size_t points = 0;
  std::vector<std::size_t> predicted;  // HC_k, k < N
  std::vector<std::size_t> computed;
  bool match = false;
};

/// X = r points with order-0 fields Q^r: Omega^{>=1} = 0 and H^0 = Q^r, so
/// the prediction is r in even degrees and 0 in odd ones.
HcFormulaCheck hc_formula_order0_check(std::size_t r, std::size_t max_degree, const ComputeOptions& options = {});

/// Q x Q x ... x Q with r factors.
Algebra points_algebra(std::size_t r);

}  // namespace hochlab
