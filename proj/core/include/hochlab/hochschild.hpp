#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hochlab/algebra.hpp"
#include "hochlab/chain.hpp"
#include "hochlab/linalg.hpp"

namespace hochlab {

class RankCache;

/// Restriction of a chain complex to tuples of total degree D.
struct GradedPiece {
  int total_degree = 0;
};

struct ComputeOptions {
  /// Ceiling on the dimension of any single chain space, checked before the
  /// basis is enumerated.
  std::size_t max_dim = 200000;
  RankCache* cache = nullptr;
  bool with_representatives = false;
};

enum class ComplexKind { Hochschild, Bar, Normalized };

const char* to_string(ComplexKind kind);

/// Chain spaces C_0..C_N with enumerated bases (lexicographic tuples,
/// optionally one graded piece) and differentials d_k : C_k -> C_{k-1}.
/// differential(0) is the zero map to the zero space.
class ComplexSlice {
 public:
  ComplexKind kind() const noexcept { return kind_; }
  const Algebra& algebra() const noexcept { return algebra_; }
  std::size_t max_degree() const noexcept { return basis_.size() - 1; }
  std::optional<GradedPiece> piece() const noexcept { return piece_; }

  std::size_t dim(std::size_t k) const { return basis_.at(k).size(); }
  const std::vector<Tuple>& basis(std::size_t k) const { return basis_.at(k); }
  const SparseMatrix& differential(std::size_t k) const { return differential_.at(k); }

  std::optional<std::size_t> index_of(std::size_t k, const Tuple& t) const;
  SparseVector coordinates(const ChainVector& c) const;
  ChainVector chain(std::size_t k, const SparseVector& coords) const;

  friend ComplexSlice build_complex(ComplexKind, const Algebra&, std::size_t, std::optional<GradedPiece>,
                                    const ComputeOptions&);

 private:
  ComplexSlice(ComplexKind kind, Algebra algebra) : kind_(kind), algebra_(std::move(algebra)) {}

  ComplexKind kind_;
  Algebra algebra_;
  std::optional<GradedPiece> piece_;
  std::vector<std::vector<Tuple>> basis_;
  std::vector<std::unordered_map<Tuple, std::uint32_t, TupleHash>> index_;
  std::vector<SparseMatrix> differential_;
};

/// Builds C_0..C_N of the requested kind, verifying d_{k-1} d_k = 0.
/// The normalized complex lives over a.rebased_on_unit() and spans the tuples
/// with no unit entry after slot 0 (a basis of C_k / degenerate chains).
ComplexSlice build_complex(ComplexKind kind, const Algebra& a, std::size_t max_degree,
                           std::optional<GradedPiece> piece, const ComputeOptions& options = {});

ComplexSlice hochschild_complex(const Algebra& a, std::size_t max_degree, std::optional<GradedPiece> piece = {},
                                const ComputeOptions& options = {});

/// Number of basis tuples of degree k in the given piece and kind.
std::size_t chain_space_dim(ComplexKind kind, const Algebra& a, std::size_t k, std::optional<GradedPiece> piece);

struct DegreeHomology {
  std::size_t degree = 0;
  std::size_t dim_chains = 0;
  std::size_t dim_kernel = 0;
  std::size_t rank_incoming = 0;
  std::size_t betti = 0;
  // The top degree has no incoming differential materialized, so its value
  // is dim ker d_N, an upper bound for the true Betti number.
  bool provisional = false;
  std::vector<ChainVector> representatives;
};

struct HomologyReport {
  std::string algebra;
  std::string theory;
  std::optional<int> graded_piece;
  std::vector<DegreeHomology> degrees;

  bool provisional_top() const { return !degrees.empty() && degrees.back().provisional; }
  /// All values, including a provisional top degree.
  std::vector<std::size_t> betti() const;
  /// Only the exactly determined degrees.
  std::vector<std::size_t> exact_betti() const;
};

/// Ranks of d_1..d_N of a slice (index 0 holds 0), memoized through the
/// cache when one is configured.
std::vector<std::size_t> differential_ranks(const ComplexSlice& slice, const ComputeOptions& options,
                                            const std::string& op);

HomologyReport homology(const ComplexSlice& slice, const ComputeOptions& options, const std::string& theory);

/// HH_0..HH_{N-1} exactly plus HH_N provisional.
HomologyReport hh(const Algebra& a, std::size_t max_degree, std::optional<GradedPiece> piece = {},
                  const ComputeOptions& options = {});

/// Homology of C_k / degenerate chains; equals hh degree by degree.
HomologyReport normalized_hh(const Algebra& a, std::size_t max_degree, std::optional<GradedPiece> piece = {},
                             const ComputeOptions& options = {});

/// HH_0..HH_N of Q[x]/(x^{m+1}) from the 2-periodic bimodule resolution
///   ... -> A^e --v--> A^e --u--> A^e -> A,  u = x(x)1 - 1(x)x,  v = sum_{i+j=m} x^i (x) x^j,
/// tensored down to A, where u acts by 0 and v by multiplication with (m+1)x^m.
std::vector<std::size_t> hh_truncated_poly_oracle(int m, std::size_t max_degree);

/// Dimension of the degree-D piece of Omega^k of Q[x_1..x_n], where x_i and
/// dx_i both have weight 1: C(n,k) * #monomials of degree D-k.
std::size_t kahler_form_dim(int n, int k, int D);

/// Number of monomials of total degree d in n variables.
std::size_t monomial_count(int n, int d);

std::size_t binomial(std::size_t n, std::size_t k);

struct HkrRow {
  int k = 0;
  int D = 0;
  std::size_t betti = 0;
  std::size_t kahler_dim = 0;
  bool equal = false;
};

/// Graded HH_k of Q[x_1..x_n] in every piece D <= D_max against Omega^k.
std::vector<HkrRow> hkr_check(int n, int k_max, int D_max, const ComputeOptions& options = {});

struct BarCheck {
  std::string algebra;
  std::size_t cokernel_dim0 = 0;      // A / A.A
  std::vector<std::size_t> betti;     // H_k(A^{(x)*+1}, b'), k = 0..N-1
  std::vector<bool> acyclic;          // index k for k = 1..N-1; index 0 unused
  bool h_unital = false;              // acyclic in every checked degree >= 1
};

BarCheck bar_acyclicity_check(const Algebra& a, std::size_t max_degree, std::optional<GradedPiece> piece = {},
                              const ComputeOptions& options = {});

}  // namespace hochlab
