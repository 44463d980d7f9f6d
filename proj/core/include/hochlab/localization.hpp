#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hochlab/algebra.hpp"
#include "hochlab/chain.hpp"
#include "hochlab/groupoid.hpp"
#include "hochlab/hochschild.hpp"

namespace hochlab {

/// Spanning sets J_k of a candidate subcomplex of the Hochschild complex,
/// indexed by degree. closure_verified is set by check_boundary_stability.
struct SubcomplexSpec {
  std::string name;
  std::vector<std::vector<ChainVector>> generators;
  bool closure_verified = false;

  std::size_t max_degree() const { return generators.empty() ? 0 : generators.size() - 1; }
};

/// Row-reduced basis of I_D^e C_k(A) for a jet algebra A = Q[x_1..x_n]/m^{m+1}:
/// I_D is generated in A^{(x)(k+1)} by the differences x_v^{(r)} - x_v^{(r+1)}
/// of adjacent slots, and e defaults to m+1.
std::vector<ChainVector> jet_diagonal_ideal(const Algebra& jet, std::size_t k, std::optional<int> exponent = {});

SubcomplexSpec jet_diagonal_subcomplex(const Algebra& jet, std::size_t max_degree, std::optional<int> exponent = {});

/// Basis tuples whose product-factor labels are not all equal, degrees 0..N.
SubcomplexSpec mixed_subcomplex(const Algebra& product, std::size_t max_degree);

bool is_mixed(const Algebra& product, const Tuple& t);

struct StabilityResult {
  bool stable = true;
  std::optional<std::size_t> degree;
  std::optional<ChainVector> witness;  // b(generator) outside span J_{k-1}
};

/// Exact membership test b(J_k) in J_{k-1} for k = 1..N; sets
/// s.closure_verified to the outcome.
StabilityResult check_boundary_stability(const Algebra& a, SubcomplexSpec& s);

struct ContractibilityReport {
  std::vector<std::size_t> dims;   // dim J_k, k = 0..N
  std::vector<std::size_t> betti;  // H_k(J), k = 0..N-1
  std::size_t degree0 = 0;
  bool contractible = false;       // betti_k = 0 for 1 <= k <= N-1
};

/// Homology of (J, b). Throws NotBoundaryStable unless closure is verified.
ContractibilityReport verify_contractible(const Algebra& a, const SubcomplexSpec& s);

/// E = C / J with coset representatives (ambient basis tuples) and induced
/// differentials beta_k : E_k -> E_{k-1}.
struct QuotientComplex {
  std::vector<std::vector<Tuple>> representatives;
  std::vector<SparseMatrix> beta;
};

struct DiagonalQuotientReport {
  QuotientComplex quotient;
  std::vector<std::size_t> dim_C, dim_J, dim_E;
  bool beta_squared_zero = false;
  bool chain_map = false;                 // p b = beta p on every basis chain
  std::vector<std::size_t> betti_C;       // HH_k, k < N
  std::vector<std::size_t> betti_E;       // H_k(E), k < N
  std::vector<std::size_t> induced_rank;  // rank of p_* : HH_k -> H_k(E)
  std::vector<bool> quasi_isomorphic;     // betti match and p_* has full rank
};

/// Throws NotBoundaryStable unless closure is verified.
DiagonalQuotientReport diagonal_quotient(const Algebra& a, const SubcomplexSpec& s, const ComputeOptions& options = {});

struct Orbit {
  std::vector<std::uint32_t> objects;  // base point first
  std::uint32_t base_point = 0;
  std::vector<std::uint32_t> isotropy_arrows;
  GroupTable isotropy;
  std::size_t size() const { return objects.size(); }
};

/// Orbits ordered by the label of their base point, which is the smallest
/// object label in the orbit.
std::vector<Orbit> orbit_decomposition(const GroupoidSpec& g);

/// Full subgroupoid on the given objects.
GroupoidSpec restrict_groupoid(const GroupoidSpec& g, const std::vector<std::uint32_t>& objects);

struct OrbitReduction {
  std::string base_point;
  std::size_t orbit_size = 0;
  std::size_t isotropy_order = 0;
  bool matrix_isomorphism = false;  // conv(orbit) = M_r(Q[H]) on structure constants
  std::vector<std::size_t> hh_isotropy;
};

struct StalkReport {
  std::vector<std::size_t> lhs;  // HH of the convolution algebra
  std::vector<std::size_t> rhs;  // sum over orbits of HH(Q[isotropy])
  std::vector<std::size_t> degrees_compared;
  bool match = false;
  bool block_decomposition = false;  // arrows of different orbits multiply to 0
  std::vector<OrbitReduction> orbits;
};

StalkReport stalk_reduction_check(const GroupoidSpec& g, std::size_t max_degree, const ComputeOptions& options = {});

}  // namespace hochlab
