#include "hochlab/hochschild.hpp"

#include <algorithm>
#include <limits>

#include "hochlab/constructions.hpp"
#include "hochlab/errors.hpp"
#include "hochlab/rank_cache.hpp"

namespace hochlab {

namespace {

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

std::size_t sat_add(std::size_t a, std::size_t b) { return a > kSaturated - b ? kSaturated : a + b; }
std::size_t sat_mul(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

void validate_piece(const Algebra& a, std::optional<GradedPiece> piece) {
  if (piece && piece->total_degree < 0) {
    throw Error(ErrorKind::InvalidArgument, "graded piece must be non-negative", std::to_string(piece->total_degree));
  }
  if (piece && !a.is_graded()) {
    throw Error(ErrorKind::InvalidArgument, "graded piece requested for an ungraded algebra", a.label());
  }
  if (a.is_graded_truncated()) {
    if (!piece) {
      throw Error(ErrorKind::GradedPieceRequired,
                  "algebra is a graded truncation; homology must be restricted to a graded piece <= " +
                      std::to_string(*a.degree_cap()),
                  a.label());
    }
    if (piece->total_degree > *a.degree_cap()) {
      throw Error(ErrorKind::PieceExceedsCap, "graded piece exceeds the degree cap " + std::to_string(*a.degree_cap()),
                  std::to_string(piece->total_degree));
    }
  }
}

// Per slot: which basis indices may appear.
struct SlotRule {
  std::vector<BasisIndex> first;
  std::vector<BasisIndex> rest;
};

SlotRule slot_rule(ComplexKind kind, const Algebra& a) {
  SlotRule r;
  std::optional<BasisIndex> unit;
  if (kind == ComplexKind::Normalized) unit = a.unit_basis_index();
  for (BasisIndex i = 0; i < a.dim(); ++i) {
    r.first.push_back(i);
    if (!unit || *unit != i) r.rest.push_back(i);
  }
  return r;
}

std::size_t count_tuples(const Algebra& a, const SlotRule& rule, std::size_t k, std::optional<GradedPiece> piece) {
  if (!piece) {
    std::size_t n = rule.first.size();
    for (std::size_t s = 0; s < k; ++s) n = sat_mul(n, rule.rest.size());
    return n;
  }
  const int D = piece->total_degree;
  std::vector<std::size_t> ways(D + 1, 0);
  ways[0] = 1;
  for (std::size_t slot = 0; slot <= k; ++slot) {
    std::vector<std::size_t> next(D + 1, 0);
    const auto& allowed = slot == 0 ? rule.first : rule.rest;
    for (int s = 0; s <= D; ++s) {
      if (ways[s] == 0) continue;
      for (auto i : allowed) {
        const int t = s + a.degree(i);
        if (t <= D) next[t] = sat_add(next[t], ways[s]);
      }
    }
    ways = std::move(next);
  }
  return ways[D];
}

void enumerate(const Algebra& a, const SlotRule& rule, std::size_t k, std::optional<GradedPiece> piece,
               int max_basis_degree, Tuple& current, int partial, std::vector<Tuple>& out) {
  const std::size_t slot = current.size();
  if (slot == k + 1) {
    if (!piece || partial == piece->total_degree) out.push_back(current);
    return;
  }
  const auto& allowed = slot == 0 ? rule.first : rule.rest;
  const int remaining_after = static_cast<int>(k - slot);
  for (auto i : allowed) {
    const int p = partial + a.degree(i);
    if (piece) {
      if (p > piece->total_degree) continue;
      if (p + max_basis_degree * remaining_after < piece->total_degree) continue;
    }
    current.push_back(i);
    enumerate(a, rule, k, piece, max_basis_degree, current, p, out);
    current.pop_back();
  }
}

std::string op_name(ComplexKind kind) { return std::string(to_string(kind)) + "_d"; }

}  // namespace

const char* to_string(ComplexKind kind) {
  switch (kind) {
    case ComplexKind::Hochschild: return "hochschild";
    case ComplexKind::Bar: return "bar";
    case ComplexKind::Normalized: return "normalized";
  }
  return "unknown";
}

std::optional<std::size_t> ComplexSlice::index_of(std::size_t k, const Tuple& t) const {
  const auto& idx = index_.at(k);
  auto it = idx.find(t);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

SparseVector ComplexSlice::coordinates(const ChainVector& c) const {
  SparseVector v;
  for (const auto& [t, coeff] : c.terms()) {
    auto i = index_of(c.degree(), t);
    if (!i) throw Error(ErrorKind::IndexOutOfRange, "chain term is not in the enumerated basis", std::to_string(c.degree()));
    v.push_back(Entry{static_cast<std::uint32_t>(*i), coeff});
  }
  canonicalize(v);
  return v;
}

ChainVector ComplexSlice::chain(std::size_t k, const SparseVector& coords) const {
  ChainVector c(k);
  for (const auto& e : coords) c.add(basis_.at(k).at(e.index), e.value);
  return c;
}

std::size_t chain_space_dim(ComplexKind kind, const Algebra& a, std::size_t k, std::optional<GradedPiece> piece) {
  const Algebra& base = kind == ComplexKind::Normalized ? a.rebased_on_unit() : a;
  return count_tuples(base, slot_rule(kind, base), k, piece);
}

ComplexSlice build_complex(ComplexKind kind, const Algebra& a, std::size_t max_degree,
                           std::optional<GradedPiece> piece, const ComputeOptions& options) {
  validate_piece(a, piece);
  if (kind == ComplexKind::Normalized && !a.is_unital()) {
    throw Error(ErrorKind::NonUnitalAlgebra, "the normalized complex needs a unit", a.label());
  }
  ComplexSlice slice(kind, kind == ComplexKind::Normalized ? a.rebased_on_unit() : a);
  slice.piece_ = piece;
  const Algebra& alg = slice.algebra_;
  const SlotRule rule = slot_rule(kind, alg);
  const std::optional<BasisIndex> unit = kind == ComplexKind::Normalized ? alg.unit_basis_index() : std::nullopt;

  for (std::size_t k = 0; k <= max_degree; ++k) {
    const std::size_t n = count_tuples(alg, rule, k, piece);
    if (n > options.max_dim) throw ResourceLimitError(n, options.max_dim, "C_" + std::to_string(k) + "(" + a.label() + ")");
  }

  int max_basis_degree = 0;
  for (BasisIndex i = 0; i < alg.dim(); ++i) max_basis_degree = std::max(max_basis_degree, alg.degree(i));

  slice.basis_.resize(max_degree + 1);
  slice.index_.resize(max_degree + 1);
  for (std::size_t k = 0; k <= max_degree; ++k) {
    Tuple current;
    enumerate(alg, rule, k, piece, max_basis_degree, current, 0, slice.basis_[k]);
    auto& idx = slice.index_[k];
    idx.reserve(slice.basis_[k].size());
    for (std::uint32_t i = 0; i < slice.basis_[k].size(); ++i) idx.emplace(slice.basis_[k][i], i);
  }

  slice.differential_.reserve(max_degree + 1);
  slice.differential_.emplace_back(0, slice.basis_[0].size());
  for (std::size_t k = 1; k <= max_degree; ++k) {
    SparseMatrix d(slice.basis_[k - 1].size(), slice.basis_[k].size());
    TermMap out;
    for (std::size_t j = 0; j < slice.basis_[k].size(); ++j) {
      out.clear();
      accumulate_boundary(alg, slice.basis_[k][j], 1, out, kind == ComplexKind::Bar);
      SparseVector col;
      for (const auto& [t, v] : out) {
        if (unit && std::find(t.begin() + 1, t.end(), *unit) != t.end()) continue;
        auto row = slice.index_of(k - 1, t);
        if (!row) {
          throw Error(ErrorKind::GradingViolation, "a face left the enumerated graded piece", alg.label());
        }
        col.push_back(Entry{static_cast<std::uint32_t>(*row), v});
      }
      d.set_column(j, std::move(col));
    }
    slice.differential_.push_back(std::move(d));
  }

  for (std::size_t k = 2; k <= max_degree; ++k) {
    const SparseMatrix prod = slice.differential_[k - 1] * slice.differential_[k];
    for (std::size_t c = 0; c < prod.cols(); ++c) {
      if (!prod.column(c).empty()) {
        throw Error(ErrorKind::NotAComplex, "d_" + std::to_string(k - 1) + " d_" + std::to_string(k) + " != 0",
                    "column " + std::to_string(c));
      }
    }
  }
  return slice;
}

ComplexSlice hochschild_complex(const Algebra& a, std::size_t max_degree, std::optional<GradedPiece> piece,
                                const ComputeOptions& options) {
  return build_complex(ComplexKind::Hochschild, a, max_degree, piece, options);
}

std::vector<std::size_t> HomologyReport::betti() const {
  std::vector<std::size_t> out;
  for (const auto& d : degrees) out.push_back(d.betti);
  return out;
}

std::vector<std::size_t> HomologyReport::exact_betti() const {
  std::vector<std::size_t> out;
  for (const auto& d : degrees) {
    if (!d.provisional) out.push_back(d.betti);
  }
  return out;
}

std::vector<std::size_t> differential_ranks(const ComplexSlice& slice, const ComputeOptions& options,
                                            const std::string& op) {
  std::vector<std::size_t> ranks(slice.max_degree() + 1, 0);
  const std::optional<int> piece =
      slice.piece() ? std::optional<int>(slice.piece()->total_degree) : std::nullopt;
  for (std::size_t k = 1; k <= slice.max_degree(); ++k) {
    std::string key;
    if (options.cache) {
      key = RankCache::make_key(slice.algebra(), k, piece, op);
      if (auto hit = options.cache->lookup(key)) {
        ranks[k] = *hit;
        continue;
      }
    }
    ranks[k] = rank(slice.differential(k));
    if (options.cache) options.cache->store(key, ranks[k]);
  }
  return ranks;
}

HomologyReport homology(const ComplexSlice& slice, const ComputeOptions& options, const std::string& theory) {
  const std::size_t N = slice.max_degree();
  const auto ranks = differential_ranks(slice, options, op_name(slice.kind()));
  HomologyReport report;
  report.algebra = slice.algebra().label();
  report.theory = theory;
  if (slice.piece()) report.graded_piece = slice.piece()->total_degree;
  for (std::size_t k = 0; k <= N; ++k) {
    DegreeHomology d;
    d.degree = k;
    d.dim_chains = slice.dim(k);
    d.dim_kernel = d.dim_chains - ranks[k];
    d.rank_incoming = k < N ? ranks[k + 1] : 0;
    d.betti = d.dim_kernel - d.rank_incoming;
    d.provisional = k == N;
    if (options.with_representatives && k < N) {
      auto h = homology_at(slice.differential(k), slice.differential(k + 1), true);
      for (const auto& z : h.representatives) d.representatives.push_back(slice.chain(k, z));
    }
    report.degrees.push_back(std::move(d));
  }
  return report;
}

HomologyReport hh(const Algebra& a, std::size_t max_degree, std::optional<GradedPiece> piece,
                  const ComputeOptions& options) {
  return homology(build_complex(ComplexKind::Hochschild, a, max_degree, piece, options), options, "hh");
}

HomologyReport normalized_hh(const Algebra& a, std::size_t max_degree, std::optional<GradedPiece> piece,
                             const ComputeOptions& options) {
  return homology(build_complex(ComplexKind::Normalized, a, max_degree, piece, options), options, "hh_normalized");
}

std::vector<std::size_t> hh_truncated_poly_oracle(int m, std::size_t max_degree) {
  if (m < 0) throw Error(ErrorKind::InvalidArgument, "truncation order must be >= 0", std::to_string(m));
  const Algebra A = jet_algebra(1, m);
  const auto n = static_cast<BasisIndex>(A.dim());  // basis x^0..x^m
  using Tensor = std::vector<std::pair<Rational, std::pair<BasisIndex, BasisIndex>>>;

  // Bimodule elements sum a (x) b act on c by sum a c b.
  auto induced = [&](const Tensor& t) {
    SparseMatrix M(n, n);
    for (BasisIndex c = 0; c < n; ++c) {
      SparseVector col;
      for (const auto& [coeff, ab] : t) {
        const SparseVector ac = A.multiply({Entry{ab.first, 1}}, {Entry{c, 1}});
        col = add_scaled(col, A.multiply(ac, {Entry{ab.second, 1}}), coeff);
      }
      M.set_column(c, std::move(col));
    }
    return M;
  };
  Tensor u;
  if (m >= 1) u = {{Rational(1), {1, 0}}, {Rational(-1), {0, 1}}};
  Tensor v;
  for (BasisIndex i = 0; i <= static_cast<BasisIndex>(m); ++i) v.push_back({Rational(1), {i, static_cast<BasisIndex>(m) - i}});

  const std::size_t rank_odd = rank(induced(u));
  const std::size_t rank_even = rank(induced(v));
  std::vector<std::size_t> betti;
  for (std::size_t k = 0; k <= max_degree; ++k) {
    const std::size_t out = k == 0 ? 0 : (k % 2 == 1 ? rank_odd : rank_even);
    const std::size_t in = (k + 1) % 2 == 1 ? rank_odd : rank_even;
    betti.push_back(n - out - in);
  }
  return betti;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t monomial_count(int n, int d) {
  if (d < 0 || n < 0) return 0;
  if (n == 0) return d == 0 ? 1 : 0;
  return binomial(static_cast<std::size_t>(n + d - 1), static_cast<std::size_t>(d));
}

std::size_t kahler_form_dim(int n, int k, int D) {
  if (k < 0 || k > n || D < k) return 0;
  return binomial(n, k) * monomial_count(n, D - k);
}

std::vector<HkrRow> hkr_check(int n, int k_max, int D_max, const ComputeOptions& options) {
  const Algebra P = polynomial_algebra_graded(n, D_max);
  std::vector<HkrRow> rows;
  for (int D = 0; D <= D_max; ++D) {
    const auto report = hh(P, static_cast<std::size_t>(k_max) + 1, GradedPiece{D}, options);
    for (int k = 0; k <= k_max; ++k) {
      HkrRow row;
      row.k = k;
      row.D = D;
      row.betti = report.degrees[k].betti;
      row.kahler_dim = kahler_form_dim(n, k, D);
      row.equal = row.betti == row.kahler_dim;
      rows.push_back(row);
    }
  }
  return rows;
}

BarCheck bar_acyclicity_check(const Algebra& a, std::size_t max_degree, std::optional<GradedPiece> piece,
                              const ComputeOptions& options) {
  const auto report = homology(build_complex(ComplexKind::Bar, a, max_degree, piece, options), options, "bar");
  BarCheck check;
  check.algebra = a.label();
  check.betti = report.exact_betti();
  check.acyclic.assign(check.betti.size(), false);
  check.cokernel_dim0 = check.betti.empty() ? 0 : check.betti[0];
  check.h_unital = true;
  for (std::size_t k = 1; k < check.betti.size(); ++k) {
    check.acyclic[k] = check.betti[k] == 0;
    check.h_unital = check.h_unital && check.acyclic[k];
  }
  return check;
}

}  // namespace hochlab
