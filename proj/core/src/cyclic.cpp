#include "hochlab/cyclic.hpp"

#include <map>
#include <utility>

#include "hochlab/constructions.hpp"
#include "hochlab/errors.hpp"
#include "hochlab/linalg.hpp"
#include "hochlab/localization.hpp"
#include "hochlab/rank_cache.hpp"

namespace hochlab {

namespace {

void require_unit(const Algebra& a) {
  if (!a.is_unital()) throw Error(ErrorKind::NonUnitalAlgebra, "cyclic homology needs a unital algebra", a.label());
}

SparseVector shifted(const SparseVector& v, std::size_t by) {
  SparseVector out = v;
  for (auto& e : out) e.index += static_cast<std::uint32_t>(by);
  return out;
}

std::vector<SparseVector> columns_of(const SparseMatrix& m) {
  std::vector<SparseVector> out;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!m.column(c).empty()) out.push_back(m.column(c));
  }
  return out;
}

// Rank of the map induced on homology by sending representatives to images,
// modulo the given boundaries of the target.
std::size_t induced_rank(std::size_t target_dim, std::vector<SparseVector> boundaries,
                         const std::vector<SparseVector>& images) {
  const std::size_t base = rank_of_vectors(target_dim, boundaries);
  boundaries.insert(boundaries.end(), images.begin(), images.end());
  return rank_of_vectors(target_dim, boundaries) - base;
}

std::size_t cached_rank(const SparseMatrix& m, const Algebra& a, std::size_t k, std::optional<GradedPiece> piece,
                        const std::string& op, const ComputeOptions& options) {
  std::string key;
  if (options.cache) {
    key = RankCache::make_key(a, k, piece ? std::optional<int>(piece->total_degree) : std::nullopt, op);
    if (auto hit = options.cache->lookup(key)) return *hit;
  }
  const std::size_t r = rank(m);
  if (options.cache) options.cache->store(key, r);
  return r;
}

HomologyReport report_from(const std::string& algebra, const std::string& theory, std::optional<GradedPiece> piece,
                           const std::vector<std::size_t>& dims, const std::vector<std::size_t>& ranks) {
  HomologyReport report;
  report.algebra = algebra;
  report.theory = theory;
  if (piece) report.graded_piece = piece->total_degree;
  const std::size_t N = dims.size() - 1;
  for (std::size_t k = 0; k <= N; ++k) {
    DegreeHomology d;
    d.degree = k;
    d.dim_chains = dims[k];
    d.dim_kernel = dims[k] - ranks[k];
    d.rank_incoming = k < N ? ranks[k + 1] : 0;
    d.betti = d.dim_kernel - d.rank_incoming;
    d.provisional = k == N;
    report.degrees.push_back(std::move(d));
  }
  return report;
}

}  // namespace

TotalComplex build_total_complex(const Algebra& a, std::size_t max_degree, std::optional<GradedPiece> piece,
                                 const ComputeOptions& options) {
  require_unit(a);
  TotalComplex t(build_complex(ComplexKind::Hochschild, a, max_degree, piece, options));
  const ComplexSlice& C = t.slice_;
  const Algebra& A = C.algebra();
  const std::size_t N = max_degree;

  for (std::size_t k = 0; k <= N; ++k) {
    std::vector<std::size_t> off{0};
    for (std::size_t j = 0; 2 * j <= k; ++j) off.push_back(off.back() + C.dim(k - 2 * j));
    if (off.back() > options.max_dim) throw ResourceLimitError(off.back(), options.max_dim, "total complex degree " + std::to_string(k));
    t.offsets_.push_back(std::move(off));
  }

  for (std::size_t k = 0; k < N; ++k) {
    SparseMatrix B(C.dim(k + 1), C.dim(k));
    for (std::size_t c = 0; c < C.dim(k); ++c) {
      TermMap out;
      accumulate_connes_B(A, C.basis(k)[c], Rational(1), out);
      SparseVector col;
      for (const auto& [tuple, coeff] : out) {
        auto idx = C.index_of(k + 1, tuple);
        if (!idx) throw Error(ErrorKind::GradingViolation, "B leaves the graded piece", std::to_string(k));
        col.push_back(Entry{static_cast<std::uint32_t>(*idx), coeff});
      }
      B.set_column(c, std::move(col));
    }
    t.connes_.push_back(std::move(B));
  }

  t.differential_.emplace_back(0, t.dim(0));
  for (std::size_t k = 1; k <= N; ++k) {
    SparseMatrix D(t.dim(k - 1), t.dim(k));
    for (std::size_t j = 0; j < t.columns(k); ++j) {
      const std::size_t q = k - 2 * j;
      for (std::size_t c = 0; c < C.dim(q); ++c) {
        SparseVector col;
        if (j >= 1) col = shifted(t.connes_[q].column(c), t.offset(k - 1, j - 1));
        if (q >= 1) {
          auto bpart = shifted(C.differential(q).column(c), t.offset(k - 1, j));
          col.insert(col.end(), bpart.begin(), bpart.end());
        }
        D.set_column(t.offset(k, j) + c, std::move(col));
      }
    }
    if (k >= 2 && !(t.differential_[k - 1] * D).is_zero()) {
      throw Error(ErrorKind::NotAComplex, "total differential does not square to zero", std::to_string(k));
    }
    t.differential_.push_back(std::move(D));
  }
  return t;
}

HomologyReport hc(const Algebra& a, std::size_t max_degree, std::optional<GradedPiece> piece,
                  const ComputeOptions& options) {
  const TotalComplex T = build_total_complex(a, max_degree, piece, options);
  std::vector<std::size_t> dims, ranks{0};
  for (std::size_t k = 0; k <= max_degree; ++k) dims.push_back(T.dim(k));
  for (std::size_t k = 1; k <= max_degree; ++k) {
    ranks.push_back(cached_rank(T.differential(k), T.hochschild().algebra(), k, piece, "hc_D", options));
  }
  return report_from(a.label(), "hc", piece, dims, ranks);
}

BicomplexCheck check_bicomplex(const TotalComplex& t) {
  const ComplexSlice& C = t.hochschild();
  const std::size_t N = t.max_degree();
  BicomplexCheck r{true, true, true};
  for (std::size_t k = 2; k <= N; ++k) {
    if (!(C.differential(k - 1) * C.differential(k)).is_zero()) r.b_squared_zero = false;
  }
  for (std::size_t k = 0; k + 1 < N; ++k) {
    if (!(t.connes(k + 1) * t.connes(k)).is_zero()) r.B_squared_zero = false;
  }
  for (std::size_t k = 0; k < N; ++k) {
    SparseMatrix sum = C.differential(k + 1) * t.connes(k);
    if (k >= 1) sum = sum + t.connes(k - 1) * C.differential(k);
    if (!sum.is_zero()) r.anticommute = false;
  }
  return r;
}

LambdaReport lambda_complex_hc(const Algebra& a, std::size_t max_degree, std::optional<GradedPiece> piece,
                               const ComputeOptions& options) {
  require_unit(a);
  const ComplexSlice C = build_complex(ComplexKind::Hochschild, a, max_degree, piece, options);
  const std::size_t N = max_degree;

  LambdaReport r;
  std::vector<Subspace> Q;
  for (std::size_t k = 0; k <= N; ++k) {
    std::vector<SparseVector> cols;
    for (std::size_t c = 0; c < C.dim(k); ++c) {
      const ChainVector rotated = cyclic_lambda(ChainVector::basis(C.basis(k)[c]));
      SparseVector col = C.coordinates(ChainVector::basis(C.basis(k)[c]) - rotated);
      if (!col.empty()) cols.push_back(std::move(col));
    }
    Q.emplace_back(C.dim(k), cols);
    r.rank_one_minus_lambda.push_back(Q.back().dim());
    r.quotient_dims.push_back(Q.back().quotient_dim());
  }
  std::vector<SparseMatrix> beta;
  beta.emplace_back(0, Q[0].quotient_dim());
  std::vector<std::size_t> ranks{0};
  for (std::size_t k = 1; k <= N; ++k) {
    beta.push_back(induced_map(C.differential(k), Q[k], Q[k - 1]));
    ranks.push_back(cached_rank(beta.back(), C.algebra(), k, piece, "lambda_beta", options));
  }
  r.differential_squared_zero = true;
  for (std::size_t k = 2; k <= N; ++k) {
    if (!(beta[k - 1] * beta[k]).is_zero()) r.differential_squared_zero = false;
  }
  r.homology = report_from(a.label(), "hc_lambda", piece, r.quotient_dims, ranks);
  return r;
}

SbiReport sbi_check(const Algebra& a, std::size_t max_degree, const ComputeOptions& options) {
  const TotalComplex T = build_total_complex(a, max_degree, std::nullopt, options);
  const ComplexSlice& C = T.hochschild();
  const std::size_t N = max_degree;

  SbiReport r;
  r.algebra = a.label();
  std::vector<std::vector<SparseVector>> hh_reps(N), hc_reps(N);
  for (std::size_t k = 0; k < N; ++k) {
    auto h = homology_at(C.differential(k), C.differential(k + 1), true);
    r.hh.push_back(h.betti);
    hh_reps[k] = std::move(h.representatives);
    auto t = homology_at(T.differential(k), T.differential(k + 1), true);
    r.hc.push_back(t.betti);
    hc_reps[k] = std::move(t.representatives);
  }

  r.rank_I.assign(N, 0);
  r.rank_S.assign(N, 0);
  r.rank_B.assign(N, 0);
  for (std::size_t k = 0; k < N; ++k) {
    r.rank_I[k] = induced_rank(T.dim(k), columns_of(T.differential(k + 1)), hh_reps[k]);
    if (k >= 2) {
      std::vector<SparseVector> images;
      for (const auto& w : hc_reps[k]) {
        SparseVector tail;
        for (const auto& e : w) {
          if (e.index >= C.dim(k)) tail.push_back(Entry{static_cast<std::uint32_t>(e.index - C.dim(k)), e.value});
        }
        images.push_back(std::move(tail));
      }
      r.rank_S[k] = induced_rank(T.dim(k - 2), columns_of(T.differential(k - 1)), images);

      std::vector<SparseVector> connecting;
      for (const auto& w : hc_reps[k - 2]) {
        SparseVector head;
        for (const auto& e : w) {
          if (e.index < C.dim(k - 2)) head.push_back(e);
        }
        connecting.push_back(T.connes(k - 2).apply(head));
      }
      r.rank_B[k] = induced_rank(C.dim(k - 1), columns_of(C.differential(k)), connecting);
    }
  }

  r.exact = true;
  auto node = [&](std::string group, std::size_t k, std::size_t dim, std::size_t in, std::size_t out) {
    SbiNode n{std::move(group), k, dim, in, out, dim == in + out};
    if (!n.exact) r.exact = false;
    r.nodes.push_back(std::move(n));
  };
  for (std::size_t k = 0; k + 2 <= N; ++k) {
    node("HH_" + std::to_string(k), k, r.hh[k], r.rank_B[k + 1], r.rank_I[k]);
    node("HC_" + std::to_string(k), k, r.hc[k], r.rank_I[k], r.rank_S[k]);
    if (k >= 2) node("HC_" + std::to_string(k - 2), k - 2, r.hc[k - 2], r.rank_S[k], r.rank_B[k]);
  }
  return r;
}

LambdaCompatibility localization_commutes_with_lambda_check(const Algebra& product, std::size_t max_degree,
                                                            std::function<bool(const Tuple&)> kill) {
  if (!product.components()) {
    throw Error(ErrorKind::InvalidArgument, "lambda compatibility needs an algebra built by product_algebra",
                product.label());
  }
  if (!kill) kill = [&product](const Tuple& t) { return is_mixed(product, t); };
  auto project = [&](const ChainVector& c) {
    ChainVector out(c.degree());
    for (const auto& [t, coeff] : c.terms()) {
      if (!kill(t)) out.add(t, coeff);
    }
    return out;
  };

  LambdaCompatibility r;
  for (std::size_t k = 0; k <= max_degree; ++k) {
    Tuple t(k + 1, 0);
    while (true) {
      const ChainVector e = ChainVector::basis(t);
      ++r.chains_checked;
      if (project(cyclic_lambda(e)) != cyclic_lambda(project(e))) {
        r.commutes = false;
        r.witness = t;
        return r;
      }
      std::size_t s = k + 1;
      while (s > 0 && ++t[s - 1] == product.dim()) t[--s] = 0;
      if (s == 0) break;
    }
  }
  return r;
}

namespace {

void monomials_of_degree(int n, int d, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n - 1) {
    cur.push_back(d);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = d; e >= 0; --e) {
    cur.push_back(e);
    monomials_of_degree(n, d - e, cur, out);
    cur.pop_back();
  }
}

struct FormBasis {
  std::map<std::pair<std::vector<int>, unsigned>, std::uint32_t> index;
  std::vector<std::pair<std::vector<int>, unsigned>> forms;
};

FormBasis form_basis(int n, int k, int D) {
  FormBasis b;
  if (D - k < 0) return b;
  std::vector<std::vector<int>> monos;
  std::vector<int> cur;
  monomials_of_degree(n, D - k, cur, monos);
  for (const auto& m : monos) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) != k) continue;
      b.index[{m, mask}] = static_cast<std::uint32_t>(b.forms.size());
      b.forms.emplace_back(m, mask);
    }
  }
  return b;
}

// d(x^a dx_I) = sum_i a_i x^{a - e_i} dx_i ^ dx_I.
SparseMatrix exterior_derivative(int n, const FormBasis& from, const FormBasis& to) {
  SparseMatrix d(to.forms.size(), from.forms.size());
  for (std::size_t c = 0; c < from.forms.size(); ++c) {
    const auto& [alpha, mask] = from.forms[c];
    SparseVector col;
    for (int i = 0; i < n; ++i) {
      if (alpha[i] == 0 || (mask >> i & 1u)) continue;
      auto lowered = alpha;
      --lowered[i];
      const int before = __builtin_popcount(mask & ((1u << i) - 1));
      Rational coeff = alpha[i];
      if (before % 2) coeff = -coeff;
      col.push_back(Entry{to.index.at({lowered, mask | (1u << i)}), coeff});
    }
    d.set_column(c, std::move(col));
  }
  return d;
}

}  // namespace

DeRhamReport whitney_de_rham(int n, int k_max, int D_max) {
  if (n < 1 || n > 16 || k_max < 0 || D_max < 0) {
    throw Error(ErrorKind::InvalidArgument, "de Rham parameters out of range",
                std::to_string(n) + "," + std::to_string(k_max) + "," + std::to_string(D_max));
  }
  DeRhamReport r;
  r.n = n;
  for (int D = 0; D <= D_max; ++D) {
    std::vector<FormBasis> basis;
    for (int k = 0; k <= n + 1; ++k) basis.push_back(k <= n ? form_basis(n, k, D) : FormBasis{});
    std::vector<SparseMatrix> d;
    std::vector<std::size_t> rk;
    for (int k = 0; k <= n; ++k) {
      d.push_back(exterior_derivative(n, basis[k], basis[k + 1]));
      rk.push_back(rank(d.back()));
    }
    for (int k = 0; k + 1 <= n; ++k) {
      if (!(d[k + 1] * d[k]).is_zero()) r.d_squared_zero = false;
    }
    long euler = 0;
    for (int k = 0; k <= n; ++k) {
      const std::size_t dim = basis[k].forms.size();
      const std::size_t betti = dim - rk[k] - (k > 0 ? rk[k - 1] : 0);
      euler += (k % 2 ? -1L : 1L) * static_cast<long>(dim);
      if (betti != (D == 0 && k == 0 ? 1u : 0u)) r.poincare = false;
      if (k <= k_max) r.rows.push_back(DeRhamRow{D, k, dim, rk[k], betti});
    }
    r.euler.push_back(euler);
  }
  return r;
}

Algebra points_algebra(std::size_t r) {
  if (r == 0) throw Error(ErrorKind::InvalidArgument, "need at least one point", "0");
  Algebra a = field_algebra();
  for (std::size_t i = 1; i < r; ++i) a = product_algebra(a, field_algebra());
  return a;
}

HcFormulaCheck hc_formula_order0_check(std::size_t r, std::size_t max_degree, const ComputeOptions& options) {
  HcFormulaCheck c;
  c.points = r;
  c.computed = hc(points_algebra(r), max_degree, std::nullopt, options).exact_betti();
  for (std::size_t k = 0; k < max_degree; ++k) {
    // Omega^k / d Omega^{k-1} contributes only at k = 0; H^{k-2j} only at k - 2j = 0.
    const std::size_t forms = k == 0 ? r : 0;
    const std::size_t wdr = (k >= 2 && k % 2 == 0) ? r : 0;
    c.predicted.push_back(forms + wdr);
  }
  c.match = c.predicted == c.computed;
  return c;
}

}  // namespace hochlab
