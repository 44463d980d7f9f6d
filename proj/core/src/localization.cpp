#include "hochlab/localization.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "hochlab/constructions.hpp"
#include "hochlab/errors.hpp"
#include "hochlab/linalg.hpp"

namespace hochlab {

namespace {

// Lexicographic position of a tuple among all dim^(k+1) tuples.
std::uint32_t full_index(std::size_t dim, const Tuple& t) {
  std::uint64_t idx = 0;
  for (auto i : t) idx = idx * dim + i;
  return static_cast<std::uint32_t>(idx);
}

std::size_t full_dim(std::size_t dim, std::size_t k) {
  std::size_t n = 1;
  for (std::size_t s = 0; s <= k; ++s) {
    if (n > (std::size_t{1} << 31) / dim) throw ResourceLimitError(n * dim, std::size_t{1} << 31, "full chain space");
    n *= dim;
  }
  return n;
}

SparseVector full_coordinates(const Algebra& a, const ChainVector& c) {
  SparseVector v;
  for (const auto& [t, coeff] : c.terms()) v.push_back(Entry{full_index(a.dim(), t), coeff});
  canonicalize(v);
  return v;
}

ChainVector chain_from_full(const Algebra& a, std::size_t k, const SparseVector& v) {
  ChainVector c(k);
  Tuple t(k + 1);
  for (const auto& e : v) {
    std::uint64_t idx = e.index;
    for (std::size_t s = k + 1; s-- > 0;) {
      t[s] = static_cast<BasisIndex>(idx % a.dim());
      idx /= a.dim();
    }
    c.add(t, e.value);
  }
  return c;
}

void all_tuples(std::size_t dim, std::size_t k, std::vector<Tuple>& out) {
  Tuple t(k + 1, 0);
  while (true) {
    out.push_back(t);
    std::size_t s = k + 1;
    while (s > 0) {
      --s;
      if (++t[s] < dim) break;
      t[s] = 0;
      if (s == 0) return;
    }
  }
}

// Multiplies every term by e_v in one tensor slot (commutative jet algebra).
TermMap slot_multiply(const Algebra& a, const TermMap& chain, std::size_t slot, BasisIndex v) {
  TermMap out;
  for (const auto& [t, c] : chain) {
    for (const auto& e : a.product(t[slot], v)) {
      Tuple r = t;
      r[slot] = e.index;
      auto [it, inserted] = out.try_emplace(r, c * e.value);
      if (!inserted) {
        it->second += c * e.value;
        if (is_zero(it->second)) out.erase(it);
      }
    }
  }
  return out;
}

void require_closure(const SubcomplexSpec& s) {
  if (!s.closure_verified) {
    throw Error(ErrorKind::NotBoundaryStable, "subcomplex closure under b has not been verified", s.name);
  }
}

std::vector<SparseVector> generator_coordinates(const Algebra& a, const SubcomplexSpec& s, std::size_t k) {
  std::vector<SparseVector> out;
  for (const auto& g : s.generators[k]) out.push_back(full_coordinates(a, g));
  return out;
}

}  // namespace

std::vector<ChainVector> jet_diagonal_ideal(const Algebra& jet, std::size_t k, std::optional<int> exponent) {
  if (!jet.monomials() || !jet.degree_cap() || !jet.is_unital()) {
    throw Error(ErrorKind::InvalidArgument, "jet_diagonal_ideal needs an algebra built by jet_algebra", jet.label());
  }
  const auto& monos = *jet.monomials();
  const std::size_t n = monos.front().size();
  const int e = exponent.value_or(*jet.degree_cap() + 1);
  if (e < 1) throw Error(ErrorKind::InvalidArgument, "flatness exponent must be >= 1", std::to_string(e));
  if (k == 0) return {};

  std::vector<BasisIndex> variable(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<int> ev(n, 0);
    ev[v] = 1;
    auto it = std::find(monos.begin(), monos.end(), ev);
    if (it == monos.end()) return {};  // order-0 jets: no variables survive
    variable[v] = static_cast<BasisIndex>(it - monos.begin());
  }

  // Generators (variable v, adjacent slot pair r, r+1).
  std::vector<std::pair<std::size_t, std::size_t>> gens;
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t v = 0; v < n; ++v) gens.emplace_back(v, r);
  }

  const BasisIndex unit = jet.unit_basis_index().value();
  const std::size_t dim = full_dim(jet.dim(), k);
  RationalEchelon ech(dim);
  std::vector<Tuple> basis;
  all_tuples(jet.dim(), k, basis);

  // Enumerate multisets of size e of generators, nondecreasing indices.
  std::vector<std::size_t> pick(static_cast<std::size_t>(e), 0);
  while (true) {
    TermMap product{{Tuple(k + 1, unit), Rational(1)}};
    for (auto g : pick) {
      const auto [v, r] = gens[g];
      TermMap left = slot_multiply(jet, product, r, variable[v]);
      TermMap right = slot_multiply(jet, product, r + 1, variable[v]);
      for (const auto& [t, c] : right) {
        auto [it, inserted] = left.try_emplace(t, -c);
        if (!inserted) {
          it->second -= c;
          if (is_zero(it->second)) left.erase(it);
        }
      }
      product = std::move(left);
      if (product.empty()) break;
    }
    if (!product.empty()) {
      for (const auto& t : basis) {
        TermMap shifted = product;
        for (std::size_t slot = 0; slot <= k && !shifted.empty(); ++slot) {
          if (t[slot] != unit) shifted = slot_multiply(jet, shifted, slot, t[slot]);
        }
        SparseVector v;
        for (const auto& [s, c] : shifted) v.push_back(Entry{full_index(jet.dim(), s), c});
        canonicalize(v);
        if (!v.empty()) ech.insert(v);
      }
    }
    // next multiset
    std::size_t pos = pick.size();
    while (pos > 0 && pick[pos - 1] == gens.size() - 1) --pos;
    if (pos == 0) break;
    ++pick[pos - 1];
    for (std::size_t i = pos; i < pick.size(); ++i) pick[i] = pick[pos - 1];
  }

  std::vector<ChainVector> out;
  for (const auto& row : ech.reduced_rows()) out.push_back(chain_from_full(jet, k, row));
  return out;
}

SubcomplexSpec jet_diagonal_subcomplex(const Algebra& jet, std::size_t max_degree, std::optional<int> exponent) {
  SubcomplexSpec s;
  s.name = "J(" + jet.label() + ")";
  for (std::size_t k = 0; k <= max_degree; ++k) s.generators.push_back(jet_diagonal_ideal(jet, k, exponent));
  return s;
}

bool is_mixed(const Algebra& product, const Tuple& t) {
  const auto& comps = *product.components();
  for (auto i : t) {
    if (comps[i] != comps[t.front()]) return true;
  }
  return false;
}

SubcomplexSpec mixed_subcomplex(const Algebra& product, std::size_t max_degree) {
  if (!product.components()) {
    throw Error(ErrorKind::InvalidArgument, "mixed_subcomplex needs an algebra built by product_algebra", product.label());
  }
  SubcomplexSpec s;
  s.name = "mixed(" + product.label() + ")";
  for (std::size_t k = 0; k <= max_degree; ++k) {
    full_dim(product.dim(), k);
    std::vector<Tuple> tuples;
    all_tuples(product.dim(), k, tuples);
    std::vector<ChainVector> gens;
    for (auto& t : tuples) {
      if (is_mixed(product, t)) gens.push_back(ChainVector::basis(std::move(t)));
    }
    s.generators.push_back(std::move(gens));
  }
  return s;
}

StabilityResult check_boundary_stability(const Algebra& a, SubcomplexSpec& s) {
  StabilityResult result;
  for (std::size_t k = 1; k <= s.max_degree() && result.stable; ++k) {
    const Subspace lower(full_dim(a.dim(), k - 1), generator_coordinates(a, s, k - 1));
    for (const auto& g : s.generators[k]) {
      ChainVector bg = boundary(a, g);
      if (!lower.contains(full_coordinates(a, bg))) {
        result.stable = false;
        result.degree = k;
        result.witness = std::move(bg);
        break;
      }
    }
  }
  s.closure_verified = result.stable;
  return result;
}

ContractibilityReport verify_contractible(const Algebra& a, const SubcomplexSpec& s) {
  require_closure(s);
  const std::size_t N = s.max_degree();
  ContractibilityReport r;
  std::vector<std::size_t> boundary_rank(N + 2, 0);
  for (std::size_t k = 0; k <= N; ++k) {
    const auto gens = generator_coordinates(a, s, k);
    r.dims.push_back(rank_of_vectors(full_dim(a.dim(), k), gens));
    if (k >= 1) {
      std::vector<SparseVector> images;
      for (const auto& g : s.generators[k]) images.push_back(full_coordinates(a, boundary(a, g)));
      boundary_rank[k] = rank_of_vectors(full_dim(a.dim(), k - 1), images);
    }
  }
  r.contractible = true;
  for (std::size_t k = 0; k < N; ++k) {
    r.betti.push_back(r.dims[k] - boundary_rank[k] - boundary_rank[k + 1]);
    if (k >= 1 && r.betti.back() != 0) r.contractible = false;
  }
  r.degree0 = r.betti.empty() ? 0 : r.betti[0];
  return r;
}

DiagonalQuotientReport diagonal_quotient(const Algebra& a, const SubcomplexSpec& s, const ComputeOptions& options) {
  require_closure(s);
  const std::size_t N = s.max_degree();
  const ComplexSlice C = hochschild_complex(a, N, std::nullopt, options);

  std::vector<Subspace> J;
  for (std::size_t k = 0; k <= N; ++k) {
    std::vector<SparseVector> gens;
    for (const auto& g : s.generators[k]) gens.push_back(C.coordinates(g));
    J.emplace_back(C.dim(k), gens);
  }

  DiagonalQuotientReport r;
  r.quotient.representatives.resize(N + 1);
  for (std::size_t k = 0; k <= N; ++k) {
    r.dim_C.push_back(C.dim(k));
    r.dim_J.push_back(J[k].dim());
    r.dim_E.push_back(J[k].quotient_dim());
    for (auto idx : J[k].quotient_basis()) r.quotient.representatives[k].push_back(C.basis(k)[idx]);
  }
  r.quotient.beta.emplace_back(0, J[0].quotient_dim());
  for (std::size_t k = 1; k <= N; ++k) r.quotient.beta.push_back(induced_map(C.differential(k), J[k], J[k - 1]));

  r.beta_squared_zero = true;
  for (std::size_t k = 2; k <= N; ++k) {
    if (!(r.quotient.beta[k - 1] * r.quotient.beta[k]).is_zero()) r.beta_squared_zero = false;
  }
  r.chain_map = true;
  for (std::size_t k = 1; k <= N && r.chain_map; ++k) {
    for (std::uint32_t t = 0; t < C.dim(k); ++t) {
      const SparseVector et{Entry{t, 1}};
      if (J[k - 1].project(C.differential(k).apply(et)) != r.quotient.beta[k].apply(J[k].project(et))) {
        r.chain_map = false;
        break;
      }
    }
  }

  std::vector<std::size_t> rank_d(N + 1, 0), rank_beta(N + 1, 0);
  for (std::size_t k = 1; k <= N; ++k) {
    rank_d[k] = rank(C.differential(k));
    rank_beta[k] = rank(r.quotient.beta[k]);
  }
  for (std::size_t k = 0; k < N; ++k) {
    r.betti_C.push_back(C.dim(k) - rank_d[k] - rank_d[k + 1]);
    r.betti_E.push_back(r.dim_E[k] - rank_beta[k] - rank_beta[k + 1]);

    // rank of p_* : images of HH representatives modulo im beta_{k+1}.
    const auto h = homology_at(C.differential(k), C.differential(k + 1), true);
    std::vector<SparseVector> cols;
    for (std::size_t c = 0; c < r.quotient.beta[k + 1].cols(); ++c) cols.push_back(r.quotient.beta[k + 1].column(c));
    const std::size_t base = rank_beta[k + 1];
    for (const auto& z : h.representatives) cols.push_back(J[k].project(z));
    r.induced_rank.push_back(rank_of_vectors(r.dim_E[k], cols) - base);
    r.quasi_isomorphic.push_back(r.betti_C[k] == r.betti_E[k] && r.induced_rank[k] == r.betti_C[k]);
  }
  return r;
}

std::vector<Orbit> orbit_decomposition(const GroupoidSpec& g) {
  validate_groupoid(g);
  const std::size_t n = g.objects.size();
  std::vector<std::uint32_t> root(n);
  std::iota(root.begin(), root.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const auto& a : g.arrows) {
    const auto s = find(a.source), t = find(a.target);
    if (s != t) root[std::max(s, t)] = std::min(s, t);
  }
  std::map<std::uint32_t, std::vector<std::uint32_t>> classes;
  for (std::uint32_t x = 0; x < n; ++x) classes[find(x)].push_back(x);

  std::vector<Orbit> orbits;
  for (auto& [r, members] : classes) {
    Orbit o;
    const auto base = *std::min_element(members.begin(), members.end(), [&](auto x, auto y) {
      return g.objects[x] < g.objects[y] || (g.objects[x] == g.objects[y] && x < y);
    });
    o.base_point = base;
    o.objects.push_back(base);
    for (auto x : members) {
      if (x != base) o.objects.push_back(x);
    }
    for (std::uint32_t a = 0; a < g.arrows.size(); ++a) {
      if (g.arrows[a].source == base && g.arrows[a].target == base) o.isotropy_arrows.push_back(a);
    }
    o.isotropy.name = "Iso(" + g.objects[base] + ")";
    const std::size_t h = o.isotropy_arrows.size();
    o.isotropy.table.assign(h, std::vector<std::uint32_t>(h));
    for (std::size_t i = 0; i < h; ++i) {
      o.isotropy.labels.push_back(g.arrows[o.isotropy_arrows[i]].label);
      for (std::size_t j = 0; j < h; ++j) {
        const auto c = static_cast<std::uint32_t>(g.compose[o.isotropy_arrows[i]][o.isotropy_arrows[j]]);
        o.isotropy.table[i][j] = static_cast<std::uint32_t>(
            std::find(o.isotropy_arrows.begin(), o.isotropy_arrows.end(), c) - o.isotropy_arrows.begin());
      }
    }
    validate_group(o.isotropy);
    orbits.push_back(std::move(o));
  }
  std::sort(orbits.begin(), orbits.end(), [&](const Orbit& x, const Orbit& y) {
    return g.objects[x.base_point] < g.objects[y.base_point] ||
           (g.objects[x.base_point] == g.objects[y.base_point] && x.base_point < y.base_point);
  });
  return orbits;
}

GroupoidSpec restrict_groupoid(const GroupoidSpec& g, const std::vector<std::uint32_t>& objects) {
  std::vector<std::int32_t> obj_pos(g.objects.size(), -1);
  GroupoidSpec out;
  out.name = g.name + "|";
  for (std::size_t i = 0; i < objects.size(); ++i) {
    obj_pos[objects[i]] = static_cast<std::int32_t>(i);
    out.objects.push_back(g.objects[objects[i]]);
    out.name += (i ? "," : "") + g.objects[objects[i]];
  }
  std::vector<std::int32_t> arrow_pos(g.arrows.size(), -1);
  std::vector<std::uint32_t> kept;
  for (std::uint32_t a = 0; a < g.arrows.size(); ++a) {
    if (obj_pos[g.arrows[a].source] >= 0 && obj_pos[g.arrows[a].target] >= 0) {
      arrow_pos[a] = static_cast<std::int32_t>(kept.size());
      kept.push_back(a);
      out.arrows.push_back({g.arrows[a].label, static_cast<std::uint32_t>(obj_pos[g.arrows[a].source]),
                            static_cast<std::uint32_t>(obj_pos[g.arrows[a].target])});
    }
  }
  out.compose.assign(kept.size(), std::vector<std::int32_t>(kept.size(), -1));
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (std::size_t j = 0; j < kept.size(); ++j) {
      const auto c = g.compose[kept[i]][kept[j]];
      out.compose[i][j] = c < 0 ? -1 : arrow_pos[c];
    }
    out.inverse.push_back(static_cast<std::uint32_t>(arrow_pos[g.inverse[kept[i]]]));
  }
  for (auto x : objects) out.identities.push_back(static_cast<std::uint32_t>(arrow_pos[g.identities[x]]));
  validate_groupoid(out);
  return out;
}

namespace {

// conv(sub) -> M_r(Q[H]) sending g : y -> z to E_{z,y} (x) (t_z^{-1} g t_y).
bool matrix_isomorphism(const GroupoidSpec& sub, const Orbit& orbit) {
  const std::size_t r = sub.objects.size();
  const std::size_t h = orbit.isotropy.order();
  const Algebra conv = groupoid_convolution_algebra(sub);
  const Algebra mat = matrix_algebra(group_algebra(orbit.isotropy), static_cast<int>(r));
  if (conv.dim() != mat.dim()) return false;

  std::vector<std::uint32_t> iso;  // isotropy arrows of sub at object 0
  for (std::uint32_t a = 0; a < sub.arrows.size(); ++a) {
    if (sub.arrows[a].source == 0 && sub.arrows[a].target == 0) iso.push_back(a);
  }
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> transport(r, kNone);
  transport[0] = sub.identities[0];
  for (std::uint32_t a = 0; a < sub.arrows.size(); ++a) {
    const auto y = sub.arrows[a].target;
    if (sub.arrows[a].source == 0 && transport[y] == kNone) transport[y] = a;
  }
  for (auto t : transport) {
    if (t == kNone) return false;
  }
  std::vector<BasisIndex> phi(sub.arrows.size());
  std::vector<bool> hit(mat.dim(), false);
  for (std::uint32_t a = 0; a < sub.arrows.size(); ++a) {
    const auto y = sub.arrows[a].source, z = sub.arrows[a].target;
    const auto inner = sub.compose[a][transport[y]];
    const auto loop = sub.compose[sub.inverse[transport[z]]][inner];
    const auto l = static_cast<std::uint32_t>(std::find(iso.begin(), iso.end(), static_cast<std::uint32_t>(loop)) - iso.begin());
    if (l >= h) return false;
    phi[a] = static_cast<BasisIndex>((z * r + y) * h + l);
    if (hit[phi[a]]) return false;
    hit[phi[a]] = true;
  }
  for (BasisIndex a = 0; a < conv.dim(); ++a) {
    for (BasisIndex b = 0; b < conv.dim(); ++b) {
      SparseVector image;
      for (const auto& e : conv.product(a, b)) image.push_back(Entry{phi[e.index], e.value});
      canonicalize(image);
      if (image != mat.product(phi[a], phi[b])) return false;
    }
  }
  return true;
}

}  // namespace

StalkReport stalk_reduction_check(const GroupoidSpec& g, std::size_t max_degree, const ComputeOptions& options) {
  const auto orbits = orbit_decomposition(g);
  const Algebra A = groupoid_convolution_algebra(g);

  StalkReport report;
  report.lhs = hh(A, max_degree, std::nullopt, options).exact_betti();
  report.rhs.assign(report.lhs.size(), 0);
  for (std::size_t k = 0; k < report.lhs.size(); ++k) report.degrees_compared.push_back(k);

  std::vector<std::size_t> orbit_of(g.objects.size());
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    for (auto x : orbits[o].objects) orbit_of[x] = o;
  }
  report.block_decomposition = true;
  for (BasisIndex a = 0; a < A.dim(); ++a) {
    for (BasisIndex b = 0; b < A.dim(); ++b) {
      if (orbit_of[g.arrows[a].source] != orbit_of[g.arrows[b].source] && !A.product(a, b).empty()) {
        report.block_decomposition = false;
      }
    }
  }

  for (const auto& orbit : orbits) {
    OrbitReduction red;
    red.base_point = g.objects[orbit.base_point];
    red.orbit_size = orbit.size();
    red.isotropy_order = orbit.isotropy.order();
    red.matrix_isomorphism = matrix_isomorphism(restrict_groupoid(g, orbit.objects), orbit);
    red.hh_isotropy = hh(group_algebra(orbit.isotropy), max_degree, std::nullopt, options).exact_betti();
    for (std::size_t k = 0; k < report.rhs.size(); ++k) report.rhs[k] += red.hh_isotropy[k];
    report.orbits.push_back(std::move(red));
  }
  report.match = report.lhs == report.rhs;
  return report;
}

}  // namespace hochlab
