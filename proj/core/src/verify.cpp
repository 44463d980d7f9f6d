#include "hochlab/verify.hpp"

#include <chrono>
#include <filesystem>
#include <random>
#include <unistd.h>

#include "hochlab/builtins.hpp"
#include "hochlab/constructions.hpp"
#include "hochlab/cyclic.hpp"
#include "hochlab/errors.hpp"
#include "hochlab/localization.hpp"
#include "hochlab/rank_cache.hpp"

namespace hochlab {

namespace {

using Betti = std::vector<std::size_t>;

Betti prefix(const Betti& v, std::size_t n) { return Betti(v.begin(), v.begin() + std::min(n, v.size())); }

Betti sum(const Betti& a, const Betti& b) {
  Betti out(std::min(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

template <class T>
void expect_eq(CriterionResult& r, std::string name, const T& expected, const T& computed) {
  r.checks.push_back(Check{std::move(name), Json(expected), Json(computed), expected == computed});
}

void expect_true(CriterionResult& r, std::string name, bool computed) { expect_eq(r, std::move(name), true, computed); }

ChainVector random_chain(const Algebra& a, std::size_t k, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> basis(0, static_cast<std::uint32_t>(a.dim() - 1));
  std::uniform_int_distribution<int> terms(1, 4), num(-5, 5), den(1, 4);
  ChainVector c(k);
  const int n = terms(rng);
  for (int i = 0; i < n; ++i) {
    Tuple t(k + 1);
    for (auto& x : t) x = basis(rng);
    int p = num(rng);
    if (p == 0) p = 1;
    c.add(t, Rational(p, den(rng)));
  }
  return c;
}

// 1: b^2 = 0, b'^2 = 0, lambda^{k+1} = id, B^2 = 0, bB + Bb = 0 on random chains.
void operator_identities(CriterionResult& r, Profile) {
  const std::vector<std::pair<std::string, Algebra>> algebras = {
      {"Q", field_algebra()},
      {"Q[x]/x^2", jet_algebra(1, 1)},
      {"Q[x]/x^3", jet_algebra(1, 2)},
      {"Q[Z2]", group_algebra(cyclic_group(2))},
      {"Q[S3]", group_algebra(symmetric_group_3())},
      {"M2(Q)", matrix_algebra(field_algebra(), 2)},
  };
  constexpr std::size_t kChains = 120;
  std::uint64_t seed = 7001;
  for (const auto& [name, a] : algebras) {
    std::mt19937_64 rng(seed++);
    std::size_t fail_b = 0, fail_bar = 0, fail_lambda = 0, fail_BB = 0, fail_bB = 0;
    for (std::size_t i = 0; i < kChains; ++i) {
      const std::size_t k = i % 6;
      const ChainVector c = random_chain(a, k, rng);
      if (!boundary(a, boundary(a, c)).is_zero()) ++fail_b;
      if (!bar_differential(a, bar_differential(a, c)).is_zero()) ++fail_bar;
      ChainVector rotated = c;
      for (std::size_t j = 0; j <= k; ++j) rotated = cyclic_lambda(rotated);
      if (rotated != c) ++fail_lambda;
      const ChainVector Bc = connes_B(a, c);
      if (!connes_B(a, Bc).is_zero()) ++fail_BB;
      const ChainVector bB = boundary(a, Bc);
      const ChainVector Bb = k == 0 ? ChainVector(0) : connes_B(a, boundary(a, c));
      if (!(bB + Bb).is_zero()) ++fail_bB;
    }
    const std::string tag = name + " (" + std::to_string(kChains) + " chains, degrees 0..5)";
    expect_eq<std::size_t>(r, "b^2 = 0 failures, " + tag, 0, fail_b);
    expect_eq<std::size_t>(r, "b'^2 = 0 failures, " + tag, 0, fail_bar);
    expect_eq<std::size_t>(r, "lambda^(k+1) = id failures, " + tag, 0, fail_lambda);
    expect_eq<std::size_t>(r, "B^2 = 0 failures, " + tag, 0, fail_BB);
    expect_eq<std::size_t>(r, "bB + Bb = 0 failures, " + tag, 0, fail_bB);
  }
}

// 2: HH of Q[x]/x^{m+1} against the 2-periodic resolution.
void oracle_equivalence(CriterionResult& r, Profile, const ComputeOptions& o) {
  for (int m = 0; m <= 3; ++m) {
    Betti formula{static_cast<std::size_t>(m + 1)};
    for (int k = 1; k < 5; ++k) formula.push_back(static_cast<std::size_t>(m));
    const Betti computed = hh(jet_algebra(1, m), 5, std::nullopt, o).exact_betti();
    const Betti oracle = prefix(hh_truncated_poly_oracle(m, 5), 5);
    expect_eq(r, "hh(Q[x]/x^" + std::to_string(m + 1) + ", 5)", formula, computed);
    expect_eq(r, "resolution oracle m=" + std::to_string(m), formula, oracle);
  }
}

// 3: hh = normalized_hh on the unital builtins.
void normalized_equivalence(CriterionResult& r, Profile p, const ComputeOptions& o) {
  const std::size_t N = p == Profile::Full ? 5 : 4;
  for (const auto& name : unital_builtin_names()) {
    const Algebra a = resolve_builtin(name).algebra;
    expect_eq(r, name + " degrees < " + std::to_string(N), hh(a, N, std::nullopt, o).exact_betti(),
              normalized_hh(a, N, std::nullopt, o).exact_betti());
  }
}

// 4: graded HKR.
void hkr(CriterionResult& r, Profile, const ComputeOptions& o) {
  for (int n = 1; n <= 2; ++n) {
    Betti betti, forms;
    for (const auto& row : hkr_check(n, 3, 4, o)) {
      betti.push_back(row.betti);
      forms.push_back(row.kahler_dim);
    }
    expect_eq(r, "n=" + std::to_string(n) + " HH_k piece D vs C(n,k)*#mono(D-k), k<=3, D<=4", forms, betti);
  }
}

// 5: localization for product algebras.
void product_localization(CriterionResult& r, Profile, const ComputeOptions& o) {
  const std::vector<std::pair<std::string, std::pair<Algebra, Algebra>>> pairs = {
      {"QxQ", {field_algebra(), field_algebra()}},
      {"(Q[x]/x^2)xQ", {jet_algebra(1, 1), field_algebra()}},
  };
  constexpr std::size_t N = 4;
  for (const auto& [name, ab] : pairs) {
    const Algebra P = product_algebra(ab.first, ab.second);
    const Betti hp = hh(P, N, std::nullopt, o).exact_betti();
    expect_eq(r, name + " hh(AxB) = hh(A) + hh(B), degrees <= 3",
              sum(hh(ab.first, N, std::nullopt, o).exact_betti(), hh(ab.second, N, std::nullopt, o).exact_betti()), hp);

    SubcomplexSpec J = mixed_subcomplex(P, N);
    const auto st = check_boundary_stability(P, J);
    expect_true(r, name + " mixed subcomplex b-stable", st.stable);
    if (!st.stable) continue;
    const auto c = verify_contractible(P, J);
    expect_eq(r, name + " H_1, H_2 of mixed subcomplex", Betti{0, 0}, Betti{c.betti[1], c.betti[2]});

    const auto q = diagonal_quotient(P, J, o);
    bool bookkeeping = true;
    for (std::size_t k = 0; k <= N; ++k) bookkeeping = bookkeeping && q.dim_C[k] == q.dim_J[k] + q.dim_E[k];
    expect_true(r, name + " dim C_k = dim J_k + dim E_k", bookkeeping);
    expect_true(r, name + " induced differential squares to zero", q.beta_squared_zero);
    expect_true(r, name + " projection is a chain map", q.chain_map);
    expect_eq(r, name + " H(E) = HH", q.betti_C, q.betti_E);
    expect_eq(r, name + " rank of projection on homology", q.betti_C, q.induced_rank);
  }
}

// 6: jet diagonal ideal.
void jet_diagonal(CriterionResult& r, Profile, const ComputeOptions& o) {
  for (int m = 1; m <= 2; ++m) {
    const Algebra a = jet_algebra(1, m);
    const std::string name = "Q[x]/x^" + std::to_string(m + 1);
    SubcomplexSpec J = jet_diagonal_subcomplex(a, 3);
    const auto st = check_boundary_stability(a, J);
    expect_true(r, name + " J_k b-stable, k <= 3", st.stable);
    if (!st.stable) continue;
    const auto q = diagonal_quotient(a, J, o);
    expect_eq(r, name + " H_0(E)", a.dim(), q.betti_E[0]);
    expect_eq(r, name + " HH_0", a.dim(), q.betti_C[0]);
    for (std::size_t k = 1; k < q.betti_E.size(); ++k) {
      r.notes.push_back(name + ": H_" + std::to_string(k) + "(E) = " + std::to_string(q.betti_E[k]) + ", HH_" +
                        std::to_string(k) + " = " + std::to_string(q.betti_C[k]) + ", dim J_" + std::to_string(k) +
                        " = " + std::to_string(q.dim_J[k]));
    }
  }
}

// 7: groupoid stalk reduction.
void stalks(CriterionResult& r, Profile, const ComputeOptions& o) {
  struct Case {
    std::string name;
    GroupoidSpec g;
    Betti expected;
  };
  const std::vector<Case> cases = {
      {"swap", swap_groupoid(), {1, 0, 0}},
      {"z2point", z2_point_groupoid(), {2, 0, 0}},
      {"two-orbit", two_orbit_groupoid(), {3}},
  };
  for (const auto& c : cases) {
    const auto s = stalk_reduction_check(c.g, 3, o);
    expect_eq(r, c.name + " hh", c.expected, prefix(s.lhs, c.expected.size()));
    expect_eq(r, c.name + " hh = sum over orbits of hh(Q[isotropy])", s.lhs, s.rhs);
    expect_true(r, c.name + " orbits multiply to zero across", s.block_decomposition);
    bool iso = true;
    for (const auto& orbit : s.orbits) iso = iso && orbit.matrix_isomorphism;
    expect_true(r, c.name + " conv(orbit) = M_r(Q[isotropy])", iso);
  }
}

// 8: Morita invariance.
void morita(CriterionResult& r, Profile, const ComputeOptions& o) {
  const Betti expected{1, 0, 0, 0};
  expect_eq(r, "hh(M2(Q), 4)", expected, hh(matrix_algebra(field_algebra(), 2), 4, std::nullopt, o).exact_betti());
  expect_eq(r, "hh(Q, 4)", expected, hh(field_algebra(), 4, std::nullopt, o).exact_betti());
}

// 9: H-unitality.
void h_unitality(CriterionResult& r, Profile, const ComputeOptions& o) {
  constexpr std::size_t N = 4;
  for (const auto& name : unital_builtin_names()) {
    const auto c = bar_acyclicity_check(resolve_builtin(name).algebra, N, std::nullopt, o);
    expect_eq(r, name + " bar homology, degrees 1..3", Betti{0, 0, 0}, Betti(c.betti.begin() + 1, c.betti.end()));
  }
  const Algebra zero = zero_algebra(1);
  const auto z = bar_acyclicity_check(zero, N, std::nullopt, o);
  expect_eq(r, "zero multiplication: acyclic at degree 1", false, static_cast<bool>(z.acyclic[1]));
  const auto u = bar_acyclicity_check(unitalization(zero).algebra, N, std::nullopt, o);
  expect_true(r, "unitalization of zero multiplication: acyclic in degrees 1..3", u.h_unital);
}

// 10: cyclic homology.
void cyclic(CriterionResult& r, Profile, const ComputeOptions& o) {
  const Betti hq = hc(field_algebra(), 5, std::nullopt, o).exact_betti();
  expect_eq(r, "hc(Q, 5)", Betti{1, 0, 1, 0}, prefix(hq, 4));
  expect_eq(r, "hc(Q, 5) degree 4", std::size_t{1}, hq[4]);
  for (const auto& name : unital_builtin_names()) {
    const Algebra a = resolve_builtin(name).algebra;
    expect_eq(r, name + " hc_0 = hh_0", hh(a, 1, std::nullopt, o).exact_betti(), hc(a, 1, std::nullopt, o).exact_betti());
  }
  const std::vector<std::pair<std::string, Algebra>> algebras = {
      {"Q", field_algebra()}, {"Q[x]/x^2", jet_algebra(1, 1)}, {"Q[Z2]", group_algebra(cyclic_group(2))}};
  for (const auto& [name, a] : algebras) {
    const auto l = lambda_complex_hc(a, 4, std::nullopt, o);
    expect_eq(r, name + " hc = lambda-complex homology, degrees <= 3", hc(a, 4, std::nullopt, o).exact_betti(),
              l.homology.exact_betti());
    expect_true(r, name + " bicomplex identities", check_bicomplex(build_total_complex(a, 4, std::nullopt, o)).ok());
  }
  for (const auto& [name, a] : {algebras[0], algebras[1]}) {
    const auto s = sbi_check(a, 5, o);
    std::size_t bad = 0;
    for (const auto& n : s.nodes) bad += n.exact ? 0 : 1;
    expect_eq(r, name + " SBI inexact nodes (of " + std::to_string(s.nodes.size()) + ")", std::size_t{0}, bad);
  }
}

// 11: order-0 HC formula.
void hc_formula(CriterionResult& r, Profile, const ComputeOptions& o) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto c = hc_formula_order0_check(n, 4, o);
    const Betti expected{n, 0, n, 0};
    expect_eq(r, "prediction for " + std::to_string(n) + " points", expected, c.predicted);
    expect_eq(r, "hc(Q^" + std::to_string(n) + ", 4)", expected, c.computed);
  }
}

// 12: lambda commutes with killing mixed chains.
void lambda_compatibility(CriterionResult& r, Profile) {
  const std::vector<std::pair<std::string, Algebra>> products = {
      {"QxQ", points_algebra(2)},
      {"(Q[x]/x^2)xQ", product_algebra(jet_algebra(1, 1), field_algebra())},
      {"QxQxQ", points_algebra(3)},
  };
  for (const auto& [name, p] : products) {
    const auto c = localization_commutes_with_lambda_check(p, 4);
    expect_true(r, name + " P lambda = lambda P on " + std::to_string(c.chains_checked) + " basis chains", c.commutes);
  }
  // Negative control: killing one diagonal chain whose rotation is another.
  const Algebra& p = products[1].second;
  const Tuple target{0, 1};
  const auto bad = localization_commutes_with_lambda_check(p, 4, [&](const Tuple& t) { return t == target; });
  expect_eq(r, "corrupted projection detected", false, bad.commutes);
  expect_eq(r, "corrupted projection witness", Json(target), bad.witness ? Json(*bad.witness) : Json(nullptr));
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() / ("hochlab-determinism-" + std::to_string(::getpid()));
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
};

// 13: two runs (empty cache, then warm cache) agree modulo run statistics.
void determinism(CriterionResult& r, const ComputeOptions& o) {
  TempDir dir;
  const auto file = dir.path / "ranks.jsonl";
  auto run = [&](RankCache& cache) {
    ComputeOptions inner = o;
    inner.cache = &cache;
    SuiteReport s;
    s.profile = Profile::Quick;
    for (int id = 1; id < kCriteria; ++id) s.criteria.push_back(run_criterion(id, Profile::Quick, inner));
    cache.flush();
    return to_json(s, false).dump();
  };
  RankCache cold(file);
  const std::string first = run(cold);
  RankCache warm(file);
  const std::string second = run(warm);
  expect_true(r, "quick reports byte-identical (cold vs warm cache)", first == second);
  expect_true(r, "warm run served every cached rank", warm.hits() > 0 && warm.misses() == 0);
}

const char* title(int id) {
  switch (id) {
    case 1: return "operator identities on random chains";
    case 2: return "HH of truncated polynomials vs periodic resolution";
    case 3: return "normalized complex equivalence";
    case 4: return "graded HKR";
    case 5: return "localization for product algebras";
    case 6: return "jet diagonal ideal";
    case 7: return "groupoid stalk reduction";
    case 8: return "Morita invariance";
    case 9: return "H-unitality";
    case 10: return "cyclic homology";
    case 11: return "order-0 HC formula";
    case 12: return "lambda-compatibility of localization";
    case 13: return "determinism";
  }
  return "unknown";
}

}  // namespace

const char* to_string(Profile p) { return p == Profile::Full ? "full" : "quick"; }

bool CriterionResult::passed() const {
  if (checks.empty()) return false;
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

bool SuiteReport::passed() const {
  for (const auto& c : criteria) {
    if (!c.passed()) return false;
  }
  return !criteria.empty();
}

CriterionResult run_criterion(int id, Profile profile, const ComputeOptions& options) {
  CriterionResult r;
  r.id = id;
  r.title = title(id);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: operator_identities(r, profile); break;
      case 2: oracle_equivalence(r, profile, options); break;
      case 3: normalized_equivalence(r, profile, options); break;
      case 4: hkr(r, profile, options); break;
      case 5: product_localization(r, profile, options); break;
      case 6: jet_diagonal(r, profile, options); break;
      case 7: stalks(r, profile, options); break;
      case 8: morita(r, profile, options); break;
      case 9: h_unitality(r, profile, options); break;
      case 10: cyclic(r, profile, options); break;
      case 11: hc_formula(r, profile, options); break;
      case 12: lambda_compatibility(r, profile); break;
      case 13: determinism(r, options); break;
      default: throw Error(ErrorKind::InvalidArgument, "no such criterion", std::to_string(id));
    }
  } catch (const Error& e) {
    if (id < 1 || id > kCriteria) throw;
    r.checks.push_back(Check{"completed without error", Json(true), Json(std::string(e.what())), false});
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

SuiteReport run_suite(Profile profile, const ComputeOptions& options,
                      const std::function<void(const CriterionResult&)>& on_result) {
  SuiteReport s;
  s.profile = profile;
  const auto t0 = std::chrono::steady_clock::now();
  for (int id = 1; id <= kCriteria; ++id) {
    s.criteria.push_back(run_criterion(id, profile, options));
    if (on_result) on_result(s.criteria.back());
  }
  s.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return s;
}

Json to_json(const SuiteReport& r, bool with_run_stats) {
  Json j;
  j["schema"] = kReportSchema;
  j["engine"] = engine_version();
  j["profile"] = to_string(r.profile);
  Json criteria = Json::array();
  Json timing = Json::object();
  for (const auto& c : r.criteria) {
    Json checks = Json::array();
    for (const auto& k : c.checks) {
      checks.push_back({{"name", k.name}, {"expected", k.expected}, {"computed", k.computed}, {"passed", k.passed}});
    }
    criteria.push_back({{"id", c.id}, {"title", c.title}, {"passed", c.passed()}, {"checks", std::move(checks)},
                        {"notes", c.notes}});
    timing[std::to_string(c.id)] = c.wall_ms;
  }
  j["criteria"] = std::move(criteria);
  j["passed"] = r.passed();
  if (with_run_stats) j["run_stats"] = {{"wall_time_ms", r.wall_ms}, {"criterion_ms", std::move(timing)}};
  return j;
}

Json strip_run_stats(Json j) {
  if (j.is_object()) {
    j.erase("run_stats");
    for (auto& [k, v] : j.items()) v = strip_run_stats(v);
  } else if (j.is_array()) {
    for (auto& v : j) v = strip_run_stats(v);
  }
  return j;
}

}  // namespace hochlab
