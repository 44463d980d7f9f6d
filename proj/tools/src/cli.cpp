#include "hochlab/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <sstream>

#include "hochlab/builtins.hpp"
#include "hochlab/cyclic.hpp"
#include "hochlab/errors.hpp"
#include "hochlab/localization.hpp"
#include "hochlab/rank_cache.hpp"

namespace hochlab::cli {

namespace {

using Betti = std::vector<std::size_t>;

std::string tuple_text(const Betti& b) {
  std::string s = "(";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? ", " : "") + std::to_string(b[i]);
  return s + ")";
}

Betti prefix(const Betti& v, std::size_t n) { return Betti(v.begin(), v.begin() + std::min(n, v.size())); }

struct Outcome {
  Json result = Json::object();
  std::ostringstream text;
  bool verified = true;
};

struct Context {
  const JobSpec& job;
  ComputeOptions options;
  std::optional<Input> input;

  const Input& in() {
    if (!input) {
      if (job.input.empty()) throw Error(ErrorKind::InvalidArgument, "--input is required for " + job.command);
      input = resolve_input(job.input);
    }
    return *input;
  }
  const Algebra& algebra() { return in().algebra; }
  std::optional<GradedPiece> piece() const {
    return job.piece ? std::optional<GradedPiece>(GradedPiece{*job.piece}) : std::nullopt;
  }
};

Json oracle_entry(const std::string& kind, const Betti& expected, const Betti& computed) {
  return {{"oracle", kind}, {"oracle_betti", expected}, {"betti", computed}, {"match", expected == computed}};
}

void render_homology(std::ostream& os, const HomologyReport& r, const char* symbol) {
  const Betti exact = r.exact_betti();
  os << symbol << "(" << r.algebra << ")";
  if (r.graded_piece) os << " piece D=" << *r.graded_piece;
  os << "\n  degree  dim C_k  betti\n";
  for (const auto& d : r.degrees) {
    os << "  " << std::setw(6) << d.degree << "  " << std::setw(7) << d.dim_chains << "  " << std::setw(5) << d.betti
       << (d.provisional ? "  provisional (upper bound)" : "") << "\n";
  }
  os << "  exact: " << tuple_text(exact) << "\n";
}

void cmd_hh(Context& c, Outcome& o) {
  const Algebra& a = c.algebra();
  const auto r = hh(a, c.job.max_degree, c.piece(), c.options);
  o.result = to_json(r);
  o.result["exact_betti"] = r.exact_betti();
  render_homology(o.text, r, "HH");
  if (!c.job.oracle) return;

  Json oracles = Json::array();
  const Betti exact = r.exact_betti();
  if (a.is_unital()) oracles.push_back(oracle_entry("normalized complex", normalized_hh(a, c.job.max_degree, c.piece(), c.options).exact_betti(), exact));
  if (!c.piece() && a.monomials() && a.monomials()->front().size() == 1 && !a.is_graded_truncated()) {
    oracles.push_back(oracle_entry("2-periodic resolution",
                                   prefix(hh_truncated_poly_oracle(*a.degree_cap(), c.job.max_degree), exact.size()), exact));
  }
  if (c.in().groupoid && !c.piece()) {
    const auto s = stalk_reduction_check(*c.in().groupoid, c.job.max_degree, c.options);
    oracles.push_back(oracle_entry("stalk decomposition", s.rhs, exact));
  }
  bool match = true;
  for (const auto& e : oracles) {
    match = match && e["match"].get<bool>();
    o.text << "  oracle " << e["oracle"].get<std::string>() << ": " << tuple_text(e["oracle_betti"].get<Betti>())
           << (e["match"].get<bool>() ? "  match" : "  MISMATCH") << "\n";
  }
  if (oracles.empty()) o.text << "  no independent oracle applies to this input\n";
  o.result["oracles"] = std::move(oracles);
  o.result["oracle_match"] = match;
  o.verified = match;
}

void cmd_hc(Context& c, Outcome& o) {
  const auto r = hc(c.algebra(), c.job.max_degree, c.piece(), c.options);
  o.result = to_json(r);
  o.result["exact_betti"] = r.exact_betti();
  render_homology(o.text, r, "HC");
  if (!c.job.oracle) return;
  const auto l = lambda_complex_hc(c.algebra(), c.job.max_degree, c.piece(), c.options);
  Json e = oracle_entry("lambda complex", l.homology.exact_betti(), r.exact_betti());
  o.text << "  oracle lambda complex: " << tuple_text(l.homology.exact_betti())
         << (e["match"].get<bool>() ? "  match" : "  MISMATCH") << "\n";
  o.verified = e["match"].get<bool>();
  o.result["oracles"] = Json::array({e});
  o.result["oracle_match"] = o.verified;
}

void cmd_lambda_compare(Context& c, Outcome& o) {
  const Betti total = hc(c.algebra(), c.job.max_degree, c.piece(), c.options).exact_betti();
  const auto l = lambda_complex_hc(c.algebra(), c.job.max_degree, c.piece(), c.options);
  const Betti lambda = l.homology.exact_betti();
  o.result = {{"theory", "hc_lambda"},
              {"algebra", c.algebra().label()},
              {"hc", total},
              {"hc_lambda", lambda},
              {"lambda_quotient_dims", l.quotient_dims},
              {"rank_one_minus_lambda", l.rank_one_minus_lambda},
              {"match", total == lambda}};
  o.text << "HC(" << c.algebra().label() << ")\n  (b,B) total complex: " << tuple_text(total)
         << "\n  lambda complex:      " << tuple_text(lambda) << "\n  quotient dims:       " << tuple_text(l.quotient_dims)
         << "\n  " << (total == lambda ? "match" : "MISMATCH") << "\n";
  o.verified = total == lambda && l.differential_squared_zero;
}

void cmd_bar(Context& c, Outcome& o) {
  const auto b = bar_acyclicity_check(c.algebra(), c.job.max_degree, c.piece(), c.options);
  Json acyclic = Json::array();
  for (std::size_t k = 1; k < b.acyclic.size(); ++k) acyclic.push_back(static_cast<bool>(b.acyclic[k]));
  o.result = {{"algebra", b.algebra},
              {"cokernel_dim0", b.cokernel_dim0},
              {"betti", b.betti},
              {"acyclic_from_degree_1", acyclic},
              {"h_unital", b.h_unital}};
  o.text << "bar complex of " << b.algebra << "\n  H_0 = A/A.A: dim " << b.cokernel_dim0 << "\n";
  for (std::size_t k = 1; k < b.betti.size(); ++k) o.text << "  H_" << k << ": " << b.betti[k] << "\n";
  o.text << "  " << (b.h_unital ? "acyclic in degrees 1.." + std::to_string(b.betti.size() - 1) : "not acyclic") << "\n";
}

void cmd_hkr(Context& c, Outcome& o) {
  const Algebra& a = c.algebra();
  if (!a.monomials() || !a.is_graded_truncated()) {
    throw Error(ErrorKind::InvalidArgument, "hkr needs a graded polynomial input (poly:n[:D])", a.label());
  }
  const int n = static_cast<int>(a.monomials()->front().size());
  const int D = c.job.piece.value_or(*a.degree_cap());
  Json rows = Json::array();
  o.text << "HKR for Q[x_1..x_" << n << "]\n     k     D  betti  dim Omega\n";
  bool all = true;
  for (const auto& r : hkr_check(n, static_cast<int>(c.job.max_degree), D, c.options)) {
    rows.push_back({{"k", r.k}, {"D", r.D}, {"betti", r.betti}, {"kahler_dim", r.kahler_dim}, {"equal", r.equal}});
    o.text << "  " << std::setw(4) << r.k << "  " << std::setw(4) << r.D << "  " << std::setw(5) << r.betti << "  "
           << std::setw(9) << r.kahler_dim << (r.equal ? "" : "  MISMATCH") << "\n";
    all = all && r.equal;
  }
  o.result = {{"n", n}, {"k_max", c.job.max_degree}, {"D_max", D}, {"rows", rows}, {"all_equal", all}};
  o.verified = all;
}

void cmd_localize(Context& c, Outcome& o) {
  const Algebra& a = c.algebra();
  const std::size_t N = c.job.max_degree;
  SubcomplexSpec J;
  bool jet = false;
  if (a.components()) {
    J = mixed_subcomplex(a, N);
  } else if (a.monomials() && !a.is_graded_truncated()) {
    J = jet_diagonal_subcomplex(a, N);
    jet = true;
  } else {
    throw Error(ErrorKind::InvalidArgument, "localize needs a product algebra or a jet algebra", a.label());
  }
  const auto st = check_boundary_stability(a, J);
  o.result["algebra"] = a.label();
  o.result["subcomplex"] = J.name;
  o.result["b_stable"] = st.stable;
  o.text << "subcomplex " << J.name << ": " << (st.stable ? "b-stable" : "NOT b-stable") << "\n";
  if (!st.stable) {
    o.result["witness_degree"] = *st.degree;
    o.verified = false;
    return;
  }
  const auto cr = verify_contractible(a, J);
  const auto q = diagonal_quotient(a, J, c.options);
  o.result["dim_C"] = q.dim_C;
  o.result["dim_J"] = q.dim_J;
  o.result["dim_E"] = q.dim_E;
  o.result["betti_J"] = cr.betti;
  o.result["lhs"] = q.betti_C;
  o.result["rhs"] = q.betti_E;
  o.result["induced_rank"] = q.induced_rank;
  Betti compared;
  for (std::size_t k = 0; k < q.betti_C.size(); ++k) compared.push_back(k);
  o.result["degrees_compared"] = compared;
  o.result["chain_map"] = q.chain_map;
  const bool match = q.betti_C == q.betti_E && q.induced_rank == q.betti_C;
  o.result["match"] = match;
  o.text << "  dim C: " << tuple_text(q.dim_C) << "\n  dim J: " << tuple_text(q.dim_J) << "\n  dim E: " << tuple_text(q.dim_E)
         << "\n  H(J):  " << tuple_text(cr.betti) << "\n  HH:    " << tuple_text(q.betti_C) << "\n  H(E):  "
         << tuple_text(q.betti_E) << "\n";
  if (jet) {
    // Only degree 0 is a claim at finite truncation; higher degrees are data.
    o.verified = q.chain_map && q.betti_E[0] == q.betti_C[0];
    o.text << "  degree 0 " << (q.betti_E[0] == q.betti_C[0] ? "matches" : "DIFFERS") << "; degrees >= 1 reported only\n";
  } else {
    o.verified = q.chain_map && match && cr.contractible;
    o.text << "  " << (o.verified ? "projection is a quasi-isomorphism" : "projection is NOT a quasi-isomorphism") << "\n";
  }
}

void cmd_orbits(Context& c, Outcome& o) {
  if (!c.in().groupoid) throw Error(ErrorKind::InvalidArgument, "orbits needs a groupoid input", c.job.input);
  const GroupoidSpec& g = *c.in().groupoid;
  const auto s = stalk_reduction_check(g, c.job.max_degree, c.options);
  const auto orbits = orbit_decomposition(g);
  Json list = Json::array();
  std::string verdict = "A ≅ ";
  o.text << "groupoid " << g.name << ": " << g.objects.size() << " objects, " << g.arrows.size() << " arrows, "
         << orbits.size() << (orbits.size() == 1 ? " orbit\n" : " orbits\n");
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    const auto& red = s.orbits[i];
    const std::string field = red.isotropy_order == 1 ? "ℚ" : "ℚ[" + orbits[i].isotropy.name + "]";
    const std::string block = red.orbit_size == 1 ? field : "M_" + std::to_string(red.orbit_size) + "(" + field + ")";
    verdict += (i ? " × " : "") + block;
    Json objs = Json::array();
    for (auto x : orbits[i].objects) objs.push_back(g.objects[x]);
    list.push_back({{"base_point", red.base_point},
                    {"objects", objs},
                    {"isotropy_order", red.isotropy_order},
                    {"isotropy_trivial", red.isotropy_order == 1},
                    {"matrix_isomorphism", red.matrix_isomorphism},
                    {"hh_isotropy", red.hh_isotropy}});
    o.text << "  orbit of " << red.base_point << ": size " << red.orbit_size << ", isotropy order " << red.isotropy_order
           << (red.matrix_isomorphism ? ", block = " : ", block NOT isomorphic to ") << block << "\n";
  }
  o.result = {{"groupoid", g.name},          {"orbits", list},
              {"morita_verdict", verdict},   {"lhs", s.lhs},
              {"rhs", s.rhs},                {"degrees_compared", s.degrees_compared},
              {"match", s.match},            {"block_decomposition", s.block_decomposition}};
  o.text << "  Morita verdict: " << verdict << "\n  HH(A): " << tuple_text(s.lhs) << "\n  sum over orbits: " << tuple_text(s.rhs)
         << (s.match ? "  match" : "  MISMATCH") << "\n";
  bool iso = true;
  for (const auto& r : s.orbits) iso = iso && r.matrix_isomorphism;
  o.verified = s.match && s.block_decomposition && iso;
}

void cmd_sbi(Context& c, Outcome& o) {
  const auto s = sbi_check(c.algebra(), c.job.max_degree, c.options);
  Json nodes = Json::array();
  o.text << "SBI sequence for " << s.algebra << "\n  HH: " << tuple_text(s.hh) << "\n  HC: " << tuple_text(s.hc)
         << "\n  node     dim = rank in + rank out\n";
  for (const auto& n : s.nodes) {
    nodes.push_back({{"group", n.group}, {"dim", n.dim}, {"rank_in", n.rank_in}, {"rank_out", n.rank_out}, {"exact", n.exact}});
    o.text << "  " << std::left << std::setw(7) << n.group << std::right << std::setw(4) << n.dim << " = " << n.rank_in
           << " + " << n.rank_out << (n.exact ? "" : "  NOT EXACT") << "\n";
  }
  o.result = {{"algebra", s.algebra}, {"hh", s.hh},       {"hc", s.hc},     {"rank_I", s.rank_I},
              {"rank_S", s.rank_S},   {"rank_B", s.rank_B}, {"nodes", nodes}, {"exact", s.exact}};
  o.verified = s.exact;
}

void cmd_wdr(Context& c, Outcome& o) {
  const Algebra& a = c.algebra();
  if (!a.monomials() || !a.is_graded_truncated()) {
    throw Error(ErrorKind::InvalidArgument, "wdr needs a graded polynomial input (poly:n[:D])", a.label());
  }
  const int n = static_cast<int>(a.monomials()->front().size());
  const int D = c.job.piece.value_or(*a.degree_cap());
  const auto w = whitney_de_rham(n, static_cast<int>(c.job.max_degree), D);
  Json rows = Json::array();
  o.text << "de Rham complex of Q[x_1..x_" << n << "]\n     D     k   dim  rank d  H^k\n";
  for (const auto& r : w.rows) {
    rows.push_back({{"D", r.D}, {"k", r.k}, {"dim", r.dim}, {"rank_d", r.rank_d}, {"betti", r.betti}});
    o.text << "  " << std::setw(4) << r.D << "  " << std::setw(4) << r.k << "  " << std::setw(4) << r.dim << "  "
           << std::setw(6) << r.rank_d << "  " << std::setw(3) << r.betti << "\n";
  }
  o.result = {{"theory", "wdr"},   {"n", n},
              {"rows", rows},      {"d_squared_zero", w.d_squared_zero},
              {"euler", w.euler},  {"poincare", w.poincare}};
  o.text << "  d^2 = 0: " << (w.d_squared_zero ? "yes" : "NO") << ", Euler characteristics " << "(";
  for (std::size_t i = 0; i < w.euler.size(); ++i) o.text << (i ? ", " : "") << w.euler[i];
  o.text << ")\n";
  o.verified = w.d_squared_zero && w.poincare;
}

void cmd_verify(Context& c, Outcome& o, Json& run_stats) {
  const auto s = run_suite(c.job.profile, c.options, {});
  const Json full = to_json(s, true);
  o.result = strip_run_stats(full);
  run_stats["suite"] = full["run_stats"];
  o.text << "verify-all (" << to_string(s.profile) << ")\n";
  for (const auto& cr : s.criteria) {
    o.text << "  [" << (cr.passed() ? "PASS" : "FAIL") << "] " << std::setw(2) << cr.id << " " << cr.title << "\n";
    for (const auto& k : cr.checks) {
      if (!k.passed) o.text << "         " << k.name << ": expected " << k.expected.dump() << ", computed " << k.computed.dump() << "\n";
    }
  }
  o.verified = s.passed();
}

Json job_json(const JobSpec& job) {
  Json j = {{"command", job.command},
            {"input", job.input.empty() ? Json(nullptr) : Json(job.input)},
            {"max_degree", job.max_degree},
            {"graded_piece", job.piece ? Json(*job.piece) : Json(nullptr)},
            {"oracle", job.oracle},
            {"max_dim", job.max_dim}};
  if (job.command == "verify-all") j["profile"] = to_string(job.profile);
  return j;
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> list = {"hh",  "hc",     "bar-check",      "hkr", "localize",
                                                "orbits", "sbi", "lambda-compare", "wdr", "verify-all"};
  return list;
}

RunReport run(const JobSpec& job) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport report;
  Json& j = report.json;
  j["schema"] = kReportSchema;
  j["engine"] = engine_version();
  j["job"] = job_json(job);
  Json run_stats = Json::object();

  std::optional<RankCache> cache;
  try {
    if (std::find(commands().begin(), commands().end(), job.command) == commands().end()) {
      throw Error(ErrorKind::InvalidArgument, "unknown command", job.command);
    }
    if (job.max_degree < 1) throw Error(ErrorKind::InvalidArgument, "--max-degree must be >= 1", "0");
    Context ctx{job, {}, std::nullopt};
    ctx.options.max_dim = job.max_dim;
    if (auto path = RankCache::default_path()) {
      cache.emplace(*path);
      ctx.options.cache = &*cache;
    }
    Outcome o;
    if (job.command == "hh") cmd_hh(ctx, o);
    else if (job.command == "hc") cmd_hc(ctx, o);
    else if (job.command == "bar-check") cmd_bar(ctx, o);
    else if (job.command == "hkr") cmd_hkr(ctx, o);
    else if (job.command == "localize") cmd_localize(ctx, o);
    else if (job.command == "orbits") cmd_orbits(ctx, o);
    else if (job.command == "sbi") cmd_sbi(ctx, o);
    else if (job.command == "lambda-compare") cmd_lambda_compare(ctx, o);
    else if (job.command == "wdr") cmd_wdr(ctx, o);
    else cmd_verify(ctx, o, run_stats);

    if (ctx.input) {
      j["input_hash"] = content_hash(ctx.input->groupoid ? groupoid_to_json(*ctx.input->groupoid).dump()
                                                         : algebra_to_json(ctx.input->algebra).dump());
    }
    j["result"] = std::move(o.result);
    j["verified"] = o.verified;
    report.exit_code = o.verified ? kOk : kVerificationFailed;
    report.text = o.text.str();
    if (cache) cache->flush();
  } catch (const Error& e) {
    Json err = {{"kind", to_string(e.kind())}, {"message", e.what()}, {"witness", e.witness()}};
    std::ostringstream msg;
    msg << "error: " << e.what() << "\n";
    if (const auto* p = dynamic_cast<const ParseError*>(&e)) {
      err["line"] = p->line();
      err["column"] = p->column();
    }
    if (const auto* r = dynamic_cast<const ResourceLimitError*>(&e)) {
      err["requested"] = r->requested();
      err["ceiling"] = r->ceiling();
      report.exit_code = kResourceLimit;
    } else {
      report.exit_code = kInputError;
    }
    j["error"] = std::move(err);
    report.text = msg.str();
  }
  run_stats["wall_time_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  run_stats["cache_hits"] = cache ? cache->hits() : 0;
  run_stats["cache_misses"] = cache ? cache->misses() : 0;
  j["run_stats"] = std::move(run_stats);
  return report;
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"hochlab: exact Hochschild and cyclic homology of finite-dimensional algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(engine_version()));

  JobSpec job;
  bool json_stdout = false;
  bool quick = false, full = false;
  std::string profile;
  const std::map<std::string, std::string> help = {
      {"hh", "Hochschild homology"},
      {"hc", "cyclic homology from the (b,B) total complex"},
      {"bar-check", "homology of the bar complex (H-unitality)"},
      {"hkr", "graded HH of a polynomial algebra against Kahler forms"},
      {"localize", "diagonal localization for product and jet algebras"},
      {"orbits", "orbit decomposition and stalk reduction of a groupoid"},
      {"sbi", "exactness of the SBI sequence by rank bookkeeping"},
      {"lambda-compare", "cyclic homology from the lambda complex against (b,B)"},
      {"wdr", "de Rham cohomology of a polynomial algebra, piece by piece"},
      {"verify-all", "run the verification suite"},
  };
  for (const auto& name : commands()) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    sub->add_option("-i,--input", job.input, "builtin name (jet:1:2, group:S3, poly:2, ...) or JSON spec path");
    sub->add_option("-N,--max-degree", job.max_degree, "top chain degree N (homology exact below N)")->check(CLI::PositiveNumber);
    sub->add_option("-D,--piece", job.piece, "graded piece (total degree)");
    sub->add_flag("--oracle", job.oracle, "also run the independent oracle and report a match verdict");
    sub->add_option("-o,--output", job.output, "write the JSON report here");
    sub->add_flag("--json", json_stdout, "print the JSON report instead of the table");
    sub->add_option("--max-dim", job.max_dim, "ceiling on any chain space dimension");
    if (name == "verify-all") {
      sub->add_option("--profile", profile, "quick or full")->check(CLI::IsMember({"quick", "full"}));
      sub->add_flag("--quick", quick, "same as --profile quick");
      sub->add_flag("--full", full, "same as --profile full");
    }
    sub->callback([&job, name] { job.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  job.profile = (full || profile == "full") && !quick ? Profile::Full : Profile::Quick;

  const RunReport r = run(job);
  if (!job.output.empty()) {
    std::ofstream f(job.output);
    if (!f) {
      err << "error: cannot write " << job.output << "\n";
      return kInputError;
    }
    f << r.json.dump(2) << "\n";
  }
  if (json_stdout) {
    out << r.json.dump(2) << "\n";
  } else {
    (r.exit_code == kInputError || r.exit_code == kResourceLimit ? err : out) << r.text;
  }
  return r.exit_code;
}

}  // namespace hochlab::cli
