#include "commands.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>

#include "siegel/verify.hpp"

namespace siegel::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr double kRelationTol = 1e-9;
constexpr double kDTableTol = 1e-8;
constexpr double kWieberTol = 1e-7;
constexpr double kDetSymeSpreadTol = 1e-6;

std::string mode_name(CoeffMode m) {
  switch (m) {
    case CoeffMode::Rational: return "q";
    case CoeffMode::Prime1: return "p1";
    case CoeffMode::Prime2: return "p2";
    case CoeffMode::DualPrime: return "dual";
  }
  return "?";
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json series_json(const HilbertSeries& s) {
  return {{"numerator", s.numerator_string()},
          {"denominator_exponent", s.denominator_exponent()},
          {"text", s.to_string()}};
}

json manifest_json(const RunManifest& m) {
  json j = {{"command", m.command},  {"target", m.target},         {"seed", m.seed},
            {"points", m.points},    {"radius", m.radius},         {"eps", m.eps},
            {"coeff_mode", mode_name(m.coeff_mode)}, {"jobs", m.jobs}};
  j["cache_dir"] = m.cache_dir ? json(*m.cache_dir) : json(nullptr);
  return j;
}

// Collects named pass/fail checks; the first failure names the exit reason.
class Checks {
 public:
  void add(const std::string& name, bool ok) {
    list_.push_back({{"name", name}, {"pass", ok}});
    if (!ok && !first_failure_) first_failure_ = name;
  }
  bool ok() const { return !first_failure_; }
  json to_json() const { return list_; }
  const std::optional<std::string>& first_failure() const { return first_failure_; }

 private:
  json list_ = json::array();
  std::optional<std::string> first_failure_;
};

PipelineOptions pipeline_options(const RunManifest& m, std::ostream& err) {
  PipelineOptions o;
  o.cache_dir = m.cache_dir;
  if (m.verbose) o.log = [&err](const std::string& s) { err << s << '\n'; };
  return o;
}

std::vector<ThetaValues> points(const RunManifest& m) {
  return sample_values(m.seed, m.points, EvalConfig{m.radius, m.eps});
}

// ---------------------------------------------------------------------------
// Catalogs

json chars_catalog(Checks& checks) {
  json j;
  json ev = json::array(), od = json::array();
  for (int i = 1; i <= 10; ++i) ev.push_back({{"label", i}, {"char", even(i).to_string()}, {"even", even(i).is_even()}});
  for (int i = 1; i <= 6; ++i) {
    od.push_back({{"label", i},
                  {"char", odd(i).to_string()},
                  {"even", odd(i).is_even()},
                  {"five_term_decompositions", five_term_decompositions(i).size()}});
  }
  j["even"] = ev;
  j["odd"] = od;
  json quads = json::array();
  for (int i = 1; i <= 6; ++i)
    for (int j2 = i + 1; j2 <= 6; ++j2) quads.push_back({{"pair", {i, j2}}, {"quadruple", azygetic_quadruple(i, j2)}});
  j["azygetic_quadruples"] = quads;
  j["symplectic_permutations"] = symplectic_permutations().size();
  bool ok = true;
  for (int i = 1; i <= 10; ++i) ok = ok && even(i).is_even();
  for (int i = 1; i <= 6; ++i) ok = ok && !odd(i).is_even() && five_term_decompositions(i).size() == 12;
  checks.add("characteristic counts", ok);
  checks.add("symplectic group order 720", symplectic_permutations().size() == 720);
  return j;
}

json riemann_catalog(const RunManifest& m, Checks& checks) {
  const auto res = riemann_residuals(points(m));
  json entries = json::array();
  bool ok = true;
  for (std::size_t k = 0; k < res.size(); ++k) {
    const bool pass = res[k].max_residual < kRelationTol;
    ok = ok && pass;
    entries.push_back({{"index", k + 1},
                       {"text", riemann_text()[k]},
                       {"max_relative_residual", res[k].max_residual},
                       {"status", pass ? "verified" : "failed"}});
  }
  checks.add("Riemann quartics vanish numerically", ok && res.size() == 20);
  return {{"entries", entries}};
}

json dtable_catalog(const RunManifest& m, Checks& checks) {
  const auto certs = certify_dtable(points(m), kDTableTol);
  json entries = json::array();
  bool ok = true;
  for (const auto& c : certs) {
    ok = ok && c.agrees;
    const auto& e = d_entry(c.i, c.j);
    entries.push_back({{"pair", {c.i, c.j}},
                       {"quadruple", e.quad},
                       {"sign", e.sign},
                       {"det_over_pi2_product", complex_json(c.mean_ratio)},
                       {"spread", c.spread},
                       {"status", c.agrees ? "verified" : "failed"}});
  }
  checks.add("D-table signs", ok && certs.size() == 15);
  return {{"normalization", "det(grad_i, grad_j) = D(i,j) * (pi i)^2 * product; the printed pi^-2 does not fit"},
          {"entries", entries}};
}

template <class F>
json relation_catalog(ThetaRing<F>& ring, const std::vector<RelationRecord<F>>& recs, const RunManifest& m,
                      const std::string& name, Checks& checks) {
  const auto pts = points(m);
  json entries = json::array();
  bool ok = true;
  for (const auto& r : recs) {
    const bool oracle = ring.chi5_oracle(r.element);
    const double res = element_residual(r.label(), r.element, pts).max_residual;
    const bool pass = oracle && res < kRelationTol;
    ok = ok && pass;
    entries.push_back({{"indices", r.indices},
                       {"signs", r.signs},
                       {"degree", *r.element.degree()},
                       {"text", to_string(r.element)},
                       {"chi5_oracle", oracle},
                       {"max_relative_residual", res},
                       {"status", pass ? "verified" : "failed"}});
  }
  checks.add(name + " relations certified", ok);
  return {{"count", recs.size()}, {"entries", entries}};
}

template <class F>
json sextet_catalog(ThetaRing<F>& ring, Checks& checks) {
  const auto& d = ring.sextets();
  json blocks = json::array();
  const Sextet example_block{{SForm{1, {3, 5, 6, 8, 9}}, SForm{2, {1, 2, 4, 8, 9}}, SForm{3, {1, 3, 4, 5, 10}},
                            SForm{4, {2, 5, 7, 8, 10}}, SForm{5, {1, 2, 3, 6, 7}}, SForm{6, {4, 6, 7, 9, 10}}}};
  bool has_example = false;
  for (std::size_t id = 0; id < d.sextets.size(); ++id) {
    json forms = json::array();
    for (const auto& f : d.sextets[id].forms) forms.push_back({{"odd", f.odd}, {"evens", f.evens}});
    has_example = has_example || d.sextets[id] == example_block;
    blocks.push_back({{"id", id + 1}, {"forms", forms}});
  }
  checks.add("12 sextets, unique partition", d.sextets.size() == 12 && d.exact_covers == 1);
  checks.add("example block present", has_example);
  return {{"balanced_candidates", d.balanced},
          {"rule_consistent", d.rule_consistent},
          {"oracle_certified", d.oracle_certified},
          {"exact_covers", d.exact_covers},
          {"blocks", blocks}};
}

template <class F>
json catalog(const RunManifest& m, std::ostream& err, Checks& checks) {
  ThetaRing<F> ring(pipeline_options(m, err));
  if (m.target == "reld") return relation_catalog(ring, ring.rel_d(), m, "RelD", checks);
  if (m.target == "extra") return relation_catalog(ring, ring.extr_a(), m, "ExtrA", checks);
  if (m.target == "extrb") return relation_catalog(ring, ring.extr_b(), m, "ExtrB", checks);
  if (m.target == "sextets") return sextet_catalog(ring, checks);
  throw std::invalid_argument("unknown catalog " + m.target);
}

// ---------------------------------------------------------------------------
// Verification suites

json numeric_suite(const RunManifest& m, Checks& checks) {
  const auto pts = points(m);
  json j;
  double worst = 0;
  for (const auto& r : riemann_residuals(pts)) worst = std::max(worst, r.max_residual);
  j["riemann_max_residual"] = worst;
  checks.add("Riemann quartics < 1e-9", worst < kRelationTol);

  ThetaRing<GF1> ring;
  std::map<std::string, double> by_kind;
  for (const auto& r : ring.all_relations()) {
    const double res = element_residual(r.label(), r.element, pts).max_residual;
    auto& w = by_kind[to_string(r.kind)];
    w = std::max(w, res);
  }
  for (const auto& [kind, w] : by_kind) {
    j[kind + "_max_residual"] = w;
    checks.add(kind + " < 1e-9", w < kRelationTol);
  }
  bool dt = true;
  for (const auto& c : certify_dtable(pts, kDTableTol)) dt = dt && c.agrees;
  checks.add("D-table signs", dt);
  j["min_imag_eigenvalue"] = [&] {
    double lo = INFINITY;
    for (const auto& p : pts) lo = std::min(lo, p.Z.min_imag_eigenvalue());
    return lo;
  }();
  return j;
}

template <class F>
json kernel_suite(const RunManifest& m, std::ostream& err, Checks& checks) {
  ThetaRing<F> ring(pipeline_options(m, err));
  json j;
  const auto hs = hilbert_series(ring.riemann_basis());
  json dims = json::array();
  bool agree = true;
  for (int d = 0; d <= 5; ++d) {
    const auto a = hs.coefficient(d), b = riemann_slice_dimension(d);
    agree = agree && a == b;
    dims.push_back({{"degree", d}, {"hilbert", a}, {"linear_algebra", b}});
  }
  j["riemann_dimensions"] = dims;
  checks.add("Riemann slice dimensions", agree);
  bool oracle = true, contained = true;
  const auto& K = ring.total_kernel();
  for (const auto& r : ring.all_relations()) {
    oracle = oracle && ring.chi5_oracle(r.element);
    contained = contained && contains(K, r.element);
  }
  checks.add("every catalog relation passes the chi5 oracle", oracle);
  checks.add("every catalog relation lies in the total kernel", contained);
  j["total_kernel_basis_size"] = K.size();
  j["quotient_series"] = series_json(ring.relation_quotient_series());
  return j;
}

template <class F>
json allrel_suite(const RunManifest& m, std::ostream& err, Checks& checks) {
  ThetaRing<F> ring(pipeline_options(m, err));
  const bool eq = ring.total_kernel() == ring.catalog_module();
  checks.add("total kernel equals the span of the 122 relations", eq);
  return {{"relations", ring.all_relations().size()},
          {"total_kernel_basis_size", ring.total_kernel().size()},
          {"catalog_basis_size", ring.catalog_module().size()},
          {"equal", eq}};
}

json wieber_suite(const RunManifest& m, Checks& checks) {
  const auto rep = wieber_checks(sample_siegel(m.seed, m.points), EvalConfig{m.radius, m.eps});
  json j;
  j["detsyme_mean"] = complex_json(rep.detsyme_mean);
  j["detsyme_relative_spread"] = rep.detsyme_relative_spread;
  j["max_bracket_residual"] = rep.max_bracket_residual;
  j["max_triple_relation_residual"] = rep.max_triple_relation_residual;
  j["max_jacobian_fd_error"] = rep.max_jacobian_fd_error;
  checks.add("bracket identity < 1e-7", rep.max_bracket_residual < kWieberTol);
  checks.add("triple bracket relation < 1e-7", rep.max_triple_relation_residual < kWieberTol);
  checks.add("DetSyme ratio constant", rep.detsyme_relative_spread < kDetSymeSpreadTol);
  json mods = json::array();
  for (const auto& p : {wieber_plus_presentation(), wieber_minus_presentation()}) {
    const auto r = wieber_module_report(p);
    mods.push_back({{"name", r.name},
                    {"generators", p.generator_names},
                    {"relations", p.relations},
                    {"series", series_json(r.series)},
                    {"dimensions", r.dims}});
    if (r.name == "M+") {
      checks.add("M+ degree 2 dimension 6", r.dims[2] == 6);
      const auto gb = wieber_basis<Rational>(p);
      const auto rel = parse_element<Rational>("{0; 0; 0; f3; -f2; f1}", 4, p.shifts, VarNames::second_kind());
      checks.add("f3 B12 - f2 B13 + f1 B23 is a relation", contains(gb, rel));
    } else {
      checks.add("M- dimensions 4, 15 in degrees 5, 6", r.dims[5] == 4 && r.dims[6] == 15);
    }
  }
  j["modules"] = mods;
  return j;
}

template <class F>
json main_theorem_report(ThetaRing<F>& ring, Checks& checks) {
  const auto rep = ring.verify_main_theorem();
  json j;
  j["series"] = series_json(rep.series);
  j["shift"] = rep.series.shift();
  j["coefficients"] = rep.coefficients;
  j["expected_series"] = series_json(main_theorem_series());
  j["first_mismatch_degree"] = rep.first_mismatch ? json(*rep.first_mismatch) : json(nullptr);
  j["orbit_size"] = rep.orbit_size;
  j["orbit_candidates_in_module"] = ring.orbit_extr_h().candidates_in_module;
  j["chi5M_basis_size"] = ring.chi5_M().size();
  checks.add("series equals the MainT rational function", rep.series_matches);
  const auto expected8 = main_theorem_coefficients();
  checks.add("coefficients t^1..t^8",
             std::equal(expected8.begin(), expected8.end(), rep.coefficients.begin()));
  checks.add("series coefficients nonnegative", rep.nonnegative);
  checks.add("ExtrH lies in chi5 M", rep.extr_h_in_chi5M);
  checks.add("ExtrH outside chi5 N", rep.extr_h_outside_N);
  checks.add("orbit size 360", rep.orbit_size == 360);
  checks.add("generated module inside chi5 M", rep.generated_in_chi5M);
  checks.add("chi5 M inside generated module", rep.chi5M_in_generated);
  return j;
}

template <class F>
json symbolic_run(const RunManifest& m, std::ostream& err, Checks& checks) {
  if (m.command == "catalog") return catalog<F>(m, err, checks);
  if (m.command == "main-theorem") {
    ThetaRing<F> ring(pipeline_options(m, err));
    return main_theorem_report(ring, checks);
  }
  if (m.target == "kernel") return kernel_suite<F>(m, err, checks);
  if (m.target == "allrel") return allrel_suite<F>(m, err, checks);
  throw std::invalid_argument("no symbolic step for " + m.command + " " + m.target);
}

// Runs a symbolic step in the requested field(s); in dual mode both primes run
// and every basis must agree.
json symbolic(const RunManifest& m, std::ostream& err, Checks& checks) {
  switch (m.coeff_mode) {
    case CoeffMode::Rational: return symbolic_run<Rational>(m, err, checks);
    case CoeffMode::Prime1: return symbolic_run<GF1>(m, err, checks);
    case CoeffMode::Prime2: return symbolic_run<GF2>(m, err, checks);
    case CoeffMode::DualPrime: break;
  }
  Checks second;
  json a = symbolic_run<GF1>(m, err, checks);
  json b = symbolic_run<GF2>(m, err, second);
  checks.add("second prime checks", second.ok());
  const bool full = m.command == "main-theorem";
  ThetaRing<GF1> r1(pipeline_options(m, err));
  ThetaRing<GF2> r2(pipeline_options(m, err));
  const bool same = fingerprints(r1, full) == fingerprints(r2, full);
  checks.add("dual-prime agreement", same && a == b);
  return {{GF1::name(), a}, {GF2::name(), b}};
}

json dispatch(const RunManifest& m, std::ostream& err, Checks& checks) {
  if (m.command == "catalog") {
    if (m.target == "chars") return chars_catalog(checks);
    if (m.target == "riemann") return riemann_catalog(m, checks);
    if (m.target == "dtable") return dtable_catalog(m, checks);
    return symbolic(m, err, checks);
  }
  if (m.command == "main-theorem") return symbolic(m, err, checks);
  // verify
  if (m.target == "numeric") return numeric_suite(m, checks);
  if (m.target == "wieber") return wieber_suite(m, checks);
  if (m.target == "kernel" || m.target == "allrel") return symbolic(m, err, checks);
  if (m.target == "all") {
    json j;
    for (const char* suite : {"numeric", "kernel", "allrel", "wieber"}) {
      RunManifest sub = m;
      sub.target = suite;
      j[suite] = dispatch(sub, err, checks);
    }
    return j;
  }
  throw std::invalid_argument("unknown suite " + m.target);
}

}  // namespace

int execute(const RunManifest& m, std::string& out, std::ostream& err) {
  json report = {{"schema", 1}, {"manifest", manifest_json(m)}};
  Checks checks;
  int code = kExitPass;
  try {
    report["result"] = dispatch(m, err, checks);
    code = checks.ok() ? kExitPass : kExitFail;
  } catch (const std::exception& e) {
    report["error"] = e.what();
    err << "error: " << e.what() << '\n';
    code = kExitError;
  }
  report["checks"] = checks.to_json();
  report["pass"] = code == kExitPass;
  if (checks.first_failure()) {
    report["first_failure"] = *checks.first_failure();
    err << "failed: " << *checks.first_failure() << '\n';
  }
  out = report.dump(2) + "\n";
  return code;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vector-valued Siegel modular forms of genus two: catalogs, kernels, Hilbert series"};
  app.require_subcommand(1);
  RunManifest m;
  std::string mode = "q";
  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", m.seed, "seed for sample points");
    sub->add_option("--points", m.points, "number of sample points")->check(CLI::PositiveNumber);
    sub->add_option("--radius", m.radius, "lattice cutoff (max norm)")->check(CLI::PositiveNumber);
    sub->add_option("--eps", m.eps, "target truncation error")->check(CLI::PositiveNumber);
    sub->add_option("--coeff-mode", mode, "coefficients: q, p1, p2 or dual")
        ->check(CLI::IsMember({"q", "p1", "p2", "dual"}));
    sub->add_option("--cache-dir", m.cache_dir, "directory for cached bases");
    sub->add_option("--out", m.out, "write the JSON report here instead of stdout");
    sub->add_option("--jobs", m.jobs, "maximum concurrent tasks")->check(CLI::PositiveNumber);
    sub->add_flag("-v,--verbose", m.verbose, "log pipeline stages to stderr");
  };
  auto* cat = app.add_subcommand("catalog", "derive and print a catalog");
  cat->add_option("which", m.target)
      ->required()
      ->check(CLI::IsMember({"chars", "riemann", "dtable", "reld", "extra", "extrb", "sextets"}));
  common(cat);
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", m.target)->required()->check(CLI::IsMember({"numeric", "kernel", "allrel", "wieber", "all"}));
  common(ver);
  auto* mt = app.add_subcommand("main-theorem", "full pipeline and the Hilbert function of the module");
  common(mt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitError;
  }
  m.command = app.get_subcommands().front()->get_name();
  m.coeff_mode = mode == "p1"   ? CoeffMode::Prime1
                 : mode == "p2" ? CoeffMode::Prime2
                 : mode == "dual" ? CoeffMode::DualPrime
                                  : CoeffMode::Rational;
  std::string report;
  const int code = execute(m, report, err);
  if (m.out) {
    std::ofstream f(*m.out);
    if (!f) {
      err << "cannot write " << *m.out << '\n';
      return kExitError;
    }
    f << report;
  } else {
    out << report;
  }
  return code;
}

}  // namespace siegel::cli
