// Command-line front door: JSON reports on stdout, a human summary on
// stderr. Exit codes: 0 success / witness found, 1 not found within
// budget, 2 invalid input.

#include "qramsey/coloring.hpp"
#include "qramsey/identities.hpp"
#include "qramsey/patterns.hpp"
#include "qramsey/pipeline.hpp"
#include "qramsey/report.hpp"
#include "qramsey/shift_engine.hpp"
#include "qramsey/stabilizer.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace qramsey;

constexpr int kExitFound = 0;
constexpr int kExitNotFound = 1;
constexpr int kExitInvalid = 2;

std::vector<PosRational> parse_q_list(const std::string& text) {
  std::vector<PosRational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(PosRational::parse(item));
  if (out.empty()) throw std::invalid_argument("--q: empty list");
  return out;
}

int emit(ReportBuilder& report, bool found, const std::string& summary) {
  report.found(found);
  std::cout << report.str();
  std::cerr << summary << "\n";
  return found ? kExitFound : kExitNotFound;
}

struct CommonFlags {
  std::string coloring_spec = R"({"kind":"val2_parity"})";
  long budget_candidates = 2000000;
  long budget_seconds = 120;
  long height = 64;
  std::uint64_t seed = 7;
  int jobs = 1;
  std::string q_list = "1";

  SearchBudget budget() const { return SearchBudget{height, budget_candidates, budget_seconds}; }
  void attach(CLI::App* cmd) {
    cmd->add_option("--coloring", coloring_spec, "coloring spec as JSON");
    cmd->add_option("--budget-candidates", budget_candidates, "max candidates examined");
    cmd->add_option("--budget-seconds", budget_seconds, "wall-clock budget");
    cmd->add_option("--height", height, "height / window bound for searched values");
    cmd->add_option("--seed", seed, "seed for randomized suites");
    cmd->add_option("--jobs", jobs, "worker threads for parallelizable scans");
    cmd->add_option("--q", q_list, "dilation test set, e.g. \"1,2,1/2\"");
  }
  Json params() const {
    return Json{{"coloring", Json::parse(coloring_spec)},
                {"budget_candidates", budget_candidates},
                {"budget_seconds", budget_seconds},
                {"height", height},
                {"seed", seed},
                {"jobs", jobs},
                {"q", q_list}};
  }
};

int run_verify_identities(const CommonFlags& flags, int cases) {
  ReportBuilder report("verify-identities",
                       Json{{"seed", flags.seed}, {"cases", cases}});
  auto suites = run_identity_suites(flags.seed, cases);
  Json detail = Json::array();
  bool all = true;
  for (const auto& s : suites) {
    report.check(s.name, s.ok());
    detail.push_back(Json{{"name", s.name}, {"cases", s.cases}, {"passes", s.passes}});
    all = all && s.ok();
  }
  report.field("suites", detail);
  return emit(report, all, all ? "all identity suites passed" : "identity suite FAILED");
}

int run_search_schur(const CommonFlags& flags, const std::string& mode, int r, long n) {
  ReportBuilder report("search schur", flags.params());
  if (mode == "threshold") {
    auto res = schur_threshold(r);
    report.witness(Json{{"threshold", res.threshold}, {"certificate", res.certificate}});
    // the certificate genuinely avoids monochromatic triples
    IntColoring cert = [&res](long v) -> std::optional<int> {
      if (v < 1 || v > static_cast<long>(res.certificate.size())) return std::nullopt;
      return res.certificate[static_cast<std::size_t>(v - 1)];
    };
    report.check("certificate-avoids", !schur_witness(cert, res.threshold - 1).has_value());
    report.field("value", res.threshold);
    return emit(report, true, "schur threshold r=" + std::to_string(r) + " is " +
                                  std::to_string(res.threshold));
  }
  Coloring c = parse_coloring(flags.coloring_spec);
  auto w = schur_witness(on_naturals(c), n);
  if (!w) return emit(report, false, "no schur witness in [1.." + std::to_string(n) + "]");
  report.witness(Json{{"x", w->x}, {"y", w->y}});
  report.check("reverify", verify_schur(on_naturals(c), *w));
  return emit(report, true, "schur witness (" + std::to_string(w->x) + "," + std::to_string(w->y) + ")");
}

int run_search_folkman(const CommonFlags& flags, int k) {
  ReportBuilder report("search folkman", flags.params());
  Coloring c = parse_coloring(flags.coloring_spec);
  auto budget = flags.budget();
  auto m = folkman_witness(on_naturals(c), k, budget);
  if (!m) return emit(report, false, "no folkman vector within budget");
  Json sums = Json::array();
  for (long s : folkman_sums(*m)) sums.push_back(s);
  report.witness(Json{{"m", *m}, {"sums", sums}});
  report.check("reverify", verify_folkman(on_naturals(c), *m));
  return emit(report, true, "folkman vector found");
}

int run_search_vdw(const CommonFlags& flags, const std::string& mode, int k, int r, long n) {
  ReportBuilder report("search vdw", flags.params());
  if (mode == "threshold") {
    auto res = vdw_threshold(k, r);
    report.witness(Json{{"threshold", res.threshold}, {"certificate", res.certificate}});
    IntColoring cert = [&res](long v) -> std::optional<int> {
      if (v < 1 || v > static_cast<long>(res.certificate.size())) return std::nullopt;
      return res.certificate[static_cast<std::size_t>(v - 1)];
    };
    report.check("certificate-avoids", !vdw_witness(cert, k, res.threshold - 1).has_value());
    report.field("value", res.threshold);
    return emit(report, true, "W(" + std::to_string(k) + ";" + std::to_string(r) + ") = " +
                                  std::to_string(res.threshold));
  }
  Coloring c = parse_coloring(flags.coloring_spec);
  auto w = vdw_witness(on_naturals(c), k, n);
  if (!w) return emit(report, false, "no progression in [1.." + std::to_string(n) + "]");
  report.witness(Json{{"a", w->a}, {"d", w->d}});
  report.check("reverify", verify_vdw(on_naturals(c), k, *w));
  return emit(report, true, "progression a=" + std::to_string(w->a) + " d=" + std::to_string(w->d));
}

// lattice points embed into Q_+ by prime exponents, so a rational coloring
// induces a lattice coloring
LatticeColoring prime_embedded(const Coloring& c, std::size_t dim) {
  static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
  if (dim > 10) throw std::invalid_argument("pvdw: at most 10 lattice coordinates");
  Coloring copy = c;
  return [copy, dim](const LatticePoint& z) -> std::optional<BigInt> {
    PosRational v = PosRational::one();
    for (std::size_t i = 0; i < dim; ++i) {
      BigInt p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(primes[i]),
                    static_cast<unsigned long>(z[i].get_ui()));
      v = v * PosRational(p, BigInt(1));
    }
    auto col = copy(v);
    if (!col) return std::nullopt;
    return BigInt(*col);
  };
}

int run_search_pvdw(const CommonFlags& flags, const std::string& system_spec) {
  ReportBuilder report("search pvdw", flags.params());
  Json system = Json::parse(system_spec);
  if (!system.is_array() || system.empty())
    throw std::invalid_argument("pvdw: --system must be a nonempty JSON array of polynomials");

  std::vector<RatioPair> pairs;
  for (const auto& poly : system)
    for (const auto& term : poly) pairs.push_back(RatioPair::parse(term["pair"].get<std::string>()));
  RatioIndex omega(std::move(pairs));

  std::vector<GoodPolyVector> polys;
  for (const auto& poly : system) {
    GoodPolyVector p(omega);
    for (const auto& term : poly)
      p.add_term(RatioPair::parse(term["pair"].get<std::string>()), term["exp"].get<long>(),
                 NonnegRational::parse(term["coeff"].get<std::string>()));
    polys.push_back(std::move(p));
  }

  Coloring c = parse_coloring(flags.coloring_spec);
  LatticeColoring lat = prime_embedded(c, omega.size());
  auto budget = flags.budget();
  auto w = pvdw_witness(polys, lat, budget);
  if (!w) return emit(report, false, "no pvdw witness within budget");
  Json xs = Json::array();
  for (const auto& z : w->x) xs.push_back(z.get_str());
  report.witness(Json{{"x", xs}, {"d", w->d}, {"window", w->window}});
  report.check("reverify", verify_pvdw(polys, lat, *w));
  return emit(report, true, "pvdw witness at d=" + std::to_string(w->d));
}

int run_search_dut(const CommonFlags& flags, const std::string& mode, const std::string& v_text,
                   int n, int k) {
  ReportBuilder report("search dut", flags.params());
  if (mode == "threshold") {
    auto res = dut_threshold_22();
    report.field("value", res.threshold);
    SubsetColoring cert = [&res](const IndexSet& s) -> std::optional<int> {
      if (s.mask() >= res.certificate.size()) return std::nullopt;
      return res.certificate[s.mask()];
    };
    bool avoids = true;
    if (res.threshold > 1)
      avoids = !dut_witness(cert, res.threshold - 1, 2).has_value();
    report.check("certificate-avoids", avoids);
    report.witness(Json{{"threshold", res.threshold}});
    return emit(report, true, "dut threshold (r,k)=(2,2) is " + std::to_string(res.threshold));
  }
  Coloring c = parse_coloring(flags.coloring_spec);
  RatVector v = RatVector::parse(v_text);
  if (static_cast<int>(v.size()) != n)
    throw std::invalid_argument("dut: --v length must equal --n");
  SubsetColoring sub = [&c, &v](const IndexSet& s) { return c(s.product_over(v)); };
  auto blocks = dut_witness(sub, n, k);
  if (!blocks) return emit(report, false, "no block system at n=" + std::to_string(n));
  Json bj = Json::array();
  for (const auto& b : *blocks) bj.push_back(to_json(b));
  report.witness(Json{{"blocks", bj}});
  report.check("reverify", verify_dut(sub, *blocks));
  return emit(report, true, "dut blocks found");
}

int run_consistency(const CommonFlags& flags, const std::string& v_text, const std::string& scope) {
  ReportBuilder report("consistency", flags.params());
  Coloring c = parse_coloring(flags.coloring_spec);
  RatVector v = RatVector::parse(v_text);
  int n = static_cast<int>(v.size());
  std::vector<NFamily> fams;
  if (scope == "lower")
    fams = enumerate_lower(n);
  else if (scope == "all")
    fams = enumerate_families(n);
  else if (scope == "new")
    fams = enumerate_all_new(n);
  else
    throw std::invalid_argument("consistency: scope must be lower | all | new");

  bool all_ok = true;
  Json results = Json::array();
  for (const auto& q : parse_q_list(flags.q_list)) {
    auto res = is_X_consistent(scale(q, v), fams, c);
    Json entry{{"q", q.str()}, {"consistent", res.consistent}};
    if (!res.consistent) entry["failing_family"] = to_json(*res.failing);
    results.push_back(entry);
    report.check("q=" + q.str(), res.consistent);
    all_ok = all_ok && res.consistent;
  }
  report.field("results", results);
  report.witness(Json{{"v", to_json(v)}, {"scope", scope}, {"families", fams.size()}});
  return emit(report, all_ok, all_ok ? "consistent" : "inconsistent");
}

int run_build(const CommonFlags& flags, const std::string& mode, int n, long d_cap) {
  ReportBuilder report("build", flags.params());
  Coloring c = parse_coloring(flags.coloring_spec);
  auto q = parse_q_list(flags.q_list);
  BuildOptions opt{flags.budget(), d_cap};
  auto built = mode == "full" ? build_full_consistent(c, n, q, opt)
                              : build_lower_consistent(c, n, q, opt);
  if (!built) return emit(report, false, "build " + mode + ": not found within budget");
  Json stages = Json::array();
  for (const auto& s : built->stages) stages.push_back(to_json(s));
  report.witness(Json{{"v", to_json(built->v)}, {"stages", stages}});

  auto verify_set = mode == "full" ? enumerate_families(n) : enumerate_lower(n);
  for (const auto& qq : q)
    report.check("consistent q=" + qq.str(),
                 is_X_consistent(scale(qq, built->v), verify_set, c).consistent);
  return emit(report, true, "v = (" + built->v.str() + ")");
}

int run_hindman_cmd(const CommonFlags& flags, int k, const std::string& route, bool generalized,
                    int ground_cap, long d_cap) {
  ReportBuilder report(generalized ? "hindman generalized" : "hindman", flags.params());
  Coloring c = parse_coloring(flags.coloring_spec);
  HindmanOptions opt;
  opt.height = flags.height;
  opt.budget = flags.budget();
  opt.jobs = flags.jobs;
  opt.ground_cap = ground_cap;
  opt.dilation_cap = d_cap;
  if (route == "direct")
    opt.route = HindmanRoute::direct;
  else if (route == "constructive")
    opt.route = HindmanRoute::constructive;
  else if (route == "auto")
    opt.route = HindmanRoute::automatic;
  else
    throw std::invalid_argument("hindman: route must be direct | constructive | auto");

  auto out = generalized ? generalized_witness(c, k, opt) : hindman_witness(c, k, opt);
  report.field("route", out.route_used);
  report.field("notes", out.notes);
  report.stats(out.candidates, 0);
  if (out.witness) {
    report.witness(to_json(*out.witness));
    auto again = verify_hindman(generalized ? HindmanPattern::disjoint_products
                                            : HindmanPattern::sums_and_products,
                                c, out.witness->x);
    report.check("reverify", again.has_value());
    std::string xs;
    for (const auto& x : out.witness->x) xs += (xs.empty() ? "" : ",") + x.str();
    return emit(report, true, "witness x = (" + xs + ")");
  }
  if (out.best_partial) report.field("best_partial", to_json(*out.best_partial));
  return emit(report, false, "no witness within budget");
}

int run_thresholds(const CommonFlags& flags) {
  ReportBuilder report("thresholds", flags.params());
  auto schur = schur_threshold(2);
  auto vdw = vdw_threshold(3, 2);
  auto dut = dut_threshold_22();
  report.witness(Json{{"schur_r2", schur.threshold},
                      {"vdw_3_2", vdw.threshold},
                      {"dut_22", dut.threshold}});
  report.check("schur-certificate",
               [&] {
                 IntColoring cert = [&schur](long v) -> std::optional<int> {
                   if (v < 1 || v > static_cast<long>(schur.certificate.size())) return std::nullopt;
                   return schur.certificate[static_cast<std::size_t>(v - 1)];
                 };
                 return !schur_witness(cert, schur.threshold - 1).has_value();
               }());
  report.check("vdw-certificate",
               [&] {
                 IntColoring cert = [&vdw](long v) -> std::optional<int> {
                   if (v < 1 || v > static_cast<long>(vdw.certificate.size())) return std::nullopt;
                   return vdw.certificate[static_cast<std::size_t>(v - 1)];
                 };
                 return !vdw_witness(cert, 3, vdw.threshold - 1).has_value();
               }());
  report.check("dut-certificate",
               [&] {
                 SubsetColoring cert = [&dut](const IndexSet& s) -> std::optional<int> {
                   if (s.mask() >= dut.certificate.size()) return std::nullopt;
                   return dut.certificate[s.mask()];
                 };
                 return dut.threshold == 1 || !dut_witness(cert, dut.threshold - 1, 2).has_value();
               }());
  bool ok = report.all_checks_pass();
  return emit(report, ok,
              "schur=" + std::to_string(schur.threshold) + " vdw=" + std::to_string(vdw.threshold) +
                  " dut=" + std::to_string(dut.threshold));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic search engine for monochromatic sum/product patterns over Q_+"};
  app.require_subcommand(1);

  CommonFlags flags;
  int cases = 1000;
  std::string mode = "witness";
  std::string route = "auto";
  std::string v_text = "1";
  std::string scope = "lower";
  std::string system_spec = "[]";
  int k = 2, n = 2, r = 2;
  long big_n = 16;
  bool generalized = false;
  int ground_cap = 6;
  long d_cap = 4;

  auto* vi = app.add_subcommand("verify-identities", "run the exact identity suites");
  flags.attach(vi);
  vi->add_option("--cases", cases, "cases per suite");

  auto* search = app.add_subcommand("search", "classical pattern searches");
  search->require_subcommand(1);
  auto add_search = [&](const std::string& name, const std::string& desc) {
    auto* cmd = search->add_subcommand(name, desc);
    flags.attach(cmd);
    cmd->add_option("--mode", mode, "witness | threshold");
    cmd->add_option("--k", k, "pattern size");
    cmd->add_option("--r", r, "number of colors (threshold mode)");
    cmd->add_option("--n", n, "ground size (dut)");
    cmd->add_option("--N", big_n, "scan range for witnesses");
    cmd->add_option("--v", v_text, "rational vector, e.g. \"2,1/3\"");
    cmd->add_option("--system", system_spec, "pvdw polynomial system JSON");
    return cmd;
  };
  auto* schur_cmd = add_search("schur", "x, y, x+y monochromatic");
  auto* folkman_cmd = add_search("folkman", "all subset sums monochromatic");
  auto* vdw_cmd = add_search("vdw", "arithmetic progressions");
  auto* pvdw_cmd = add_search("pvdw", "polynomial progressions on a lattice");
  auto* dut_cmd = add_search("dut", "disjoint unions of blocks");

  auto* cons = app.add_subcommand("consistency", "check a vector against a family collection");
  flags.attach(cons);
  cons->add_option("--v", v_text, "rational vector")->required();
  cons->add_option("--scope", scope, "lower | all | new");

  auto* build = app.add_subcommand("build", "build a consistent vector by induction");
  flags.attach(build);
  build->add_option("--mode", mode, "lower | full");
  build->add_option("--n", n, "ground size")->required();
  build->add_option("--d-cap", d_cap, "per-stage dilation window");

  auto* hind = app.add_subcommand("hindman", "monochromatic sum/product witness search");
  flags.attach(hind);
  hind->add_option("--k", k, "pattern size")->required();
  hind->add_option("--route", route, "direct | constructive | auto");
  hind->add_flag("--generalized", generalized, "sums of disjoint products (all k-families)");
  hind->add_option("--ground-cap", ground_cap, "constructive route ground limit");
  hind->add_option("--d-cap", d_cap, "per-stage dilation window");

  auto* thr = app.add_subcommand("thresholds", "classical thresholds with certificates");
  flags.attach(thr);

  CLI11_PARSE(app, argc, argv);

  try {
    if (vi->parsed()) return run_verify_identities(flags, cases);
    if (schur_cmd->parsed()) return run_search_schur(flags, mode, r, big_n);
    if (folkman_cmd->parsed()) return run_search_folkman(flags, k);
    if (vdw_cmd->parsed()) return run_search_vdw(flags, mode, k, r, big_n);
    if (pvdw_cmd->parsed()) return run_search_pvdw(flags, system_spec);
    if (dut_cmd->parsed()) return run_search_dut(flags, mode, v_text, n, k);
    if (cons->parsed()) return run_consistency(flags, v_text, scope);
    if (build->parsed()) {
      if (mode != "lower" && mode != "full")
        throw std::invalid_argument("build: mode must be lower | full");
      return run_build(flags, mode, n, d_cap);
    }
    if (hind->parsed()) return run_hindman_cmd(flags, k, route, generalized, ground_cap, d_cap);
    if (thr->parsed()) return run_thresholds(flags);
  } catch (const BudgetExceeded& e) {
    std::cout << emit_report(Json{{"schema_version", kReportSchemaVersion},
                                  {"error", "budget"},
                                  {"message", e.what()}});
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitNotFound;
  } catch (const std::exception& e) {
    std::cout << emit_report(Json{{"schema_version", kReportSchemaVersion},
                                  {"error", "invalid-input"},
                                  {"message", e.what()}});
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
