// monosum: subset-sum laboratory CLI.
//
// Subcommands map onto the library modules: sums, coloring, density,
// optimize, dynamics, verify, plus replay for manifest round-trips. Every run
// that produces files also writes a manifest; reruns with identical flags and
// seed produce byte-identical primary outputs.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "monosum/colorings.hpp"
#include "monosum/density.hpp"
#include "monosum/dynamics.hpp"
#include "monosum/intset.hpp"
#include "monosum/optimize.hpp"
#include "monosum/report.hpp"
#include "monosum/sumset.hpp"
#include "monosum/verify.hpp"

#include "json.hpp"

using namespace monosum;

namespace {

std::uint64_t memory_budget_from_env() {
  const char* env = std::getenv("MONOSUM_MEM_BUDGET");
  if (!env) return kDefaultMemoryBudget;
  return std::stoull(env);
}

std::vector<long long> parse_ll_list(const std::string& csv) {
  std::vector<long long> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(std::stoll(tok));
  return out;
}

struct RunContext {
  std::vector<std::string> argv;
  std::string manifest_path;
  std::uint64_t seed = 0;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  std::vector<std::string> outputs;
  std::map<std::string, std::string> params;

  void note(const std::string& key, const std::string& value) { params[key] = value; }
  void wrote(const std::string& path) { outputs.push_back(path); }

  void finish(const std::string& subcommand) {
    if (manifest_path.empty()) return;
    RunManifest m;
    m.subcommand = subcommand;
    m.parameters = params;
    m.seed = seed;
    m.tool_version = kToolVersion;
    m.wall_time_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    m.outputs = outputs;
    nlohmann::json j = nlohmann::json::parse(m.to_json());
    j["argv"] = argv;
    std::ofstream out(manifest_path);
    if (!out) throw std::runtime_error("cannot write manifest " + manifest_path);
    out << j.dump(2) << "\n";
  }
};

std::ostream& open_out(std::ofstream& file, const std::string& path, RunContext& ctx) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  ctx.wrote(path);
  return file;
}

// ---- sums -----------------------------------------------------------------

int run_sums(const std::string& elements, const std::string& elements_file, long long cap,
             long long bounded_k, bool intervals, long long divide,
             const std::string& graham_base, const std::string& graham_additions,
             const std::string& out_path, RunContext& ctx) {
  if (!graham_base.empty() || !graham_additions.empty()) {
    auto base = parse_ll_list(graham_base);
    if (base.size() != 2) throw std::invalid_argument("--graham-base wants x,y");
    GrahamResult r = graham_extend(base[0], base[1], parse_ll_list(graham_additions));
    if (!r.ok) {
      std::cout << "condition violated at index " << r.violation_index << "\n";
      return 1;
    }
    std::cout << "covered [" << base[0] << "," << base[0] + r.extended_y << ") y'=" << r.extended_y
              << "\n";
    ctx.finish("sums");
    return 0;
  }

  IntSet A = elements_file.empty() ? IntSet(parse_ll_list(elements))
                                   : IntSet::from_file(elements_file);
  if (divide > 1) A = divisor_reduce(A, divide);
  SumSet S = bounded_k >= 0 ? bounded_subset_sums(A, bounded_k, cap, memory_budget_from_env())
                            : subset_sums(A, cap, memory_budget_from_env());
  std::ofstream file;
  std::ostream& out = open_out(file, out_path, ctx);
  if (intervals) {
    out << "lo,hi\n";
    for (const auto& iv : maximal_intervals(S, 0, cap).intervals())
      out << iv.lo << "," << iv.hi << "\n";
  } else {
    out << "members=" << S.count() << " cap=" << cap << " truncated=" << (S.truncated() ? 1 : 0)
        << "\n";
  }
  ctx.finish("sums");
  return 0;
}

// ---- coloring ---------------------------------------------------------------

BlockColoring coloring_from_flags(const std::string& breakpoints, const std::string& file,
                                  int r) {
  if (!file.empty()) return BlockColoring::from_file(file, r);
  return BlockColoring(parse_ll_list(breakpoints), r);
}

int run_coloring_classify(const std::string& type, long long n, double b, int r,
                          double inner_base, const std::string& breakpoints,
                          const std::string& breakpoints_file, RunContext& ctx) {
  if (type == "loglog") {
    LogLogParams p{static_cast<long double>(b), r, static_cast<long double>(inner_base)};
    LogLogColor c = loglog_color_detailed(n, p);
    std::cout << "n=" << n << " color=" << c.color << " floor=" << c.floor_value
              << " tie=" << (c.boundary_tie ? 1 : 0) << "\n";
  } else if (type == "block") {
    BlockColoring c = coloring_from_flags(breakpoints, breakpoints_file, r);
    std::cout << "n=" << n << " color=" << block_color(n, c) << "\n";
  } else {
    throw std::invalid_argument("--type must be loglog or block");
  }
  ctx.finish("coloring classify");
  return 0;
}

int run_coloring_phi(const std::string& breakpoints, const std::string& breakpoints_file, int r,
                     int color, long long range_max, const std::string& out_path,
                     RunContext& ctx) {
  BlockColoring c = coloring_from_flags(breakpoints, breakpoints_file, r);
  PhiSet s = phi_set(c, color, range_max);
  std::ofstream file;
  std::ostream& out = open_out(file, out_path, ctx);
  out << "lo,hi\n";
  for (const auto& iv : s.intervals.intervals()) out << iv.lo << "," << iv.hi << "\n";
  ctx.finish("coloring phi");
  return 0;
}

int run_coloring_separate(const std::string& breakpoints, const std::string& breakpoints_file,
                          int r, RunContext& ctx) {
  BlockColoring c = coloring_from_flags(breakpoints, breakpoints_file, r);
  BlockColoring s = make_separated(c);
  for (std::size_t j = 0; j < s.breakpoints().size(); ++j) {
    std::cout << s.breakpoints()[j];
    if (s.has_explicit_colors() && j + 1 < s.breakpoints().size())
      std::cout << " " << s.block_color(j);
    std::cout << "\n";
  }
  ctx.finish("coloring separate");
  return 0;
}

// ---- density ----------------------------------------------------------------

int run_density_delta(int r, double b, bool exact, RunContext& ctx) {
  if (exact) {
    // Interpret b as an exact small rational via its decimal expansion.
    Rational rb(b);
    rb.canonicalize();
    std::cout << rational_to_string(delta_formula_exact(r, rb)) << "\n";
  } else {
    std::cout << format_real(delta_formula(r, static_cast<long double>(b))) << "\n";
  }
  ctx.finish("density delta");
  return 0;
}

int run_density_cover(int r, double b, RunContext& ctx) {
  std::cout << format_real(loglog_cover_density(r, static_cast<long double>(b))) << "\n";
  ctx.finish("density cover");
  return 0;
}

int run_density_abar(const std::string& breakpoints, const std::string& breakpoints_file,
                     const std::string& out_path, RunContext& ctx) {
  BlockColoring c = coloring_from_flags(breakpoints, breakpoints_file, 2);
  auto states = abar_recurrence(c);
  std::ofstream file;
  std::ostream& out = open_out(file, out_path, ctx);
  out << "n,abar_direct,abar_recurrence,bbar,z\n";
  for (const auto& s : states) {
    out << s.n << "," << rational_to_string(abar_direct(c, s.n)) << ","
        << rational_to_string(s.abar) << "," << rational_to_string(s.bbar) << ","
        << rational_to_string(s.z) << "\n";
  }
  ctx.finish("density abar");
  return 0;
}

int run_density_profile(const std::string& breakpoints, const std::string& breakpoints_file,
                        int color, long long tmax, long long samples,
                        const std::string& out_path, const std::string& svg_path,
                        RunContext& ctx) {
  BlockColoring c = coloring_from_flags(breakpoints, breakpoints_file, 2);
  PhiSet s = phi_set(c, color, tmax);
  std::vector<long long> ts;
  for (long long i = 1; i <= samples; ++i) ts.push_back(std::max<long long>(1, tmax * i / samples));
  DensityProfile p = natural_density_profile(s.intervals, ts);
  std::ofstream file;
  std::ostream& out = open_out(file, out_path, ctx);
  out << "x,value_num,value_den\n";
  for (const auto& smp : p.samples)
    out << smp.x << "," << smp.value.get_num().get_str() << ","
        << smp.value.get_den().get_str() << "\n";
  if (!svg_path.empty()) {
    SvgWriter svg(800, 400);
    std::vector<std::pair<double, double>> pts;
    for (const auto& smp : p.samples)
      pts.emplace_back(static_cast<double>(smp.x), to_double(smp.value));
    svg.add_polyline(pts, "#1f77b4");
    svg.write(svg_path);
    ctx.wrote(svg_path);
  }
  ctx.finish("density profile");
  return 0;
}

int run_density_logdensity(const std::string& elements_file, const std::string& interval,
                           long long x, RunContext& ctx) {
  long double v;
  if (!elements_file.empty()) {
    v = log_density(IntSet::from_file(elements_file), x);
  } else {
    auto lohi = parse_ll_list(interval);
    if (lohi.size() != 2) throw std::invalid_argument("--interval wants lo,hi");
    v = log_density(IntervalList{{lohi[0], lohi[1]}}, x);
  }
  std::cout << format_real(v) << "\n";
  ctx.finish("density logdensity");
  return 0;
}

// ---- optimize ---------------------------------------------------------------

int run_optimize_table(int rmax, double tol, const std::string& out_path, RunContext& ctx) {
  auto rows = c_upper_table(rmax, static_cast<long double>(tol));
  std::ofstream file;
  std::ostream& out = open_out(file, out_path, ctx);
  out << "r,b0,c_upper,delta_min,identity_gap\n";
  for (const auto& row : rows)
    out << row.r << "," << format_real(row.b0) << "," << format_real(row.c_upper) << ","
        << format_real(row.delta_min) << "," << format_real(row.identity_gap) << "\n";
  ctx.finish("optimize table");
  return 0;
}

int run_optimize_root(int r, double tol, RunContext& ctx) {
  RootResult res = critical_root(r, static_cast<long double>(tol));
  std::cout << "r=" << r << " b0=" << format_real(res.b0)
            << " residual=" << format_real(res.residual)
            << " low_root=" << format_real(res.low_root) << "\n";
  MinResult m = minimize_delta(r);
  std::cout << "minimize b*=" << format_real(m.b_star)
            << " delta*=" << format_real(m.delta_star) << "\n";
  ctx.finish("optimize root");
  return 0;
}

int run_optimize_f2(RunContext& ctx) {
  F2Result f = f2_inf();
  std::cout << "z*=" << format_real(f.z_star) << " f2=" << format_real(f.f2) << "\n";
  ctx.finish("optimize f2");
  return 0;
}

// ---- dynamics ---------------------------------------------------------------

int run_dynamics_certify(double epsilon, int grid, int kmax, double tol, int threads,
                         const std::string& snapshots, RunContext& ctx) {
  Box box = Box::from_epsilon(epsilon);
  SkOptions opt;
  opt.grid = grid;
  opt.k_max = kmax;
  opt.tol = tol;
  opt.threads = threads;
  CertifyResult res = certify_empty(box, opt);
  if (!snapshots.empty()) {
    std::filesystem::create_directories(snapshots);
    std::string csv = snapshots + "/polygons.csv";
    std::string svg = snapshots + "/overlay.svg";
    write_polygon_csv(csv, res.polygons);
    write_snapshot_svg(svg, res.polygons, std::max(box.bound, 0.0));
    ctx.wrote(csv);
    ctx.wrote(svg);
  }
  if (res.K) {
    std::cout << "certified epsilon=" << format_real(epsilon) << " K=" << *res.K
              << " grid=" << grid << "\n";
  } else {
    std::cout << "not certified within kmax=" << kmax << " (refine the grid or raise kmax)\n";
  }
  ctx.finish("dynamics certify");
  return 0;
}

int run_dynamics_step(double a, double b, double z, RunContext& ctx) {
  Point2 y = step(Point2{a, b}, z);
  std::cout << format_real(y.a) << "," << format_real(y.b) << "\n";
  ctx.finish("dynamics step");
  return 0;
}

int run_dynamics_fixed_point(double z, RunContext& ctx) {
  Point2 p = fixed_point(z);
  std::cout << format_real(p.a) << "," << format_real(p.b) << "\n";
  ctx.finish("dynamics fixed-point");
  return 0;
}

// ---- verify -----------------------------------------------------------------

int run_verify_lemma21(long long N, int r, long long trials, std::uint64_t seed,
                       const std::string& strategy, const std::string& out_path,
                       RunContext& ctx) {
  auto t0 = std::chrono::steady_clock::now();
  WorstPartitionResult res =
      worst_partition_search(N, r, trials, seed, parse_strategy(strategy),
                             memory_budget_from_env());
  double runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  nlohmann::json j;
  j["N"] = res.N;
  j["r"] = res.r;
  j["seed"] = seed;
  j["strategy"] = strategy;
  j["target_hi"] = res.target_hi;
  j["trials"] = res.c_values.size() + res.uncovered_trials;
  j["uncovered_trials"] = res.uncovered_trials;
  j["worst_c"] = std::stod(format_real(res.worst_c));
  nlohmann::json per_trial = nlohmann::json::array();
  for (double c : res.c_values) per_trial.push_back(std::stod(format_real(c)));
  j["per_trial_c"] = per_trial;
  j["runtime_ms"] = runtime_ms;

  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    // Runtime varies between runs; primary payload stays byte-identical.
    nlohmann::json stable = j;
    stable.erase("runtime_ms");
    out << stable.dump(2) << "\n";
    ctx.wrote(out_path);
    std::cout << "worst_c=" << format_real(res.worst_c) << " trials=" << j["trials"]
              << " uncovered=" << res.uncovered_trials << "\n";
  }
  ctx.finish("verify lemma21");
  return 0;
}

int run_verify_primes(long long lo, long long hi, int r, RunContext& ctx) {
  IntSet X = prime_filter(lo, hi, r);
  for (long long x : X.elements()) std::cout << x << "\n";
  ctx.finish("verify primes");
  return 0;
}

int run_verify_thm22(const std::string& elements, const std::string& elements_file, long long n,
                     long long k, const std::string& out_path, RunContext& ctx) {
  IntSet A = elements_file.empty() ? IntSet(parse_ll_list(elements))
                                   : IntSet::from_file(elements_file);
  Thm22Report rep = thm22_check(A, n, k, memory_budget_from_env());
  std::ofstream file;
  std::ostream& out = open_out(file, out_path, ctx);
  out << "d,reduced_size,drop,lo,hi,length\n";
  for (const auto& t : rep.trials)
    out << t.d << "," << t.reduced_size << "," << t.drop << "," << t.longest.lo << ","
        << t.longest.hi << "," << t.longest.length() << "\n";
  std::cout << "best_d=" << rep.best_d << " longest=" << rep.best_interval.length()
            << " reached_n=" << (rep.reached_n ? 1 : 0) << "\n";
  ctx.finish("verify thm22");
  return 0;
}

int dispatch(const std::vector<std::string>& args);

int run_replay(const std::string& manifest_path) {
  std::ifstream in(manifest_path);
  if (!in) throw std::runtime_error("cannot open manifest " + manifest_path);
  nlohmann::json j;
  in >> j;
  std::vector<std::string> argv = j.at("argv").get<std::vector<std::string>>();
  return dispatch(argv);
}

int dispatch(const std::vector<std::string>& args) {
  CLI::App app{"monosum: exact subset sums, Erdos-type colorings, density profiles,\n"
               "critical-point optimization and convex-set dynamics"};
  app.require_subcommand(1);

  RunContext ctx;
  ctx.argv = args;
  app.add_option("--manifest", ctx.manifest_path, "write a run manifest (JSON) here");

  // sums
  auto* sums = app.add_subcommand("sums", "subset-sum reachability and intervals");
  std::string s_elements, s_file, s_out, s_graham_base, s_graham_add;
  long long s_cap = 0, s_bounded = -1, s_divide = 1;
  bool s_intervals = false;
  sums->add_option("--elements", s_elements, "comma-separated elements");
  sums->add_option("--elements-file", s_file, "one element per line");
  sums->add_option("--cap", s_cap, "inclusive sum bound M");
  sums->add_option("--bounded", s_bounded, "restrict to sums of at most k elements");
  sums->add_flag("--intervals", s_intervals, "emit maximal intervals as CSV");
  sums->add_option("--divide", s_divide, "divisor-reduce the set by d first");
  sums->add_option("--graham-base", s_graham_base, "x,y with Sigma(A) covering [x,x+y)");
  sums->add_option("--graham-additions", s_graham_add, "elements to append in order");
  sums->add_option("--out", s_out, "output file (default stdout)");

  // coloring
  auto* coloring = app.add_subcommand("coloring", "loglog and block colorings");
  coloring->require_subcommand(1);
  auto* classify = coloring->add_subcommand("classify", "color of a single integer");
  std::string c_type = "loglog", c_breaks, c_breaks_file;
  long long c_n = 1;
  double c_b = 4.0, c_inner = 0.0;
  int c_r = 2;
  classify->add_option("--type", c_type, "loglog|block");
  classify->add_option("--n", c_n, "integer to classify")->required();
  classify->add_option("--b", c_b, "outer log base");
  classify->add_option("--r", c_r, "number of colors");
  classify->add_option("--inner-base", c_inner, "inner log base (0 = natural)");
  classify->add_option("--breakpoints", c_breaks, "comma-separated breakpoints");
  classify->add_option("--breakpoints-file", c_breaks_file, "one breakpoint per line");
  auto* phi = coloring->add_subcommand("phi", "phi-set of a block coloring");
  int p_color = 0;
  long long p_range = 0;
  std::string p_out;
  phi->add_option("--breakpoints", c_breaks, "comma-separated breakpoints");
  phi->add_option("--breakpoints-file", c_breaks_file, "one breakpoint per line");
  phi->add_option("--r", c_r, "number of colors");
  phi->add_option("--color", p_color, "color index")->required();
  phi->add_option("--range-max", p_range, "clip range")->required();
  phi->add_option("--out", p_out, "output CSV");
  auto* separate = coloring->add_subcommand("separate", "enforce H_{i+2} > 2(H_{i+1}-1)");
  separate->add_option("--breakpoints", c_breaks, "comma-separated breakpoints");
  separate->add_option("--breakpoints-file", c_breaks_file, "one breakpoint per line");
  separate->add_option("--r", c_r, "number of colors");

  // density
  auto* density = app.add_subcommand("density", "density formulas and profiles");
  density->require_subcommand(1);
  auto* delta = density->add_subcommand("delta", "delta_r(b) closed form");
  int d_r = 2;
  double d_b = 4.0;
  bool d_exact = false;
  delta->add_option("--r", d_r)->required();
  delta->add_option("--b", d_b)->required();
  delta->add_flag("--exact", d_exact, "exact rational output (rational b)");
  auto* cover = density->add_subcommand("cover", "gap-series cover density");
  cover->add_option("--r", d_r)->required();
  cover->add_option("--b", d_b)->required();
  auto* abar = density->add_subcommand("abar", "block-coloring density recurrence");
  std::string a_breaks, a_breaks_file, a_out;
  abar->add_option("--breakpoints", a_breaks);
  abar->add_option("--breakpoints-file", a_breaks_file);
  abar->add_option("--out", a_out, "output CSV");
  auto* profile = density->add_subcommand("profile", "natural density profile of a phi-set");
  long long pr_tmax = 0, pr_samples = 100;
  int pr_color = 0;
  std::string pr_out, pr_svg;
  profile->add_option("--breakpoints", a_breaks);
  profile->add_option("--breakpoints-file", a_breaks_file);
  profile->add_option("--color", pr_color)->required();
  profile->add_option("--tmax", pr_tmax)->required();
  profile->add_option("--samples", pr_samples);
  profile->add_option("--out", pr_out, "output CSV");
  profile->add_option("--svg", pr_svg, "optional SVG plot");
  auto* logd = density->add_subcommand("logdensity", "logarithmic density up to x");
  std::string l_file, l_interval;
  long long l_x = 0;
  logd->add_option("--elements-file", l_file);
  logd->add_option("--interval", l_interval, "lo,hi");
  logd->add_option("--x", l_x)->required();

  // optimize
  auto* optimize = app.add_subcommand("optimize", "critical roots and bound tables");
  optimize->require_subcommand(1);
  auto* table = optimize->add_subcommand("table", "c_r upper bound table");
  int o_rmax = 10, o_r = 2;
  double o_tol = 1e-12;
  std::string o_out;
  table->add_option("--rmax", o_rmax);
  table->add_option("--tol", o_tol);
  table->add_option("--out", o_out, "output CSV");
  auto* root = optimize->add_subcommand("root", "critical root for one r");
  root->add_option("--r", o_r)->required();
  root->add_option("--tol", o_tol);
  auto* f2cmd = optimize->add_subcommand("f2", "inf of (1-z/2)/(1-z^2)");

  // dynamics
  auto* dynamics = app.add_subcommand("dynamics", "S_K outer approximation engine");
  dynamics->require_subcommand(1);
  auto* certify = dynamics->add_subcommand("certify", "emptiness certificate for S_K");
  double y_eps = 0.05, y_tol = 1e-9, y_a = 0, y_b = 0, y_z = 0;
  int y_grid = 512, y_kmax = 10000, y_threads = 0;
  std::string y_snapshots;
  certify->add_option("--epsilon", y_eps)->required();
  certify->add_option("--grid", y_grid);
  certify->add_option("--kmax", y_kmax);
  certify->add_option("--tol", y_tol);
  certify->add_option("--threads", y_threads);
  certify->add_option("--snapshots", y_snapshots, "directory for polygon CSV + SVG");
  auto* stepc = dynamics->add_subcommand("step", "one application of the step map");
  stepc->add_option("--a", y_a)->required();
  stepc->add_option("--b", y_b)->required();
  stepc->add_option("--z", y_z)->required();
  auto* fixc = dynamics->add_subcommand("fixed-point", "fixed point of step(., z)");
  fixc->add_option("--z", y_z)->required();

  // verify
  auto* verify = app.add_subcommand("verify", "desk-scale experiments");
  verify->require_subcommand(1);
  auto* lemma21 = verify->add_subcommand("lemma21", "coverage witnesses over random partitions");
  long long v_N = 100, v_trials = 100, v_n = 0, v_k = 0, v_lo = 0, v_hi = 0;
  int v_r = 2;
  std::uint64_t v_seed = 42;
  std::string v_strategy = "random", v_out, v_elements, v_file;
  lemma21->add_option("--N", v_N)->required();
  lemma21->add_option("--r", v_r);
  lemma21->add_option("--trials", v_trials);
  lemma21->add_option("--seed", v_seed);
  lemma21->add_option("--strategy", v_strategy, "random|exhaustive|greedy-adversarial");
  lemma21->add_option("--out", v_out, "JSON report path");
  auto* primes = verify->add_subcommand("primes", "smooth-free sieve");
  primes->add_option("--lo", v_lo)->required();
  primes->add_option("--hi", v_hi)->required();
  primes->add_option("--r", v_r);
  auto* thm22 = verify->add_subcommand("thm22", "interval search over divisor reductions");
  thm22->add_option("--elements", v_elements);
  thm22->add_option("--elements-file", v_file);
  thm22->add_option("--n", v_n)->required();
  thm22->add_option("--k", v_k)->required();
  thm22->add_option("--out", v_out, "CSV report path");

  // replay
  auto* replay = app.add_subcommand("replay", "re-run a recorded manifest");
  std::string rp_manifest;
  replay->add_option("--manifest", rp_manifest)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  for (const auto& a : args) {
    auto eq = a.find('=');
    if (a.rfind("--", 0) == 0 && eq != std::string::npos)
      ctx.note(a.substr(2, eq - 2), a.substr(eq + 1));
  }
  for (std::size_t i = 0; i + 1 < args.size(); ++i)
    if (args[i].rfind("--", 0) == 0 && args[i].find('=') == std::string::npos &&
        args[i + 1].rfind("--", 0) != 0)
      ctx.note(args[i].substr(2), args[i + 1]);
  ctx.seed = v_seed;

  if (sums->parsed())
    return run_sums(s_elements, s_file, s_cap, s_bounded, s_intervals, s_divide, s_graham_base,
                    s_graham_add, s_out, ctx);
  if (classify->parsed())
    return run_coloring_classify(c_type, c_n, c_b, c_r, c_inner, c_breaks, c_breaks_file, ctx);
  if (phi->parsed())
    return run_coloring_phi(c_breaks, c_breaks_file, c_r, p_color, p_range, p_out, ctx);
  if (separate->parsed()) return run_coloring_separate(c_breaks, c_breaks_file, c_r, ctx);
  if (delta->parsed()) return run_density_delta(d_r, d_b, d_exact, ctx);
  if (cover->parsed()) return run_density_cover(d_r, d_b, ctx);
  if (abar->parsed()) return run_density_abar(a_breaks, a_breaks_file, a_out, ctx);
  if (profile->parsed())
    return run_density_profile(a_breaks, a_breaks_file, pr_color, pr_tmax, pr_samples, pr_out,
                               pr_svg, ctx);
  if (logd->parsed()) return run_density_logdensity(l_file, l_interval, l_x, ctx);
  if (table->parsed()) return run_optimize_table(o_rmax, o_tol, o_out, ctx);
  if (root->parsed()) return run_optimize_root(o_r, o_tol, ctx);
  if (f2cmd->parsed()) return run_optimize_f2(ctx);
  if (certify->parsed())
    return run_dynamics_certify(y_eps, y_grid, y_kmax, y_tol, y_threads, y_snapshots, ctx);
  if (stepc->parsed()) return run_dynamics_step(y_a, y_b, y_z, ctx);
  if (fixc->parsed()) return run_dynamics_fixed_point(y_z, ctx);
  if (lemma21->parsed())
    return run_verify_lemma21(v_N, v_r, v_trials, v_seed, v_strategy, v_out, ctx);
  if (primes->parsed()) return run_verify_primes(v_lo, v_hi, v_r, ctx);
  if (thm22->parsed()) return run_verify_thm22(v_elements, v_file, v_n, v_k, v_out, ctx);
  if (replay->parsed()) return run_replay(rp_manifest);
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return dispatch(args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
