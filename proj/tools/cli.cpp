#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "regionsplit/driver.hpp"
#include "regionsplit/io.hpp"

namespace regionsplit::cli {

namespace {

struct RunFlags {
  std::string algorithm = "auto";
  std::string scalarization = "wt";
  std::string variant = "ts";
  std::string selection = "first";
  Eigen::Index objective = 1;
  Scalar delta = 1;
  bool verify = false;
  bool dedupe = false;
  std::string type = "auto";
};

void add_instance_flags(CLI::App* app, RunFlags& f) {
  app->add_option("--type", f.type, "Instance format")
      ->check(CLI::IsMember({"auto", "explicit", "knapsack"}))
      ->capture_default_str();
  app->add_flag("--dedupe", f.dedupe, "Drop repeated points of an explicit set");
}

void add_run_flags(CLI::App* app, RunFlags& f) {
  app->add_option("--algorithm", f.algorithm, "Box decomposition (auto: vsplit if m = 3)")
      ->check(CLI::IsMember({"auto", "generic", "vsplit"}))
      ->capture_default_str();
  app->add_option("--scalarization", f.scalarization, "Subproblem type")
      ->check(CLI::IsMember({"ec", "wt"}))
      ->capture_default_str();
  app->add_option("--variant", f.variant, "Two-stage or augmented formulation")
      ->check(CLI::IsMember({"ts", "aug"}))
      ->capture_default_str();
  app->add_option("--selection", f.selection, "Box selection rule")
      ->check(CLI::IsMember({"first", "minv1"}))
      ->capture_default_str();
  app->add_option("--objective", f.objective, "Objective minimized by ec (1-based)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_option("--delta", f.delta, "Offset of the starting box above the maximum")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_flag("--verify", f.verify, "Check the decomposition invariants every iteration");
  add_instance_flags(app, f);
}

Algorithm parse_algorithm(const std::string& s, Eigen::Index m) {
  if (s == "generic") return Algorithm::GenericFullSplit;
  if (s == "vsplit") return Algorithm::VSplit;
  return m == 3 ? Algorithm::VSplit : Algorithm::GenericFullSplit;
}

ScalarizationConfig parse_scalarization(const std::string& method, const std::string& variant,
                                        Eigen::Index objective) {
  ScalarizationConfig sc;
  sc.method = method == "ec" ? Method::EpsilonConstraint : Method::WeightedTchebycheff;
  sc.variant = variant == "aug" ? Variant::Augmented : Variant::TwoStage;
  sc.objective_index = objective - 1;
  return sc;
}

RunConfig make_config(const RunFlags& f, Eigen::Index m) {
  RunConfig cfg;
  cfg.algorithm = parse_algorithm(f.algorithm, m);
  cfg.scalarization = parse_scalarization(f.scalarization, f.variant, f.objective);
  cfg.selection = f.selection == "minv1" ? SelectionRule::MinV1 : SelectionRule::FirstInList;
  cfg.delta = f.delta;
  cfg.verify_invariants = f.verify;
  validate(cfg, m);
  return cfg;
}

// First data line with one integer: knapsack; with two: explicit set.
std::string detect_type(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string tok;
    std::size_t count = 0;
    while (fields >> tok) ++count;
    return count == 1 ? "knapsack" : "explicit";
  }
  return "explicit";
}

SolverBackend load_instance(const std::string& path, const RunFlags& f) {
  std::ifstream file(path);
  if (!file) throw UsageError("cannot read instance file '" + path + "'");
  std::stringstream buf;
  buf << file.rdbuf();
  const std::string text = buf.str();
  const std::string type = f.type == "auto" ? detect_type(text) : f.type;
  std::istringstream in(text);
  try {
    if (type == "knapsack") return KnapsackBackend(read_knapsack(in));
    return ExplicitSetBackend(read_explicit_set(in, f.dedupe));
  } catch (const UsageError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

// Writes to `path` if given, otherwise to `fallback`.
template <typename Fn>
void emit(const std::string& path, std::ostream& fallback, Fn&& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + path + "'");
  write(file);
}

OutcomeSet sorted(const OutcomeSet& N) {
  std::vector<Point> pts = N.points();
  std::sort(pts.begin(), pts.end(), lex_less);
  return OutcomeSet(N.dim(), std::move(pts));
}

std::string bound_text(const std::optional<std::size_t>& b) {
  return b ? std::to_string(*b) : "na";
}

// ---- solve -----------------------------------------------------------------

struct SolveArgs {
  RunFlags flags;
  std::string instance;
  std::string out;
  std::string log;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const SolverBackend backend = load_instance(a.instance, a.flags);
  const RunConfig cfg = make_config(a.flags, outcomes(backend).dim());
  const RunResult r = run(backend, cfg);
  emit(a.out, out, [&](std::ostream& os) { write_points_csv(os, sorted(r.nondominated)); });
  if (!a.log.empty()) emit(a.log, out, [&](std::ostream& os) { write_run_log(os, r.log); });
  err << "nondominated=" << r.nondominated.size() << " subproblems=" << r.stats.subproblems_solved
      << " bound=" << bound_text(r.stats.bound_value) << '\n';
  for (const auto& v : r.violations) err << "violation: " << v << '\n';
  return r.violations.empty() ? kOk : kVerifyFailed;
}

// ---- gen-knapsack ----------------------------------------------------------

struct GenArgs {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  const KnapsackInstance inst = generate_knapsack(a.n, a.seed);
  emit(a.out, out, [&](std::ostream& os) { write_knapsack(os, inst); });
  return kOk;
}

// ---- bench -----------------------------------------------------------------

struct BenchArgs {
  RunFlags flags;
  std::vector<std::string> instances;
  std::vector<std::size_t> generate;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> algorithms{"generic", "vsplit"};
  std::vector<std::string> scalarizations{"ec", "wt"};
  std::vector<std::string> variants{"ts", "aug"};
  std::string selection = "auto";
  bool no_timing = false;
  std::string out;
};

struct NamedInstance {
  std::string id;
  SolverBackend backend;
};

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  if (!a.generate.empty() && !a.seed) {
    throw UsageError("bench: --gen needs --seed so that the instances can be reproduced");
  }
  std::vector<NamedInstance> instances;
  for (const auto& path : a.instances) instances.push_back({path, load_instance(path, a.flags)});
  for (std::size_t n : a.generate) {
    instances.push_back({"knapsack-n" + std::to_string(n) + "-seed" + std::to_string(*a.seed),
                         KnapsackBackend(generate_knapsack(n, *a.seed))});
  }

  std::ostringstream csv;
  csv << "instance,m,Z,N,algorithm,scalarization,variant,selection,subproblems,bound,bound_met,"
         "bound_3n_2,bound_2n_1,wall_time_ms\n";
  bool failed = false;
  for (const auto& inst : instances) {
    const OutcomeSet& Z = outcomes(inst.backend);
    const Eigen::Index m = Z.dim();
    std::optional<OutcomeSet> oracle;
    for (const auto& alg : a.algorithms) {
      if (alg == "vsplit" && m != 3) continue;
      for (const auto& sc : a.scalarizations) {
        for (const auto& var : a.variants) {
          RunFlags f = a.flags;
          f.algorithm = alg;
          f.scalarization = sc;
          f.variant = var;
          const bool minv1_ok = alg == "vsplit" && sc == "ec" && f.objective == 1;
          f.selection = a.selection == "first" || !minv1_ok ? "first" : "minv1";
          const RunConfig cfg = make_config(f, m);
          const auto t0 = std::chrono::steady_clock::now();
          const RunResult r = run(inst.backend, cfg);
          const double ms =
              std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                  .count();
          const std::size_t N = r.nondominated.size();
          const auto bound = r.stats.bound_value;
          const std::size_t solved = r.stats.subproblems_solved;
          const bool met = !bound || solved <= *bound;
          csv << inst.id << ',' << m << ',' << Z.size() << ',' << N << ',' << alg << ',' << sc
              << ',' << var << ',' << f.selection << ',' << solved << ',' << bound_text(bound)
              << ',' << (bound ? (met ? "true" : "false") : "na") << ',' << 3 * N - 2 << ','
              << 2 * N - 1 << ',';
          if (!a.no_timing) csv << std::fixed << std::setprecision(3) << ms;
          csv << '\n';
          if (bound && solved < *bound) {
            err << "note: " << inst.id << ' ' << alg << '/' << sc << '/' << var << " solved "
                << solved << " subproblems, below the bound " << *bound << '\n';
          }
          if (a.flags.verify) {
            if (!oracle) oracle = sorted(filter_nondominated(Z));
            if (sorted(r.nondominated).points() != oracle->points()) {
              err << "FAIL " << inst.id << ' ' << alg << '/' << sc << '/' << var
                  << ": nondominated set differs from the brute-force filter\n";
              failed = true;
            }
            if (!met) {
              err << "FAIL " << inst.id << ": bound " << *bound << " exceeded (" << solved << ")\n";
              failed = true;
            }
            for (const auto& v : r.violations) {
              err << "FAIL " << inst.id << ' ' << alg << '/' << sc << '/' << var << ": " << v
                  << '\n';
              failed = true;
            }
          }
        }
      }
    }
  }
  emit(a.out, out, [&](std::ostream& os) { os << csv.str(); });
  return failed ? kVerifyFailed : kOk;
}

// ---- scripted scenarios ----------------------------------------------------

struct ExpectedBox {
  Point u;
  std::optional<Point> v;
  bool quasi = false;
};

struct Snapshot {
  std::size_t after = 0;  // number of inserted points
  std::vector<ExpectedBox> boxes;
};

struct Scenario {
  std::string name;
  Algorithm algorithm;
  Point l;
  Point u;
  std::vector<Point> sequence;
  std::vector<Snapshot> snapshots;
};

ExpectedBox ub(std::initializer_list<Scalar> u) { return {make_point(u), std::nullopt, false}; }
ExpectedBox vb(std::initializer_list<Scalar> u, std::initializer_list<Scalar> v,
               bool quasi = false) {
  return {make_point(u), make_point(v), quasi};
}

const std::vector<Scenario>& scenarios() {
  static const std::vector<Scenario> all = {
      {"full-split",
       Algorithm::GenericFullSplit,
       make_point({0, 0, 0}),
       make_point({5, 5, 5}),
       {make_point({2, 2, 2}), make_point({1, 1, 4})},
       {{1, {ub({2, 5, 5}), ub({5, 2, 5}), ub({5, 5, 2})}},
        {2, {ub({5, 5, 2}), ub({1, 5, 5}), ub({2, 5, 4}), ub({5, 1, 5}), ub({5, 2, 4})}}}},
      {"vsplit",
       Algorithm::VSplit,
       make_point({0, 0, 0}),
       make_point({5, 5, 5}),
       {make_point({2, 2, 2}), make_point({1, 1, 4})},
       {{1, {vb({2, 5, 5}, {0, 2, 2}), vb({5, 2, 5}, {2, 0, 2}), vb({5, 5, 2}, {2, 2, 0})}},
        {2,
         {vb({5, 5, 2}, {2, 2, 0}), vb({1, 5, 5}, {0, 1, 4}), vb({5, 1, 5}, {1, 0, 4}),
          vb({2, 5, 4}, {1, 2, 2}), vb({5, 2, 4}, {2, 1, 2})}}}},
      {"vsplit-ties",
       Algorithm::VSplit,
       make_point({0, 0, 0}),
       make_point({5, 5, 5}),
       {make_point({3, 1, 4}), make_point({3, 2, 1}), make_point({2, 2, 2})},
       {{2,
         {vb({3, 5, 5}, {0, 1, 4}), vb({5, 1, 5}, {3, 0, 4}), vb({3, 5, 4}, {3, 2, 1}, true),
          vb({5, 2, 4}, {3, 1, 1}), vb({5, 5, 1}, {3, 2, 0})}},
        {3,
         {vb({5, 1, 5}, {3, 0, 4}), vb({5, 2, 4}, {3, 1, 1}), vb({5, 5, 1}, {3, 2, 0}),
          vb({2, 5, 5}, {0, 2, 2}), vb({3, 2, 5}, {2, 1, 4}), vb({3, 2, 4}, {3, 2, 2}, true),
          vb({3, 5, 2}, {2, 2, 1})}}}},
  };
  return all;
}

const Scenario& find_scenario(const std::string& name) {
  for (const auto& s : scenarios()) {
    if (s.name == name) return s;
  }
  throw UsageError("unknown scenario '" + name + "'");
}

bool box_less(const ExpectedBox& a, const ExpectedBox& b) {
  if (a.u != b.u) return lex_less(a.u, b.u);
  if (a.v && b.v && *a.v != *b.v) return lex_less(*a.v, *b.v);
  return a.quasi < b.quasi;
}

bool box_equal(const ExpectedBox& a, const ExpectedBox& b) {
  return a.u == b.u && a.v.has_value() == b.v.has_value() && (!a.v || *a.v == *b.v) &&
         a.quasi == b.quasi;
}

std::string describe(std::vector<ExpectedBox> boxes) {
  std::sort(boxes.begin(), boxes.end(), box_less);
  std::string s;
  for (const auto& b : boxes) {
    if (!s.empty()) s += ' ';
    s += "u=" + to_string(b.u);
    if (b.v) s += " v=" + to_string(*b.v);
    if (b.quasi) s += " (quasi)";
    s += ';';
  }
  return s;
}

std::vector<ExpectedBox> observed(const DecompositionState& state) {
  std::vector<ExpectedBox> out;
  if (const auto* D = std::get_if<Decomposition>(&state)) {
    for (const auto& b : D->boxes) out.push_back({b.u, std::nullopt, false});
  } else {
    for (const auto& b : std::get<VDecomposition>(state).boxes) out.push_back({b.u, b.v, b.quasi});
  }
  return out;
}

// Every integer point of [l, u).
OutcomeSet grid(const Point& l, const Point& u) {
  std::vector<Point> pts;
  Point z = l;
  while (true) {
    pts.push_back(z);
    Eigen::Index i = 0;
    while (i < z.size() && ++z(i) == u(i)) {
      z(i) = l(i);
      ++i;
    }
    if (i == z.size()) break;
  }
  return OutcomeSet(l.size(), std::move(pts));
}

DecompositionState start(const Scenario& s) {
  if (s.algorithm == Algorithm::VSplit) return VDecomposition::starting(s.l, s.u);
  return Decomposition::starting(s.l, s.u);
}

void step(DecompositionState& state, const Point& z) {
  if (auto* D = std::get_if<Decomposition>(&state)) {
    step_generic(*D, z, RedundancyFilter::PerComponent);
  } else {
    step_vsplit(std::get<VDecomposition>(state), z);
  }
}

// Test hook: delete the oldest box whose individual region is not empty.
void drop_one_box(DecompositionState& state) {
  if (auto* D = std::get_if<Decomposition>(&state)) {
    if (!D->boxes.empty()) D->boxes.erase(D->boxes.begin());
    return;
  }
  auto& boxes = std::get<VDecomposition>(state).boxes;
  auto it = std::find_if(boxes.begin(), boxes.end(), [](const VBox& b) { return !b.quasi; });
  if (it != boxes.end()) boxes.erase(it);
}

std::vector<Point> state_uppers(const DecompositionState& state) {
  return std::visit([](const auto& D) { return upper_bounds(D); }, state);
}

int verify_scenario(const Scenario& s, std::optional<std::size_t> drop_after, std::ostream& out) {
  const OutcomeSet probe = grid(s.l, s.u);
  DecompositionState state = start(s);
  std::vector<Point> inserted;
  std::optional<std::string> failure;
  std::size_t quasi_seen = 0;
  for (std::size_t k = 0; k < s.sequence.size() && !failure; ++k) {
    step(state, s.sequence[k]);
    inserted.push_back(s.sequence[k]);
    const std::size_t after = k + 1;
    if (drop_after && *drop_after == after) drop_one_box(state);
    if (auto v = find_correctness_violation(state_uppers(state), inserted, probe)) {
      failure = "after point " + std::to_string(after) + ": " + *v;
      break;
    }
    if (auto* V = std::get_if<VDecomposition>(&state)) {
      for (const auto& b : V->boxes) {
        if (b.quasi != covered_by_other(b, V->boxes)) {
          failure = "after point " + std::to_string(after) + ": stale quasi flag on box " +
                    std::to_string(b.id);
        }
        if (b.quasi) {
          ++quasi_seen;
          out << "quasi box after point " << after << ": u=" << to_string(b.u)
              << " v=" << to_string(b.v) << '\n';
        }
      }
    }
    for (const auto& snap : s.snapshots) {
      if (snap.after != after) continue;
      auto got = observed(state);
      auto want = snap.boxes;
      std::sort(got.begin(), got.end(), box_less);
      std::sort(want.begin(), want.end(), box_less);
      const bool same = got.size() == want.size() &&
                        std::equal(got.begin(), got.end(), want.begin(), box_equal);
      if (!same) {
        failure = "after point " + std::to_string(after) + ": expected " + describe(want) +
                  " got " + describe(got);
      }
    }
  }
  if (!failure && s.algorithm == Algorithm::VSplit && pairwise_distinct_components(s.sequence)) {
    if (auto d = compare_split_strategies(s.l, s.u, s.sequence)) failure = *d;
  }
  out << "scenario " << s.name << ": " << s.sequence.size() << " points, " << quasi_seen
      << " quasi box observations\n";
  if (failure) {
    out << "verify: FAIL " << *failure << '\n';
    return kVerifyFailed;
  }
  out << "verify: PASS\n";
  return kOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  RunFlags flags;
  std::string instance;
  std::string scenario;
  std::optional<std::size_t> drop_after;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  if (!a.scenario.empty()) return verify_scenario(find_scenario(a.scenario), a.drop_after, out);
  if (a.instance.empty()) throw UsageError("verify: give an instance file or --scenario");

  const SolverBackend backend = load_instance(a.instance, a.flags);
  const OutcomeSet& Z = outcomes(backend);
  RunConfig cfg = make_config(a.flags, Z.dim());
  cfg.verify_invariants = true;
  cfg.drop_box_after_iteration = a.drop_after;
  const RunResult r = run(backend, cfg);
  bool ok = true;
  auto report = [&](const char* name, bool pass, const std::string& detail) {
    out << "check " << name << ": " << (pass ? "PASS" : "FAIL");
    if (!detail.empty()) out << ' ' << detail;
    out << '\n';
    ok = ok && pass;
  };

  report("invariants", r.violations.empty(), r.violations.empty() ? "" : r.violations.front());

  const OutcomeSet want = sorted(filter_nondominated(Z));
  const OutcomeSet got = sorted(r.nondominated);
  std::string diff;
  for (const Point& z : want) {
    if (!std::binary_search(got.begin(), got.end(), z, lex_less)) {
      diff = "missing " + to_string(z);
      break;
    }
  }
  for (const Point& z : got) {
    if (diff.empty() && !std::binary_search(want.begin(), want.end(), z, lex_less)) {
      diff = "unexpected " + to_string(z);
    }
  }
  report("oracle", diff.empty(), diff);

  const std::size_t solved = r.stats.subproblems_solved;
  report("bound", check_bound(r.stats, r.nondominated.size(), cfg, Z.dim()),
         std::to_string(solved) + " subproblems, bound " + bound_text(r.stats.bound_value));

  if (Z.dim() == 3 && pairwise_distinct_components(r.nondominated.points())) {
    const auto d = compare_split_strategies(ideal_point(Z), upper_bound_point(Z, cfg.delta),
                                            r.nondominated.points());
    report("split-equivalence", !d, d.value_or(""));
  } else {
    out << "check split-equivalence: SKIP points share component values\n";
  }
  out << "quasi boxes created: " << r.stats.quasi_boxes_created << '\n';
  out << "verify: " << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kOk : kVerifyFailed;
}

// ---- dump-boxes ------------------------------------------------------------

struct DumpArgs {
  RunFlags flags;
  std::string instance;
  std::string scenario;
  std::optional<std::size_t> after;
  std::string out;
};

int cmd_dump(const DumpArgs& a, std::ostream& out) {
  DecompositionState state;
  if (!a.scenario.empty()) {
    const Scenario& s = find_scenario(a.scenario);
    state = start(s);
    const std::size_t k = std::min(a.after.value_or(s.sequence.size()), s.sequence.size());
    for (std::size_t q = 0; q < k; ++q) step(state, s.sequence[q]);
  } else {
    if (a.instance.empty()) throw UsageError("dump-boxes: give an instance file or --scenario");
    const SolverBackend backend = load_instance(a.instance, a.flags);
    const OutcomeSet& Z = outcomes(backend);
    RunConfig cfg = make_config(a.flags, Z.dim());
    if (a.after) {
      cfg.max_iterations = a.after;
      state = run(backend, cfg).final_state;
    } else {
      const RunResult r = run(backend, cfg);
      const Point l = ideal_point(Z);
      const Point u = upper_bound_point(Z, cfg.delta);
      if (cfg.algorithm == Algorithm::VSplit) {
        state = replay_vsplit(l, u, r.nondominated.points());
      } else {
        state = replay_generic(l, u, r.nondominated.points(), cfg.generic_filter);
      }
    }
  }
  emit(a.out, out, [&](std::ostream& os) {
    std::visit([&](const auto& D) { write_boxes(os, D); }, state);
  });
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nondominated set enumeration by search region decomposition", "regionsplit"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* c_solve = app.add_subcommand("solve", "Enumerate the nondominated points of an instance");
  c_solve->add_option("instance", solve.instance, "Instance file")->required();
  add_run_flags(c_solve, solve.flags);
  c_solve->add_option("--out", solve.out, "Point CSV (default: stdout)");
  c_solve->add_option("--log", solve.log, "Run log, one line per iteration");

  GenArgs gen;
  auto* c_gen = app.add_subcommand("gen-knapsack", "Generate a tricriteria knapsack instance");
  c_gen->add_option("--n", gen.n, "Item count")->required()->check(CLI::Range(1, 20));
  c_gen->add_option("--seed", gen.seed, "Random seed")->required();
  c_gen->add_option("--out", gen.out, "Instance file (default: stdout)");

  BenchArgs bench;
  auto* c_bench = app.add_subcommand("bench", "Subproblem counts over a configuration matrix");
  c_bench->add_option("instances", bench.instances, "Instance files");
  c_bench->add_option("--gen", bench.generate, "Also bench generated knapsacks with these n")
      ->check(CLI::Range(1, 20));
  c_bench->add_option("--seed", bench.seed, "Seed for --gen");
  c_bench->add_option("--algorithm", bench.algorithms)
      ->check(CLI::IsMember({"generic", "vsplit"}))
      ->capture_default_str();
  c_bench->add_option("--scalarization", bench.scalarizations)
      ->check(CLI::IsMember({"ec", "wt"}))
      ->capture_default_str();
  c_bench->add_option("--variant", bench.variants)
      ->check(CLI::IsMember({"ts", "aug"}))
      ->capture_default_str();
  c_bench->add_option("--selection", bench.selection,
                      "auto: minv1 for vsplit with ec on objective 1, else first")
      ->check(CLI::IsMember({"auto", "first", "minv1"}))
      ->capture_default_str();
  c_bench->add_option("--objective", bench.flags.objective)->check(CLI::PositiveNumber);
  c_bench->add_option("--delta", bench.flags.delta)->check(CLI::PositiveNumber);
  c_bench->add_flag("--verify", bench.flags.verify,
                    "Check invariants, the bound and the brute-force set; exit 1 on failure");
  c_bench->add_flag("--no-timing", bench.no_timing, "Leave wall_time_ms empty");
  c_bench->add_option("--out", bench.out, "Report CSV (default: stdout)");
  add_instance_flags(c_bench, bench.flags);

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify", "Run with all checks against the brute-force set");
  c_verify->add_option("instance", verify.instance, "Instance file");
  c_verify->add_option("--scenario", verify.scenario, "Scripted point sequence")
      ->check(CLI::IsMember({"full-split", "vsplit", "vsplit-ties"}));
  c_verify->add_option("--drop-box-after", verify.drop_after,
                       "Fault injection: delete a box after this iteration");
  add_run_flags(c_verify, verify.flags);

  DumpArgs dump;
  auto* c_dump = app.add_subcommand("dump-boxes", "Print the box decomposition");
  c_dump->add_option("instance", dump.instance, "Instance file");
  c_dump->add_option("--scenario", dump.scenario, "Scripted point sequence")
      ->check(CLI::IsMember({"full-split", "vsplit", "vsplit-ties"}));
  c_dump->add_option("--after", dump.after, "Stop after this many iterations");
  c_dump->add_option("--out", dump.out, "Box file (default: stdout)");
  add_run_flags(c_dump, dump.flags);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (c_solve->parsed()) return cmd_solve(solve, out, err);
    if (c_gen->parsed()) return cmd_gen(gen, out);
    if (c_bench->parsed()) return cmd_bench(bench, out, err);
    if (c_verify->parsed()) return cmd_verify(verify, out);
    if (c_dump->parsed()) return cmd_dump(dump, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InconsistentState& e) {
    err << "internal error: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kUsage;
}

}  // namespace regionsplit::cli
