#include "regionsplit/driver.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace regionsplit {

const char* to_string(Algorithm a) {
  return a == Algorithm::GenericFullSplit ? "generic" : "vsplit";
}

const char* to_string(SelectionRule s) {
  return s == SelectionRule::FirstInList ? "first" : "minv1";
}

void validate(const RunConfig& cfg, Eigen::Index m) {
  if (m < 2) throw UsageError("outcome dimension must be at least 2");
  if (cfg.delta < 1) throw UsageError("delta must be a positive integer");
  if (cfg.algorithm == Algorithm::VSplit && m != 3) {
    throw UsageError("the vsplit algorithm requires m = 3, instance has m = " +
                     std::to_string(m));
  }
  const auto& sc = cfg.scalarization;
  if (sc.objective_index < 0 || sc.objective_index >= m) {
    throw UsageError("objective index " + std::to_string(sc.objective_index + 1) +
                     " is outside 1.." + std::to_string(m));
  }
  if (sc.rho_denominator_slack < 1) {
    throw UsageError("rho_denominator_slack must be a positive integer");
  }
  if (cfg.selection == SelectionRule::MinV1) {
    if (cfg.algorithm != Algorithm::VSplit || sc.method != Method::EpsilonConstraint ||
        sc.objective_index != 0) {
      throw UsageError(
          "minv1 selection needs the vsplit algorithm with the epsilon-constraint method on "
          "objective 1");
    }
  }
}

std::vector<Point> upper_bounds(const Decomposition& D) {
  std::vector<Point> out;
  out.reserve(D.boxes.size());
  for (const auto& b : D.boxes) out.push_back(b.u);
  return out;
}

std::vector<Point> upper_bounds(const VDecomposition& D) {
  std::vector<Point> out;
  out.reserve(D.boxes.size());
  for (const auto& b : D.boxes) out.push_back(b.u);
  return out;
}

std::optional<std::string> find_correctness_violation(std::span<const Point> uppers,
                                                      std::span<const Point> inserted,
                                                      const OutcomeSet& Z) {
  for (const Point& z : Z) {
    const auto inside = std::find_if(uppers.begin(), uppers.end(),
                                     [&](const Point& u) { return box_contains(u, z); });
    const auto cover = std::find_if(inserted.begin(), inserted.end(),
                                    [&](const Point& p) { return weakly_dominates(p, z); });
    const bool in_box = inside != uppers.end();
    const bool covered = cover != inserted.end();
    if (in_box && covered) {
      return "outcome " + to_string(z) + " is covered by inserted point " + to_string(*cover) +
             " but still lies in the box with upper bound " + to_string(*inside);
    }
    if (!in_box && !covered) {
      return "outcome " + to_string(z) +
             " is not covered by any inserted point but lies in no box";
    }
  }
  return std::nullopt;
}

bool verify_correctness(const Decomposition& D, std::span<const Point> inserted,
                        const OutcomeSet& Z) {
  return !find_correctness_violation(upper_bounds(D), inserted, Z);
}

bool verify_correctness(const VDecomposition& D, std::span<const Point> inserted,
                        const OutcomeSet& Z) {
  return !find_correctness_violation(upper_bounds(D), inserted, Z);
}

std::optional<std::size_t> applicable_bound(const RunConfig& cfg, Eigen::Index m,
                                            std::size_t n) {
  if (n == 0) return std::nullopt;
  const auto& sc = cfg.scalarization;
  if (m == 2) return 2 * n - 1;
  if (cfg.algorithm != Algorithm::VSplit) return std::nullopt;
  if (sc.method == Method::EpsilonConstraint && cfg.selection == SelectionRule::MinV1 &&
      sc.objective_index == 0) {
    return 2 * n - 1;
  }
  return n >= 3 ? 3 * n - 2 : 3 * n + 1;
}

bool check_bound(const RunStats& stats, std::size_t n, const RunConfig& cfg, Eigen::Index m) {
  const auto bound = applicable_bound(cfg, m, n);
  return !bound || stats.subproblems_solved <= *bound;
}

namespace {

constexpr std::size_t kMaxViolations = 25;

// Shared bookkeeping of one run, independent of the decomposition type.
class Recorder {
 public:
  Recorder(const SolverBackend& backend, const RunConfig& cfg)
      : Z_(outcomes(backend)), cfg_(cfg) {}

  void fail(std::size_t iter, const std::string& what) {
    if (violations.size() < kMaxViolations) {
      violations.push_back("iteration " + std::to_string(iter) + ": " + what);
    }
  }

  bool verifying() const { return cfg_.verify_invariants; }

  // Checks on a point returned by a subproblem solved over box upper bound u.
  void check_solution(std::size_t iter, const Subproblem& sub, const Point& z) {
    if (!verifying()) return;
    for (const Point& other : Z_) {
      if (dominates(other, z)) {
        fail(iter, "subproblem returned " + to_string(z) + ", which is dominated by " +
                       to_string(other));
        break;
      }
    }
    if (sub.method == Method::EpsilonConstraint) {
      const Eigen::Index obj = sub.objective_index;
      for (const Point& other : Z_) {
        if (feasible(sub, other) && other(obj) < z(obj)) {
          fail(iter, "epsilon-constraint optimum " + to_string(z) + " is beaten by " +
                         to_string(other));
          break;
        }
      }
    }
  }

  void check_correctness(std::size_t iter, std::span<const Point> uppers) {
    if (!verifying()) return;
    if (auto v = find_correctness_violation(uppers, found, Z_)) fail(iter, *v);
  }

  // If some box still holds an unfound point, drop it (test hook).
  template <typename BoxT>
  void drop_box_with_unfound_point(std::vector<BoxT>& boxes) {
    for (auto it = boxes.begin(); it != boxes.end(); ++it) {
      for (const Point& z : Z_) {
        const bool covered = std::any_of(found.begin(), found.end(),
                                         [&](const Point& p) { return weakly_dominates(p, z); });
        if (!covered && box_contains(it->u, z)) {
          boxes.erase(it);
          return;
        }
      }
    }
  }

  void log(std::size_t iter, BoxId box, const std::optional<Point>& z, std::size_t boxes_after) {
    records.push_back(IterationRecord{iter, box, z, boxes_after});
    stats.per_iteration_box_counts.push_back(boxes_after);
    ++stats.subproblems_solved;
    if (z) {
      ++stats.points_found;
    } else {
      ++stats.infeasible;
    }
  }

  RunResult finish(DecompositionState state) {
    RunResult r;
    r.nondominated = OutcomeSet(Z_.dim(), found);
    stats.bound_value = applicable_bound(cfg_, Z_.dim(), found.size());
    r.stats = std::move(stats);
    r.log = std::move(records);
    r.violations = std::move(violations);
    r.final_state = std::move(state);
    return r;
  }

  const OutcomeSet& Z_;
  const RunConfig& cfg_;
  std::vector<Point> found;
  RunStats stats;
  std::vector<IterationRecord> records;
  std::vector<std::string> violations;
};

void check_generic_structure(Recorder& rec, std::size_t iter, const Decomposition& D) {
  if (pairwise_distinct_components(rec.found)) {
    for (const Box& a : D.boxes) {
      for (const Box& b : D.boxes) {
        if (a.id != b.id && weakly_dominates(a.u, b.u)) {
          rec.fail(iter, "box " + std::to_string(a.id) + " " + to_string(a.u) +
                             " is redundant next to box " + std::to_string(b.id) + " " +
                             to_string(b.u));
          return;
        }
      }
    }
  }
  if (D.dim() == 2) {
    std::vector<Point> us = upper_bounds(D);
    std::sort(us.begin(), us.end(), lex_less);
    for (std::size_t q = 1; q < us.size(); ++q) {
      if (!(us[q - 1](0) < us[q](0) && us[q - 1](1) > us[q](1))) {
        rec.fail(iter, "bicriteria boxes " + to_string(us[q - 1]) + " and " + to_string(us[q]) +
                           " are not in staircase order");
        return;
      }
    }
  }
}

void check_vsplit_structure(Recorder& rec, std::size_t iter, const VDecomposition& D,
                            const VStepReport& step) {
  const auto& p = step.profile;
  if (step.boxes_after > step.boxes_before + 2) {
    rec.fail(iter, "box count grew from " + std::to_string(step.boxes_before) + " to " +
                       std::to_string(step.boxes_after));
  }
  if (p.by_count[3] > 0 && p.containing != 1) {
    rec.fail(iter, "a box was split in all three components but " +
                       std::to_string(p.containing) + " boxes contain the point");
  }
  if (p.by_count[2] > 3) {
    rec.fail(iter, std::to_string(p.by_count[2]) + " boxes were split in two components");
  }
  if (p.by_count[2] == 3 && p.by_count[0] == 0) {
    rec.fail(iter, "three boxes were split in two components but none in zero");
  }
  const bool distinct = pairwise_distinct_components(rec.found);
  if (distinct && step.loose_pairs > 0) {
    rec.fail(iter, "new boxes of one split component could not be ordered strictly");
  }
  for (const VBox& b : D.boxes) {
    if (b.quasi != covered_by_other(b, D.boxes)) {
      rec.fail(iter, "stale quasi flag on box " + std::to_string(b.id));
    }
    if (distinct && b.quasi) {
      rec.fail(iter, "box " + std::to_string(b.id) + " " + to_string(b.u) +
                         " is covered by another box although no point values tie");
    }
    if (!(b.v.array() >= D.l.array()).all() || !(b.v.array() <= b.u.array()).all()) {
      rec.fail(iter, "box " + std::to_string(b.id) + " has v = " + to_string(b.v) +
                         " outside [l, u] with u = " + to_string(b.u));
    }
    if (distinct && !b.quasi && !(b.v.array() < b.u.array()).all()) {
      rec.fail(iter, "box " + std::to_string(b.id) + " is not covered by another box but has"
                         " an empty individual subset: v = " + to_string(b.v) +
                         ", u = " + to_string(b.u));
    }
  }
}

RunResult run_generic(const SolverBackend& backend, const RunConfig& cfg) {
  Recorder rec(backend, cfg);
  Decomposition D = init_starting_box(rec.Z_, cfg.delta);
  rec.stats.boxes_created = 1;
  std::size_t iter = 0;
  while (!D.empty()) {
    if (cfg.max_iterations && iter >= *cfg.max_iterations) break;
    ++iter;
    const Box selected = D.boxes.front();
    const Subproblem sub = build_subproblem(selected.u, D.l, cfg.scalarization);
    std::optional<Point> z = solve(backend, sub);
    if (z && !box_contains(selected, *z)) z.reset();  // epsilon-constraint optimum beyond u_1
    if (!z) {
      D.boxes.erase(D.boxes.begin());
      ++rec.stats.boxes_removed;
    } else {
      rec.check_solution(iter, sub, *z);
      rec.found.push_back(*z);
      try {
        const auto step = step_generic(D, *z, cfg.generic_filter);
        rec.stats.boxes_created += step.added;
        rec.stats.boxes_removed += step.containing;
      } catch (const InconsistentState& e) {
        if (!rec.verifying()) throw;
        rec.fail(iter, e.what());
        rec.log(iter, selected.id, z, D.boxes.size());
        break;
      }
      if (rec.verifying()) check_generic_structure(rec, iter, D);
    }
    if (cfg.drop_box_after_iteration && iter == *cfg.drop_box_after_iteration) {
      rec.drop_box_with_unfound_point(D.boxes);
    }
    rec.check_correctness(iter, upper_bounds(D));
    rec.log(iter, selected.id, z, D.boxes.size());
  }
  return rec.finish(std::move(D));
}

RunResult run_vsplit(const SolverBackend& backend, const RunConfig& cfg) {
  Recorder rec(backend, cfg);
  VDecomposition D = init_starting_box_vsplit(rec.Z_, cfg.delta);
  rec.stats.boxes_created = 1;
  const bool skip_first_component = cfg.selection == SelectionRule::MinV1;
  std::size_t iter = 0;
  while (!D.empty()) {
    if (cfg.max_iterations && iter >= *cfg.max_iterations) break;
    ++iter;
    auto pick = D.boxes.begin();
    if (cfg.selection == SelectionRule::MinV1) {
      pick = std::min_element(D.boxes.begin(), D.boxes.end(), [](const VBox& a, const VBox& b) {
        return a.v(0) != b.v(0) ? a.v(0) < b.v(0) : a.id < b.id;
      });
    }
    const VBox selected = *pick;
    const Subproblem sub = build_subproblem(selected.u, D.l, cfg.scalarization);
    std::optional<Point> z = solve(backend, sub);
    if (z && !box_contains(selected.u, *z)) z.reset();
    if (!z) {
      erase_box(D, selected.id);
      ++rec.stats.boxes_removed;
      if (rec.verifying()) {
        for (const VBox& b : D.boxes) {
          if (b.quasi != covered_by_other(b, D.boxes)) {
            rec.fail(iter, "stale quasi flag on box " + std::to_string(b.id) +
                               " after removing an empty box");
          }
        }
      }
    } else {
      rec.check_solution(iter, sub, *z);
      rec.found.push_back(*z);
      std::optional<SplitExclusion> exclusion;
      if (skip_first_component) exclusion = SplitExclusion{selected.id, 0};
      std::map<BoxId, Point> v_before;
      if (rec.verifying()) {
        for (const VBox& b : D.boxes) v_before.emplace(b.id, b.v);
      }
      try {
        const auto step = step_vsplit(D, *z, exclusion);
        for (const VBox& b : D.boxes) {
          const auto old = v_before.find(b.id);
          if (old != v_before.end() && !(b.v.array() >= old->second.array()).all()) {
            rec.fail(iter, "v of box " + std::to_string(b.id) + " decreased from " +
                               to_string(old->second) + " to " + to_string(b.v));
          }
        }
        rec.stats.boxes_created += step.added;
        rec.stats.boxes_removed += step.profile.containing;
        for (auto it = D.boxes.end() - static_cast<std::ptrdiff_t>(step.added);
             it != D.boxes.end(); ++it) {
          if (it->quasi) ++rec.stats.quasi_boxes_created;
        }
        if (rec.verifying()) check_vsplit_structure(rec, iter, D, step);
      } catch (const InconsistentState& e) {
        if (!rec.verifying()) throw;
        rec.fail(iter, e.what());
        rec.log(iter, selected.id, z, D.boxes.size());
        break;
      }
    }
    if (cfg.drop_box_after_iteration && iter == *cfg.drop_box_after_iteration) {
      rec.drop_box_with_unfound_point(D.boxes);
    }
    rec.check_correctness(iter, upper_bounds(D));
    rec.log(iter, selected.id, z, D.boxes.size());
  }
  return rec.finish(std::move(D));
}

std::string describe_multiset(std::vector<Point> us) {
  std::sort(us.begin(), us.end(), lex_less);
  std::ostringstream os;
  os << '{';
  for (std::size_t q = 0; q < us.size(); ++q) {
    if (q > 0) os << ' ';
    os << to_string(us[q]);
  }
  os << '}';
  return os.str();
}

}  // namespace

RunResult run(const SolverBackend& backend, const RunConfig& cfg) {
  const OutcomeSet& Z = outcomes(backend);
  if (Z.empty()) throw UsageError("the instance has no feasible outcome");
  validate(cfg, Z.dim());
  return cfg.algorithm == Algorithm::VSplit ? run_vsplit(backend, cfg) : run_generic(backend, cfg);
}

Decomposition replay_generic(const Point& l, const Point& u, std::span<const Point> sequence,
                             RedundancyFilter filter) {
  Decomposition D = Decomposition::starting(l, u);
  for (const Point& z : sequence) step_generic(D, z, filter);
  return D;
}

VDecomposition replay_vsplit(const Point& l, const Point& u, std::span<const Point> sequence) {
  VDecomposition D = VDecomposition::starting(l, u);
  for (const Point& z : sequence) step_vsplit(D, z);
  return D;
}

std::optional<std::string> compare_split_strategies(const Point& l, const Point& u,
                                                    std::span<const Point> sequence) {
  Decomposition G = Decomposition::starting(l, u);
  VDecomposition V = VDecomposition::starting(l, u);
  for (std::size_t s = 0; s < sequence.size(); ++s) {
    step_generic(G, sequence[s], RedundancyFilter::Global);
    step_vsplit(V, sequence[s]);
    auto gu = upper_bounds(G);
    auto vu = upper_bounds(V);
    std::sort(gu.begin(), gu.end(), lex_less);
    std::sort(vu.begin(), vu.end(), lex_less);
    if (gu != vu) {
      return "after inserting " + to_string(sequence[s]) + " (step " + std::to_string(s + 1) +
             "): full split gives " + describe_multiset(gu) + ", v-split gives " +
             describe_multiset(vu);
    }
  }
  return std::nullopt;
}

}  // namespace regionsplit
