// The outer loop: pick a box, solve its subproblem, then either drop the box
// (nothing inside) or insert the new point and split. Optionally checks the
// decomposition invariants after every iteration.

#ifndef REGIONSPLIT_DRIVER_HPP
#define REGIONSPLIT_DRIVER_HPP

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "regionsplit/core.hpp"
#include "regionsplit/generic_split.hpp"
#include "regionsplit/scalarize.hpp"
#include "regionsplit/solvers.hpp"
#include "regionsplit/vsplit.hpp"

namespace regionsplit {

enum class Algorithm { GenericFullSplit, VSplit };

/// FirstInList takes the oldest box. MinV1 takes the box with the smallest
/// v_1 (ties by id); it is only meaningful for the v-split with the
/// epsilon-constraint method on component 1, where it lets the selected box
/// skip its component-1 split.
enum class SelectionRule { FirstInList, MinV1 };

struct RunConfig {
  Algorithm algorithm = Algorithm::VSplit;
  ScalarizationConfig scalarization;
  SelectionRule selection = SelectionRule::FirstInList;
  Scalar delta = 1;
  bool verify_invariants = false;
  RedundancyFilter generic_filter = RedundancyFilter::PerComponent;
  std::optional<std::size_t> max_iterations;  // stop early, keeping the decomposition
  // Test hook: after this iteration, delete a box that still holds an
  // unfound nondominated point.
  std::optional<std::size_t> drop_box_after_iteration;
};

/// Throws UsageError if the configuration cannot run on dimension m.
void validate(const RunConfig& cfg, Eigen::Index m);

struct IterationRecord {
  std::size_t iter = 0;  // 1-based
  BoxId box_id = 0;
  std::optional<Point> point;
  std::size_t boxes_after = 0;
};

struct RunStats {
  std::size_t subproblems_solved = 0;
  std::size_t points_found = 0;
  std::size_t infeasible = 0;
  std::size_t boxes_created = 0;
  std::size_t boxes_removed = 0;
  std::size_t quasi_boxes_created = 0;
  std::vector<std::size_t> per_iteration_box_counts;  // after each iteration
  std::optional<std::size_t> bound_value;
};

using DecompositionState = std::variant<Decomposition, VDecomposition>;

struct RunResult {
  OutcomeSet nondominated;  // discovery order
  RunStats stats;
  std::vector<IterationRecord> log;
  std::vector<std::string> violations;  // filled in verification mode
  DecompositionState final_state;
};

RunResult run(const SolverBackend& backend, const RunConfig& cfg);

/// Extensional correctness on Z: every z lies in some box exactly when no
/// inserted point is <= z. Returns a description of the first violation.
std::optional<std::string> find_correctness_violation(std::span<const Point> upper_bounds,
                                                      std::span<const Point> inserted,
                                                      const OutcomeSet& Z);

bool verify_correctness(const Decomposition& D, std::span<const Point> inserted,
                        const OutcomeSet& Z);
bool verify_correctness(const VDecomposition& D, std::span<const Point> inserted,
                        const OutcomeSet& Z);

std::vector<Point> upper_bounds(const Decomposition& D);
std::vector<Point> upper_bounds(const VDecomposition& D);

/// The subproblem bound that applies to cfg on dimension m, if one is known:
/// 2|N|-1 for m = 2 and for the v-split with epsilon-constraint and MinV1;
/// 3|N|-2 for other v-split runs (3|N|+1 when |N| < 3); none for the generic
/// split with m >= 3.
std::optional<std::size_t> applicable_bound(const RunConfig& cfg, Eigen::Index m,
                                            std::size_t nondominated_count);

/// subproblems_solved <= bound; vacuously true when no bound applies.
bool check_bound(const RunStats& stats, std::size_t nondominated_count, const RunConfig& cfg,
                 Eigen::Index m);

Decomposition replay_generic(const Point& l, const Point& u, std::span<const Point> sequence,
                             RedundancyFilter filter);
VDecomposition replay_vsplit(const Point& l, const Point& u, std::span<const Point> sequence);

/// Inserts `sequence` into a v-split and a globally filtered full-split
/// decomposition side by side and compares the multisets of upper bounds
/// after every insertion. Returns the first difference.
std::optional<std::string> compare_split_strategies(const Point& l, const Point& u,
                                                    std::span<const Point> sequence);

const char* to_string(Algorithm a);
const char* to_string(SelectionRule s);

}  // namespace regionsplit

#endif  // REGIONSPLIT_DRIVER_HPP
