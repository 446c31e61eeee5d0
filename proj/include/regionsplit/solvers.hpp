// Subproblem backends: an explicit outcome set, and a three-objective,
// three-constraint 0-1 knapsack whose outcomes are enumerated up front.

#ifndef REGIONSPLIT_SOLVERS_HPP
#define REGIONSPLIT_SOLVERS_HPP

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "regionsplit/core.hpp"
#include "regionsplit/scalarize.hpp"

namespace regionsplit {

inline constexpr std::size_t kDefaultEnumerationCap = 20;

/// Maximize three profit rows subject to three capacity rows; items are 0-1.
struct KnapsackInstance {
  std::size_t n = 0;
  std::array<std::vector<Scalar>, 3> profits;
  std::array<std::vector<Scalar>, 3> weights;
  std::array<Scalar, 3> capacities{};

  /// Throws UsageError on ragged rows or negative data.
  void validate() const;
};

/// Outcome vectors (negated profit sums) of every feasible selection, repeats
/// removed. Throws UsageError if n exceeds `cap`.
OutcomeSet materialize_outcomes(const KnapsackInstance& inst,
                                std::size_t cap = kDefaultEnumerationCap);

/// Profits and weights uniform on [10, 100], capacity r = floor(sum of weight
/// row r / 2). Deterministic per (n, seed) with a given standard library.
/// Throws UsageError unless 1 <= n <= kDefaultEnumerationCap.
KnapsackInstance generate_knapsack(std::size_t n, std::uint64_t seed);

class ExplicitSetBackend {
 public:
  explicit ExplicitSetBackend(OutcomeSet Z) : Z_(std::move(Z)) {}
  const OutcomeSet& outcomes() const { return Z_; }

 private:
  OutcomeSet Z_;
};

class KnapsackBackend {
 public:
  explicit KnapsackBackend(KnapsackInstance inst, std::size_t cap = kDefaultEnumerationCap);
  const KnapsackInstance& instance() const { return inst_; }
  const OutcomeSet& outcomes() const { return Z_; }

 private:
  KnapsackInstance inst_;
  OutcomeSet Z_;
};

using SolverBackend = std::variant<ExplicitSetBackend, KnapsackBackend>;

const OutcomeSet& outcomes(const SolverBackend& backend);

std::optional<Point> solve(const SolverBackend& backend, const Subproblem& sub);

}  // namespace regionsplit

#endif  // REGIONSPLIT_SOLVERS_HPP
