#include "regionsplit/solvers.hpp"

#include <numeric>
#include <random>

namespace regionsplit {

void KnapsackInstance::validate() const {
  for (std::size_t r = 0; r < 3; ++r) {
    if (profits[r].size() != n || weights[r].size() != n) {
      throw UsageError("knapsack row " + std::to_string(r + 1) + " does not have n = " +
                       std::to_string(n) + " entries");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (profits[r][j] < 0 || weights[r][j] < 0) {
        throw UsageError("knapsack profits and weights must be non-negative");
      }
    }
    if (capacities[r] < 0) throw UsageError("knapsack capacities must be non-negative");
  }
}

namespace {

// Depth-first over items, pruning branches that break a capacity.
struct Enumerator {
  const KnapsackInstance& inst;
  std::array<Scalar, 3> load{};
  std::array<Scalar, 3> profit{};
  std::vector<Point> found;

  void visit(std::size_t item) {
    if (item == inst.n) {
      found.push_back(make_point({-profit[0], -profit[1], -profit[2]}));
      return;
    }
    visit(item + 1);
    bool fits = true;
    for (std::size_t r = 0; r < 3; ++r) {
      if (load[r] + inst.weights[r][item] > inst.capacities[r]) fits = false;
    }
    if (!fits) return;
    for (std::size_t r = 0; r < 3; ++r) {
      load[r] += inst.weights[r][item];
      profit[r] += inst.profits[r][item];
    }
    visit(item + 1);
    for (std::size_t r = 0; r < 3; ++r) {
      load[r] -= inst.weights[r][item];
      profit[r] -= inst.profits[r][item];
    }
  }
};

}  // namespace

OutcomeSet materialize_outcomes(const KnapsackInstance& inst, std::size_t cap) {
  inst.validate();
  if (inst.n > cap) {
    throw UsageError("knapsack has n = " + std::to_string(inst.n) +
                     " items; outcome enumeration is capped at n = " + std::to_string(cap) +
                     ", lower n");
  }
  Enumerator e{inst, {}, {}, {}};
  e.visit(0);
  return OutcomeSet::deduplicated(3, std::move(e.found));
}

KnapsackInstance generate_knapsack(std::size_t n, std::uint64_t seed) {
  if (n < 1 || n > kDefaultEnumerationCap) {
    throw UsageError("knapsack generator needs 1 <= n <= " +
                     std::to_string(kDefaultEnumerationCap) + ", got n = " + std::to_string(n));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Scalar> draw(10, 100);
  KnapsackInstance inst;
  inst.n = n;
  for (auto& row : inst.profits) {
    row.resize(n);
    for (auto& p : row) p = draw(rng);
  }
  for (std::size_t r = 0; r < 3; ++r) {
    auto& row = inst.weights[r];
    row.resize(n);
    for (auto& w : row) w = draw(rng);
    inst.capacities[r] = std::accumulate(row.begin(), row.end(), Scalar{0}) / 2;
  }
  return inst;
}

KnapsackBackend::KnapsackBackend(KnapsackInstance inst, std::size_t cap)
    : inst_(std::move(inst)), Z_(materialize_outcomes(inst_, cap)) {}

const OutcomeSet& outcomes(const SolverBackend& backend) {
  return std::visit([](const auto& b) -> const OutcomeSet& { return b.outcomes(); }, backend);
}

std::optional<Point> solve(const SolverBackend& backend, const Subproblem& sub) {
  return evaluate(sub, outcomes(backend));
}

}  // namespace regionsplit
