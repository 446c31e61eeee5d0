// Scalarized subproblems over a box: epsilon-constraint and weighted
// Tchebycheff, each as a two-stage or an augmented formulation.
//
// Both formulations return nondominated points. Two-stage: solve the scalar
// problem, then minimize the objective sum over {z <= z*}. Augmented: one
// solve of  primary * D + sum(z)  with D larger than the spread of sum(z)
// over the box, which on integer data is exactly the lexicographic order
// (primary, sum).

#ifndef REGIONSPLIT_SCALARIZE_HPP
#define REGIONSPLIT_SCALARIZE_HPP

#include <optional>
#include <span>
#include <vector>

#include "regionsplit/core.hpp"

namespace regionsplit {

/// Objective values can exceed 64 bits for large boxes (products of ranges).
using Wide = __int128;

enum class Method { EpsilonConstraint, WeightedTchebycheff };
enum class Variant { TwoStage, Augmented };

struct ScalarizationConfig {
  Method method = Method::WeightedTchebycheff;
  Variant variant = Variant::TwoStage;
  Eigen::Index objective_index = 0;   // minimized component for epsilon-constraint
  Scalar rho_denominator_slack = 1;   // D = slack + sum(u_i - l_i)
};

struct Subproblem {
  Method method = Method::EpsilonConstraint;
  Variant variant = Variant::TwoStage;
  Point upper;                      // z_i <= upper_i - 1 on every bounded component
  Eigen::Index free_index = -1;     // unbounded component (epsilon-constraint objective)
  Eigen::Index objective_index = 0;
  Point reference;                  // Tchebycheff reference point r = l - 1
  std::vector<Wide> scale;          // Tchebycheff term i: (z_i - r_i) * scale[i]
  Wide augmentation = 0;            // D of the augmented objective; 0 for two-stage
  std::optional<Point> lock;        // second stage: z <= lock
};

Subproblem build_epsilon_constraint(const Point& u, const Point& l,
                                    const ScalarizationConfig& cfg);

Subproblem build_tchebycheff(const Point& u, const Point& l, const ScalarizationConfig& cfg);

/// Dispatches on cfg.method.
Subproblem build_subproblem(const Point& u, const Point& l, const ScalarizationConfig& cfg);

/// Stage two of a two-stage subproblem: min sum(z) subject to z <= zstar.
Subproblem second_stage(const Subproblem& sub, const Point& zstar);

bool feasible(const Subproblem& sub, const Point& z);

/// The scalar criterion before augmentation: z_obj or the weighted max term.
Wide primary_value(const Subproblem& sub, const Point& z);

/// The value a single solve minimizes (primary, or primary * D + sum(z)).
Wide objective_value(const Subproblem& sub, const Point& z);

/// Optimal outcome over Z, both stages for TwoStage; nullopt if no outcome
/// satisfies the bounds. Ties go to the lexicographically smallest point.
std::optional<Point> evaluate(const Subproblem& sub, std::span<const Point> Z);

inline std::optional<Point> evaluate(const Subproblem& sub, const OutcomeSet& Z) {
  return evaluate(sub, std::span<const Point>(Z.points()));
}

const char* to_string(Method m);
const char* to_string(Variant v);

}  // namespace regionsplit

#endif  // REGIONSPLIT_SCALARIZE_HPP
