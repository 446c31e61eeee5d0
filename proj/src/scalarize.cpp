#include "regionsplit/scalarize.hpp"

namespace regionsplit {

namespace {

void check_box(const Point& u, const Point& l) {
  if (u.size() != l.size() || u.size() < 2) {
    throw UsageError("subproblem: bound dimensions do not match");
  }
  if (!(u.array() > l.array()).all()) {
    throw UsageError("subproblem: box upper bound " + to_string(u) +
                     " must exceed the lower bound " + to_string(l));
  }
}

Wide augmentation_for(const Point& u, const Point& l, const ScalarizationConfig& cfg) {
  if (cfg.variant != Variant::Augmented) return 0;
  if (cfg.rho_denominator_slack < 1) {
    throw UsageError("rho_denominator_slack must be a positive integer");
  }
  Wide D = cfg.rho_denominator_slack;
  for (Eigen::Index i = 0; i < u.size(); ++i) D += static_cast<Wide>(u(i) - l(i));
  return D;
}

Wide coordinate_sum(const Point& z) {
  Wide s = 0;
  for (Eigen::Index i = 0; i < z.size(); ++i) s += z(i);
  return s;
}

template <typename Criterion>
std::optional<Point> argmin(const Subproblem& sub, std::span<const Point> Z, Criterion value) {
  const Point* best = nullptr;
  Wide best_value = 0;
  for (const Point& z : Z) {
    if (!feasible(sub, z)) continue;
    const Wide val = value(z);
    if (best == nullptr || val < best_value || (val == best_value && lex_less(z, *best))) {
      best = &z;
      best_value = val;
    }
  }
  if (best == nullptr) return std::nullopt;
  return *best;
}

}  // namespace

const char* to_string(Method m) {
  return m == Method::EpsilonConstraint ? "ec" : "wt";
}

const char* to_string(Variant v) {
  return v == Variant::TwoStage ? "ts" : "aug";
}

Subproblem build_epsilon_constraint(const Point& u, const Point& l,
                                    const ScalarizationConfig& cfg) {
  check_box(u, l);
  if (cfg.objective_index < 0 || cfg.objective_index >= u.size()) {
    throw UsageError("objective_index " + std::to_string(cfg.objective_index + 1) +
                     " is outside 1.." + std::to_string(u.size()));
  }
  Subproblem sub;
  sub.method = Method::EpsilonConstraint;
  sub.variant = cfg.variant;
  sub.upper = u;
  sub.free_index = cfg.objective_index;
  sub.objective_index = cfg.objective_index;
  sub.augmentation = augmentation_for(u, l, cfg);
  return sub;
}

Subproblem build_tchebycheff(const Point& u, const Point& l, const ScalarizationConfig& cfg) {
  check_box(u, l);
  Subproblem sub;
  sub.method = Method::WeightedTchebycheff;
  sub.variant = cfg.variant;
  sub.upper = u;
  sub.reference = l.array() - 1;
  // weight_i = 1 / (u_i - r_i), cleared of denominators: multiply every term by
  // the product of all ranges.
  const Eigen::Index m = u.size();
  sub.scale.assign(static_cast<std::size_t>(m), 1);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      if (j != i) {
        sub.scale[static_cast<std::size_t>(i)] *= static_cast<Wide>(u(j) - sub.reference(j));
      }
    }
  }
  sub.augmentation = augmentation_for(u, l, cfg);
  return sub;
}

Subproblem build_subproblem(const Point& u, const Point& l, const ScalarizationConfig& cfg) {
  return cfg.method == Method::EpsilonConstraint ? build_epsilon_constraint(u, l, cfg)
                                                 : build_tchebycheff(u, l, cfg);
}

Subproblem second_stage(const Subproblem& sub, const Point& zstar) {
  Subproblem next = sub;
  next.lock = zstar;
  return next;
}

bool feasible(const Subproblem& sub, const Point& z) {
  if (z.size() != sub.upper.size()) return false;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    if (i != sub.free_index && z(i) > sub.upper(i) - 1) return false;
  }
  return !sub.lock || weakly_dominates(z, *sub.lock);
}

Wide primary_value(const Subproblem& sub, const Point& z) {
  if (sub.method == Method::EpsilonConstraint) return z(sub.objective_index);
  Wide worst = 0;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    const Wide term =
        static_cast<Wide>(z(i) - sub.reference(i)) * sub.scale[static_cast<std::size_t>(i)];
    if (i == 0 || term > worst) worst = term;
  }
  return worst;
}

Wide objective_value(const Subproblem& sub, const Point& z) {
  if (sub.augmentation == 0) return primary_value(sub, z);
  return primary_value(sub, z) * sub.augmentation + coordinate_sum(z);
}

std::optional<Point> evaluate(const Subproblem& sub, std::span<const Point> Z) {
  if (sub.lock) return argmin(sub, Z, coordinate_sum);
  if (sub.variant == Variant::Augmented) {
    return argmin(sub, Z, [&](const Point& z) { return objective_value(sub, z); });
  }
  auto first = argmin(sub, Z, [&](const Point& z) { return primary_value(sub, z); });
  if (!first) return std::nullopt;
  return argmin(second_stage(sub, *first), Z, coordinate_sum);
}

}  // namespace regionsplit
