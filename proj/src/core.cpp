#include "regionsplit/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace regionsplit {

const char* to_string(Dominance d) {
  switch (d) {
    case Dominance::StrictlyDominates: return "StrictlyDominates";
    case Dominance::Dominates: return "Dominates";
    case Dominance::Equal: return "Equal";
    case Dominance::IsDominated: return "IsDominated";
    case Dominance::IsStrictlyDominated: return "IsStrictlyDominated";
    case Dominance::Incomparable: return "Incomparable";
  }
  return "?";
}

Point make_point(std::initializer_list<Scalar> coords) {
  Point z(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (Scalar c : coords) z(i++) = c;
  return z;
}

std::string to_string(const Point& z) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    if (i > 0) os << ',';
    os << z(i);
  }
  os << ')';
  return os.str();
}

bool lex_less(const Point& a, const Point& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                      b.data() + b.size());
}

namespace {

void check_points(Eigen::Index m, const std::vector<Point>& points) {
  if (m < 2) {
    throw UsageError("outcome dimension must be at least 2, got " + std::to_string(m));
  }
  for (std::size_t p = 0; p < points.size(); ++p) {
    if (points[p].size() != m) {
      throw UsageError("point " + std::to_string(p) + " has dimension " +
                       std::to_string(points[p].size()) + ", expected " + std::to_string(m));
    }
  }
}

// Indices of `points` in lexicographic order, stable on equal points.
std::vector<std::size_t> lex_order(const std::vector<Point>& points) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return lex_less(points[a], points[b]);
  });
  return order;
}

void require_nonempty(const OutcomeSet& Z, const char* what) {
  if (Z.empty()) throw UsageError(std::string(what) + ": empty outcome set");
}

}  // namespace

OutcomeSet::OutcomeSet(Eigen::Index m, std::vector<Point> points)
    : m_(m), points_(std::move(points)) {
  check_points(m_, points_);
  const auto order = lex_order(points_);
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (points_[order[k - 1]] == points_[order[k]]) {
      throw UsageError("outcome set contains the point " + to_string(points_[order[k]]) +
                       " more than once (points " + std::to_string(order[k - 1]) + " and " +
                       std::to_string(order[k]) + ")");
    }
  }
}

OutcomeSet OutcomeSet::deduplicated(Eigen::Index m, std::vector<Point> points) {
  check_points(m, points);
  const auto order = lex_order(points);
  std::vector<bool> keep(points.size(), true);
  for (std::size_t k = 1; k < order.size(); ++k) {
    // stable sort keeps the first occurrence in front of its repeats
    if (points[order[k - 1]] == points[order[k]]) keep[order[k]] = false;
  }
  std::vector<Point> unique;
  unique.reserve(points.size());
  for (std::size_t p = 0; p < points.size(); ++p) {
    if (keep[p]) unique.push_back(std::move(points[p]));
  }
  return OutcomeSet(m, std::move(unique));
}

OutcomeSet filter_nondominated(const OutcomeSet& Z) {
  require_nonempty(Z, "filter_nondominated");
  // A point can only be dominated by points preceding it lexicographically, and
  // a dominated dominator implies a nondominated one, so one sweep against the
  // kept front suffices.
  const auto& pts = Z.points();
  const auto order = lex_order(pts);
  std::vector<bool> keep(pts.size(), false);
  std::vector<std::size_t> front;
  for (std::size_t idx : order) {
    const bool dominated = std::any_of(front.begin(), front.end(), [&](std::size_t f) {
      return weakly_dominates(pts[f], pts[idx]);
    });
    if (!dominated) {
      front.push_back(idx);
      keep[idx] = true;
    }
  }
  std::vector<Point> out;
  out.reserve(front.size());
  for (std::size_t p = 0; p < pts.size(); ++p) {
    if (keep[p]) out.push_back(pts[p]);
  }
  return OutcomeSet(Z.dim(), std::move(out));
}

Point ideal_point(const OutcomeSet& Z) {
  require_nonempty(Z, "ideal_point");
  Point lo = Z[0];
  for (const Point& z : Z) lo = lo.cwiseMin(z);
  return lo;
}

Point upper_bound_point(const OutcomeSet& Z, Scalar delta) {
  require_nonempty(Z, "upper_bound_point");
  if (delta < 1) throw UsageError("delta must be a positive integer");
  Point hi = Z[0];
  for (const Point& z : Z) hi = hi.cwiseMax(z);
  return hi.array() + delta;
}

bool pairwise_distinct_components(const std::vector<Point>& points) {
  if (points.empty()) return true;
  const Eigen::Index m = points.front().size();
  std::vector<Scalar> column(points.size());
  for (Eigen::Index i = 0; i < m; ++i) {
    for (std::size_t p = 0; p < points.size(); ++p) column[p] = points[p](i);
    std::sort(column.begin(), column.end());
    if (std::adjacent_find(column.begin(), column.end()) != column.end()) return false;
  }
  return true;
}

}  // namespace regionsplit
