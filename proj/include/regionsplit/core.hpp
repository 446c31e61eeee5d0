// Exact integer outcome vectors, dominance relations and nondominated filtering.
//
// All outcome data lives on an integer grid (grid unit 1), so every strict
// inequality z_i < u_i used by the search-region code is the exact test
// z_i <= u_i - 1. Objectives are always minimized.

#ifndef REGIONSPLIT_CORE_HPP
#define REGIONSPLIT_CORE_HPP

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace regionsplit {

using Scalar = std::int64_t;
using Point = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Raised for caller mistakes: bad dimensions, empty inputs, inconsistent flags.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an algorithm is handed a state its invariants rule out
/// (e.g. inserting a point that lies in no box).
class InconsistentState : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Dominance {
  StrictlyDominates,    // z_i <  zbar_i for all i
  Dominates,            // z_i <= zbar_i for all i, some strict, some tie
  Equal,
  IsDominated,
  IsStrictlyDominated,
  Incomparable,
};

const char* to_string(Dominance d);

/// The relation seen from the other side: compare(b, a) == mirror(compare(a, b)).
constexpr Dominance mirror(Dominance d) {
  switch (d) {
    case Dominance::StrictlyDominates: return Dominance::IsStrictlyDominated;
    case Dominance::Dominates: return Dominance::IsDominated;
    case Dominance::IsDominated: return Dominance::Dominates;
    case Dominance::IsStrictlyDominated: return Dominance::StrictlyDominates;
    default: return d;
  }
}

Point make_point(std::initializer_list<Scalar> coords);

std::string to_string(const Point& z);

/// Lexicographic order on coordinates; the deterministic tie-break used everywhere.
bool lex_less(const Point& a, const Point& b);

template <typename DerivedA, typename DerivedB>
Dominance compare(const Eigen::MatrixBase<DerivedA>& z,
                  const Eigen::MatrixBase<DerivedB>& zbar) {
  if (z.size() != zbar.size()) {
    throw UsageError("compare: dimension mismatch (" + std::to_string(z.size()) +
                     " vs " + std::to_string(zbar.size()) + ")");
  }
  Eigen::Index less = 0;
  Eigen::Index greater = 0;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    if (z(i) < zbar(i)) {
      ++less;
    } else if (z(i) > zbar(i)) {
      ++greater;
    }
  }
  const Eigen::Index n = z.size();
  if (less > 0 && greater > 0) return Dominance::Incomparable;
  if (less == n) return Dominance::StrictlyDominates;
  if (greater == n) return Dominance::IsStrictlyDominated;
  if (less > 0) return Dominance::Dominates;
  if (greater > 0) return Dominance::IsDominated;
  return Dominance::Equal;
}

/// z <= zbar with at least one strict component (the Pareto dominance of minimization).
template <typename DerivedA, typename DerivedB>
bool dominates(const Eigen::MatrixBase<DerivedA>& z, const Eigen::MatrixBase<DerivedB>& zbar) {
  const Dominance d = compare(z, zbar);
  return d == Dominance::StrictlyDominates || d == Dominance::Dominates;
}

/// Componentwise z <= zbar, equality allowed.
template <typename DerivedA, typename DerivedB>
bool weakly_dominates(const Eigen::MatrixBase<DerivedA>& z,
                      const Eigen::MatrixBase<DerivedB>& zbar) {
  return (z.array() <= zbar.array()).all();
}

/// A finite set of distinct outcome vectors of a common dimension m >= 2.
class OutcomeSet {
 public:
  OutcomeSet() = default;

  /// Throws UsageError on m < 2, a wrong-length point, or a repeated point.
  OutcomeSet(Eigen::Index m, std::vector<Point> points);

  /// Like the constructor but silently drops repeats (first occurrence wins).
  static OutcomeSet deduplicated(Eigen::Index m, std::vector<Point> points);

  Eigen::Index dim() const { return m_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<Point>& points() const { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

 private:
  Eigen::Index m_ = 0;
  std::vector<Point> points_;
};

/// Points of Z not dominated by any other point of Z, in input order.
OutcomeSet filter_nondominated(const OutcomeSet& Z);

/// Componentwise minimum z^I.
Point ideal_point(const OutcomeSet& Z);

/// Componentwise maximum plus delta; strictly above every point of Z.
Point upper_bound_point(const OutcomeSet& Z, Scalar delta);

/// True if no two points share a value in any single component.
bool pairwise_distinct_components(const std::vector<Point>& points);

}  // namespace regionsplit

#endif  // REGIONSPLIT_CORE_HPP
