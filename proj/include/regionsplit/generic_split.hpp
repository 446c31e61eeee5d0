// Search-region decomposition by full m-splits, for any m >= 2.
//
// A box is the half-open region {z : l <= z < u}. Every box of a decomposition
// shares the same lower bound l (the ideal point), so a box is stored as its
// upper bound u and an id.

#ifndef REGIONSPLIT_GENERIC_SPLIT_HPP
#define REGIONSPLIT_GENERIC_SPLIT_HPP

#include <cstdint>
#include <vector>

#include "regionsplit/core.hpp"

namespace regionsplit {

using BoxId = std::uint64_t;

struct Box {
  Point u;
  BoxId id = 0;
};

struct Decomposition {
  Point l;
  std::vector<Box> boxes;  // creation order
  BoxId next_id = 0;

  /// One starting box {l <= z < u}; requires u > l componentwise.
  static Decomposition starting(Point l, Point u);

  Eigen::Index dim() const { return l.size(); }
  bool empty() const { return boxes.empty(); }
};

/// Starting box from the ideal point and the componentwise max of Z plus delta.
Decomposition init_starting_box(const OutcomeSet& Z, Scalar delta = 1);

/// z < u(B) componentwise. The lower bound is not tested: it is the ideal point.
template <typename Derived>
bool box_contains(const Point& u, const Eigen::MatrixBase<Derived>& z) {
  return (z.array() < u.array()).all();
}

inline bool box_contains(const Box& B, const Point& z) { return box_contains(B.u, z); }

struct SplitChild {
  Eigen::Index component;
  Box box;
};

/// Children {z in B : z_i < zs_i}, one per component with zs_i > l_i.
/// Fresh ids are drawn from `next_id`. Throws UsageError if zs is not in B.
std::vector<SplitChild> full_m_split(const Box& B, const Point& zs, const Point& l,
                                     BoxId& next_id);

/// Per split component, the children created in one iteration.
using ComponentGroups = std::vector<std::vector<Box>>;

/// Drops every box whose u is componentwise <= the u of another member of its
/// own group. Of two boxes with equal u, the older one is kept. Boxes of
/// different groups are never compared.
ComponentGroups remove_redundant(ComponentGroups groups);

/// Drops every box dominated by any other box of the list (same tie rule).
/// O(k^2); used to cross-check the per-group filter.
std::vector<Box> remove_redundant_global(std::vector<Box> boxes);

enum class RedundancyFilter { PerComponent, Global };

struct GenericStepReport {
  std::size_t containing = 0;  // boxes that held the point and were split
  std::size_t children = 0;    // split children before filtering
  std::size_t added = 0;       // children that survived filtering
  std::size_t removed_redundant = 0;
};

/// Inserts a new nondominated point: every box containing it is replaced by
/// its full m-split children, then redundant children are filtered.
/// Throws InconsistentState if no box contains zs.
GenericStepReport step_generic(Decomposition& D, const Point& zs,
                               RedundancyFilter filter = RedundancyFilter::PerComponent);

}  // namespace regionsplit

#endif  // REGIONSPLIT_GENERIC_SPLIT_HPP
