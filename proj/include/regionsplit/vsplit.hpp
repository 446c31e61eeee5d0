// Tricriteria decomposition with v-splits.
//
// Each box carries, besides its upper bound u, the lower bound v of the part
// of the box that no other box covers:  V(B) = {z : v(B) <= z < u(B)}.
// A box containing a new point z is split with respect to component i only if
// z_i >= v_i(B) (and z_i above the ideal point), which never creates a box
// that another box already covers. The v vectors of the children are derived
// from their siblings after sorting; no neighbor lists are stored.
//
// When points tie in a component, a child may end up covered by another box.
// Such quasi-non-redundant boxes are kept (removing them would break the box
// shape of V) and carry `quasi == true`.

#ifndef REGIONSPLIT_VSPLIT_HPP
#define REGIONSPLIT_VSPLIT_HPP

#include <array>
#include <optional>
#include <vector>

#include "regionsplit/core.hpp"
#include "regionsplit/generic_split.hpp"

namespace regionsplit {

struct VBox {
  Point u;
  Point v;
  BoxId id = 0;
  bool quasi = false;
};

struct VDecomposition {
  Point l;
  std::vector<VBox> boxes;  // creation order
  BoxId next_id = 0;
  std::size_t inserted = 0;

  /// One starting box with v = l. Requires m == 3 and u > l.
  static VDecomposition starting(Point l, Point u);

  bool empty() const { return boxes.empty(); }
  const VBox* find(BoxId id) const;
};

VDecomposition init_starting_box_vsplit(const OutcomeSet& Z, Scalar delta = 1);

/// Components i (0-based) with z_i >= v_i(B) and z_i > l_i. Empty for a '0-box'.
std::vector<Eigen::Index> v_split_components(const VBox& B, const Point& z, const Point& l);

/// Suppress the split of one particular box with respect to one component.
struct SplitExclusion {
  BoxId box;
  Eigen::Index component;
};

/// How the containing boxes were split in one iteration, by number of split
/// components under the plain v-split rule.
struct SplitProfile {
  std::size_t containing = 0;
  std::array<std::size_t, 4> by_count{};  // by_count[c]: boxes split w.r.t. c components
};

struct NewBoxes {
  std::array<std::vector<VBox>, 3> by_component;  // S_1, S_2, S_3
  SplitProfile profile;
  std::vector<BoxId> removed;  // ids of the containing boxes, now gone from D
};

/// Removes every box that contains z from D and returns the v-split children
/// grouped by split component. Children inherit the parent's v; call
/// update_individual_subsets before appending them.
/// Throws InconsistentState if z lies in no box.
NewBoxes generate_new_boxes_vsplit(VDecomposition& D, const Point& z,
                                   std::optional<SplitExclusion> exclusion = std::nullopt);

/// For i = 0, 1, 2 the two remaining components, j < k.
std::array<Eigen::Index, 2> other_components(Eigen::Index i);

/// Sorts every group (u_j ascending, u_k descending; equal u by v_j ascending,
/// v_k descending; then id) and rewrites v_j, v_k from z and the sibling
/// upper bounds. v_i keeps the parent's value.
void update_individual_subsets(std::array<std::vector<VBox>, 3>& groups, const Point& z);

struct VStepReport {
  SplitProfile profile;
  std::size_t boxes_before = 0;
  std::size_t boxes_after = 0;
  std::size_t added = 0;
  // Adjacent pairs within some S_i whose upper bounds are not strictly
  // increasing in u_j and strictly decreasing in u_k (only possible with ties).
  std::size_t loose_pairs = 0;
};

/// One insertion: generate, update, append the children in id order, refresh
/// quasi flags.
VStepReport step_vsplit(VDecomposition& D, const Point& z,
                        std::optional<SplitExclusion> exclusion = std::nullopt);

/// True if another box's u is componentwise >= this box's u. Of two boxes
/// with equal u, one whose v reaches u in some component is the covered one;
/// otherwise the younger.
bool covered_by_other(const VBox& b, const std::vector<VBox>& boxes);

/// Removes a box (an empty one, after an infeasible subproblem) and clears
/// the quasi flags it was responsible for.
void erase_box(VDecomposition& D, BoxId id);

/// Recomputes every quasi flag from scratch; O(k^2).
void recompute_quasi_flags(VDecomposition& D);

}  // namespace regionsplit

#endif  // REGIONSPLIT_VSPLIT_HPP
