#include "regionsplit/vsplit.hpp"

#include <algorithm>

namespace regionsplit {

VDecomposition VDecomposition::starting(Point l, Point u) {
  if (l.size() != 3 || u.size() != 3) {
    throw UsageError("the v-split decomposition requires m = 3, got m = " +
                     std::to_string(l.size()));
  }
  if (!(u.array() > l.array()).all()) {
    throw UsageError("starting box upper bound " + to_string(u) +
                     " must exceed the lower bound " + to_string(l));
  }
  VDecomposition D;
  D.l = std::move(l);
  D.boxes.push_back(VBox{std::move(u), D.l, D.next_id++, false});
  return D;
}

const VBox* VDecomposition::find(BoxId id) const {
  auto it = std::find_if(boxes.begin(), boxes.end(), [&](const VBox& b) { return b.id == id; });
  return it == boxes.end() ? nullptr : &*it;
}

VDecomposition init_starting_box_vsplit(const OutcomeSet& Z, Scalar delta) {
  return VDecomposition::starting(ideal_point(Z), upper_bound_point(Z, delta));
}

std::vector<Eigen::Index> v_split_components(const VBox& B, const Point& z, const Point& l) {
  std::vector<Eigen::Index> J;
  for (Eigen::Index i = 0; i < 3; ++i) {
    if (z(i) >= B.v(i) && z(i) > l(i)) J.push_back(i);
  }
  return J;
}

std::array<Eigen::Index, 2> other_components(Eigen::Index i) {
  switch (i) {
    case 0: return {1, 2};
    case 1: return {0, 2};
    default: return {0, 1};
  }
}

NewBoxes generate_new_boxes_vsplit(VDecomposition& D, const Point& z,
                                   std::optional<SplitExclusion> exclusion) {
  if (z.size() != 3) throw UsageError("v-split: point must have dimension 3");
  NewBoxes out;
  std::vector<VBox> untouched;
  untouched.reserve(D.boxes.size());
  for (VBox& B : D.boxes) {
    if (!box_contains(B.u, z)) {
      untouched.push_back(std::move(B));
      continue;
    }
    ++out.profile.containing;
    out.removed.push_back(B.id);
    const auto J = v_split_components(B, z, D.l);
    ++out.profile.by_count[J.size()];
    for (Eigen::Index i : J) {
      if (exclusion && exclusion->box == B.id && exclusion->component == i) continue;
      VBox child{B.u, B.v, D.next_id++, false};
      child.u(i) = z(i);
      out.by_component[static_cast<std::size_t>(i)].push_back(std::move(child));
    }
  }
  if (out.profile.containing == 0) {
    D.boxes = std::move(untouched);
    throw InconsistentState("point " + to_string(z) + " lies in no box of the decomposition");
  }
  D.boxes = std::move(untouched);
  return out;
}

void update_individual_subsets(std::array<std::vector<VBox>, 3>& groups, const Point& z) {
  for (Eigen::Index i = 0; i < 3; ++i) {
    auto& S = groups[static_cast<std::size_t>(i)];
    if (S.empty()) continue;
    const auto [j, k] = other_components(i);
    std::sort(S.begin(), S.end(), [j = j, k = k](const VBox& a, const VBox& b) {
      if (a.u(j) != b.u(j)) return a.u(j) < b.u(j);
      if (a.u(k) != b.u(k)) return a.u(k) > b.u(k);
      if (a.v(j) != b.v(j)) return a.v(j) < b.v(j);
      if (a.v(k) != b.v(k)) return a.v(k) > b.v(k);
      return a.id < b.id;
    });
    const std::size_t Q = S.size();
    S.front().v(j) = z(j);
    S.back().v(k) = z(k);
    for (std::size_t q = 1; q < Q; ++q) {
      S[q].v(j) = S[q - 1].u(j);
      S[q - 1].v(k) = S[q].u(k);
    }
  }
}

namespace {

bool empty_subset(const VBox& b) { return !(b.v.array() < b.u.array()).all(); }

}  // namespace

bool covered_by_other(const VBox& b, const std::vector<VBox>& boxes) {
  return std::any_of(boxes.begin(), boxes.end(), [&](const VBox& o) {
    if (o.id == b.id || !weakly_dominates(b.u, o.u)) return false;
    if (b.u != o.u) return true;
    if (empty_subset(b) != empty_subset(o)) return empty_subset(b);
    return o.id < b.id;
  });
}

void erase_box(VDecomposition& D, BoxId id) {
  std::erase_if(D.boxes, [&](const VBox& b) { return b.id == id; });
  for (VBox& b : D.boxes) {
    if (b.quasi) b.quasi = covered_by_other(b, D.boxes);
  }
}

void recompute_quasi_flags(VDecomposition& D) {
  for (VBox& b : D.boxes) b.quasi = covered_by_other(b, D.boxes);
}

VStepReport step_vsplit(VDecomposition& D, const Point& z,
                        std::optional<SplitExclusion> exclusion) {
  VStepReport report;
  report.boxes_before = D.boxes.size();
  NewBoxes fresh = generate_new_boxes_vsplit(D, z, exclusion);
  update_individual_subsets(fresh.by_component, z);
  for (Eigen::Index i = 0; i < 3; ++i) {
    const auto& S = fresh.by_component[static_cast<std::size_t>(i)];
    const auto [j, k] = other_components(i);
    for (std::size_t q = 1; q < S.size(); ++q) {
      if (!(S[q - 1].u(j) < S[q].u(j) && S[q - 1].u(k) > S[q].u(k))) ++report.loose_pairs;
    }
  }

  const std::size_t first_new = D.boxes.size();
  for (auto& S : fresh.by_component) {
    for (auto& b : S) D.boxes.push_back(std::move(b));
  }
  std::sort(D.boxes.begin() + static_cast<std::ptrdiff_t>(first_new), D.boxes.end(),
            [](const VBox& a, const VBox& b) { return a.id < b.id; });

  // A new child never exceeds its parent, so besides the new children only
  // flagged boxes and older boxes with the same u as a child can change.
  const auto twin = [&](const VBox& b) {
    return std::any_of(D.boxes.begin() + static_cast<std::ptrdiff_t>(first_new), D.boxes.end(),
                       [&](const VBox& c) { return c.u == b.u; });
  };
  for (std::size_t p = 0; p < D.boxes.size(); ++p) {
    VBox& b = D.boxes[p];
    if (p >= first_new || b.quasi || twin(b)) b.quasi = covered_by_other(b, D.boxes);
  }

  ++D.inserted;
  report.profile = fresh.profile;
  report.boxes_after = D.boxes.size();
  report.added = D.boxes.size() - first_new;
  return report;
}

}  // namespace regionsplit
