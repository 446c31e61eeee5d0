#include "regionsplit/generic_split.hpp"

#include <algorithm>

namespace regionsplit {

namespace {

// `b` is redundant next to `other` if u(b) <= u(other); of two equal boxes the
// younger one goes.
bool redundant_next_to(const Box& b, const Box& other) {
  if (b.id == other.id) return false;
  if (!weakly_dominates(b.u, other.u)) return false;
  return b.u != other.u || other.id < b.id;
}

std::vector<Box> filter_group(const std::vector<Box>& group) {
  std::vector<Box> kept;
  kept.reserve(group.size());
  for (const Box& b : group) {
    const bool redundant = std::any_of(group.begin(), group.end(),
                                       [&](const Box& o) { return redundant_next_to(b, o); });
    if (!redundant) kept.push_back(b);
  }
  return kept;
}

}  // namespace

Decomposition Decomposition::starting(Point l, Point u) {
  if (l.size() < 2 || l.size() != u.size()) {
    throw UsageError("starting box needs matching bounds of dimension >= 2");
  }
  if (!(u.array() > l.array()).all()) {
    throw UsageError("starting box upper bound " + to_string(u) +
                     " must exceed the lower bound " + to_string(l));
  }
  Decomposition D;
  D.l = std::move(l);
  D.boxes.push_back(Box{std::move(u), D.next_id++});
  return D;
}

Decomposition init_starting_box(const OutcomeSet& Z, Scalar delta) {
  return Decomposition::starting(ideal_point(Z), upper_bound_point(Z, delta));
}

std::vector<SplitChild> full_m_split(const Box& B, const Point& zs, const Point& l,
                                     BoxId& next_id) {
  if (zs.size() != B.u.size() || l.size() != B.u.size()) {
    throw UsageError("full_m_split: dimension mismatch");
  }
  if (!box_contains(B, zs)) {
    throw UsageError("full_m_split: point " + to_string(zs) + " is not inside box " +
                     std::to_string(B.id) + " with upper bound " + to_string(B.u));
  }
  std::vector<SplitChild> children;
  for (Eigen::Index i = 0; i < zs.size(); ++i) {
    if (zs(i) <= l(i)) continue;  // child would be empty
    Box child{B.u, next_id++};
    child.u(i) = zs(i);
    children.push_back(SplitChild{i, std::move(child)});
  }
  return children;
}

ComponentGroups remove_redundant(ComponentGroups groups) {
  for (auto& group : groups) group = filter_group(group);
  return groups;
}

std::vector<Box> remove_redundant_global(std::vector<Box> boxes) {
  return filter_group(boxes);
}

GenericStepReport step_generic(Decomposition& D, const Point& zs, RedundancyFilter filter) {
  if (zs.size() != D.dim()) throw UsageError("step_generic: dimension mismatch");
  GenericStepReport report;
  const BoxId first_child = D.next_id;
  ComponentGroups groups(static_cast<std::size_t>(D.dim()));
  std::vector<Box> untouched;
  untouched.reserve(D.boxes.size());
  for (const Box& B : D.boxes) {
    if (!box_contains(B, zs)) {
      untouched.push_back(B);
      continue;
    }
    ++report.containing;
    for (auto& child : full_m_split(B, zs, D.l, D.next_id)) {
      groups[static_cast<std::size_t>(child.component)].push_back(std::move(child.box));
      ++report.children;
    }
  }
  if (report.containing == 0) {
    throw InconsistentState("point " + to_string(zs) + " lies in no box of the decomposition");
  }

  if (filter == RedundancyFilter::PerComponent) {
    groups = remove_redundant(std::move(groups));
    // children keep creation order across groups
    std::vector<Box> fresh;
    for (auto& g : groups) fresh.insert(fresh.end(), g.begin(), g.end());
    std::sort(fresh.begin(), fresh.end(),
              [](const Box& a, const Box& b) { return a.id < b.id; });
    report.added = fresh.size();
    report.removed_redundant = report.children - report.added;
    untouched.insert(untouched.end(), fresh.begin(), fresh.end());
    D.boxes = std::move(untouched);
  } else {
    std::vector<Box> all = std::move(untouched);
    const std::size_t before_children = all.size();
    for (auto& g : groups) all.insert(all.end(), g.begin(), g.end());
    std::sort(all.begin() + static_cast<std::ptrdiff_t>(before_children), all.end(),
              [](const Box& a, const Box& b) { return a.id < b.id; });
    const std::size_t total = all.size();
    D.boxes = remove_redundant_global(std::move(all));
    report.removed_redundant = total - D.boxes.size();
    report.added = static_cast<std::size_t>(std::count_if(
        D.boxes.begin(), D.boxes.end(), [&](const Box& b) { return b.id >= first_child; }));
  }
  return report;
}

}  // namespace regionsplit
