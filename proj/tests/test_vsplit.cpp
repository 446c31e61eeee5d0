#include <doctest.h>

#include "oracles.hpp"
#include "regionsplit/driver.hpp"
#include "regionsplit/vsplit.hpp"

using namespace regionsplit;

namespace {

VBox vbox(std::initializer_list<Scalar> u, std::initializer_list<Scalar> v, BoxId id = 0) {
  return VBox{make_point(u), make_point(v), id, false};
}

const VBox& find_u(const VDecomposition& D, std::initializer_list<Scalar> u) {
  const Point target = make_point(u);
  for (const auto& b : D.boxes) {
    if (b.u == target) return b;
  }
  FAIL("no box with u = " << to_string(target));
  return D.boxes.front();
}

VDecomposition five_cube() {
  return VDecomposition::starting(make_point({0, 0, 0}), make_point({5, 5, 5}));
}

std::vector<Point> uppers_of(const std::vector<VBox>& boxes) {
  std::vector<Point> out;
  for (const auto& b : boxes) out.push_back(b.u);
  return out;
}

}  // namespace

TEST_CASE("starting decomposition needs three objectives") {
  CHECK_THROWS_AS(VDecomposition::starting(make_point({0, 0}), make_point({1, 1})), UsageError);
  const auto D = five_cube();
  REQUIRE(D.boxes.size() == 1);
  CHECK(D.boxes[0].v == make_point({0, 0, 0}));
}

TEST_CASE("split components follow z >= v above the ideal point") {
  const Point l = make_point({0, 0, 0});
  const Point z = make_point({1, 1, 4});
  CHECK(v_split_components(vbox({2, 5, 5}, {0, 2, 2}), z, l) == std::vector<Eigen::Index>{0, 2});
  CHECK(v_split_components(vbox({5, 2, 5}, {2, 0, 2}), z, l) == std::vector<Eigen::Index>{1, 2});
  CHECK(v_split_components(vbox({5, 5, 5}, {2, 2, 5}), z, l).empty());
  CHECK(v_split_components(vbox({5, 5, 5}, {0, 0, 0}), make_point({0, 2, 2}), l) ==
        std::vector<Eigen::Index>{1, 2});
}

TEST_CASE("two insertions without ties") {
  VDecomposition D = five_cube();
  step_vsplit(D, make_point({2, 2, 2}));
  CHECK(find_u(D, {2, 5, 5}).v == make_point({0, 2, 2}));
  CHECK(find_u(D, {5, 2, 5}).v == make_point({2, 0, 2}));
  CHECK(find_u(D, {5, 5, 2}).v == make_point({2, 2, 0}));

  VDecomposition probe = D;
  const NewBoxes nb = generate_new_boxes_vsplit(probe, make_point({1, 1, 4}));
  CHECK(oracle::keys(uppers_of(nb.by_component[0])) == oracle::keys({make_point({1, 5, 5})}));
  CHECK(oracle::keys(uppers_of(nb.by_component[1])) == oracle::keys({make_point({5, 1, 5})}));
  CHECK(oracle::keys(uppers_of(nb.by_component[2])) ==
        oracle::keys({make_point({2, 5, 4}), make_point({5, 2, 4})}));
  CHECK(nb.profile.containing == 2);
  CHECK(nb.profile.by_count[2] == 2);
  CHECK(probe.boxes.size() == 1);

  const auto rep = step_vsplit(D, make_point({1, 1, 4}));
  CHECK(rep.boxes_after - rep.boxes_before == 2);
  REQUIRE(D.boxes.size() == 5);
  CHECK(find_u(D, {1, 5, 5}).v == make_point({0, 1, 4}));
  CHECK(find_u(D, {5, 1, 5}).v == make_point({1, 0, 4}));
  CHECK(find_u(D, {2, 5, 4}).v == make_point({1, 2, 2}));
  CHECK(find_u(D, {5, 2, 4}).v == make_point({2, 1, 2}));
  CHECK(find_u(D, {5, 5, 2}).v == make_point({2, 2, 0}));
  for (const auto& b : D.boxes) CHECK_FALSE(b.quasi);
}

TEST_CASE("update of sibling lower bounds") {
  std::array<std::vector<VBox>, 3> groups;
  groups[2] = {vbox({5, 2, 4}, {2, 0, 2}, 7), vbox({2, 5, 4}, {0, 2, 2}, 6)};
  groups[0] = {vbox({1, 5, 5}, {0, 2, 2}, 5)};
  update_individual_subsets(groups, make_point({1, 1, 4}));
  CHECK(groups[2][0].u == make_point({2, 5, 4}));
  CHECK(groups[2][0].v == make_point({1, 2, 2}));
  CHECK(groups[2][1].v == make_point({2, 1, 2}));
  CHECK(groups[0][0].v == make_point({0, 1, 4}));

  // Equal u_j: order by u_k descending.
  std::array<std::vector<VBox>, 3> tied;
  tied[1] = {vbox({3, 5, 4}, {3, 2, 1}, 9), vbox({3, 5, 5}, {0, 1, 4}, 8)};
  tied[1][0].u(1) = 2;
  tied[1][1].u(1) = 2;
  update_individual_subsets(tied, make_point({2, 2, 2}));
  CHECK(tied[1][0].u == make_point({3, 2, 5}));
  CHECK(tied[1][0].v == make_point({2, 1, 4}));
  CHECK(tied[1][1].u == make_point({3, 2, 4}));
  CHECK(tied[1][1].v == make_point({3, 2, 2}));
}

TEST_CASE("three insertions with tied components keep a covered box") {
  VDecomposition D = five_cube();
  step_vsplit(D, make_point({3, 1, 4}));
  step_vsplit(D, make_point({3, 2, 1}));
  REQUIRE(D.boxes.size() == 5);
  CHECK(find_u(D, {3, 5, 5}).v == make_point({0, 1, 4}));
  CHECK(find_u(D, {5, 1, 5}).v == make_point({3, 0, 4}));
  CHECK(find_u(D, {3, 5, 4}).v == make_point({3, 2, 1}));
  CHECK(find_u(D, {3, 5, 4}).quasi);
  CHECK(find_u(D, {5, 2, 4}).v == make_point({3, 1, 1}));
  CHECK(find_u(D, {5, 5, 1}).v == make_point({3, 2, 0}));

  VDecomposition probe = D;
  const NewBoxes nb = generate_new_boxes_vsplit(probe, make_point({2, 2, 2}));
  CHECK(oracle::keys(uppers_of(nb.by_component[0])) == oracle::keys({make_point({2, 5, 5})}));
  CHECK(oracle::keys(uppers_of(nb.by_component[1])) ==
        oracle::keys({make_point({3, 2, 5}), make_point({3, 2, 4})}));
  CHECK(oracle::keys(uppers_of(nb.by_component[2])) == oracle::keys({make_point({3, 5, 2})}));

  step_vsplit(D, make_point({2, 2, 2}));
  REQUIRE(D.boxes.size() == 7);
  CHECK(find_u(D, {2, 5, 5}).v == make_point({0, 2, 2}));
  CHECK(find_u(D, {3, 2, 5}).v == make_point({2, 1, 4}));
  CHECK(find_u(D, {3, 2, 4}).v == make_point({3, 2, 2}));
  CHECK(find_u(D, {3, 2, 4}).quasi);
  CHECK(find_u(D, {3, 5, 2}).v == make_point({2, 2, 1}));
  CHECK(find_u(D, {5, 1, 5}).v == make_point({3, 0, 4}));
  CHECK(find_u(D, {5, 2, 4}).v == make_point({3, 1, 1}));
  CHECK(find_u(D, {5, 5, 1}).v == make_point({3, 2, 0}));
  int quasi = 0;
  for (const auto& b : D.boxes) quasi += b.quasi ? 1 : 0;
  CHECK(quasi == 1);
}

TEST_CASE("a point below both siblings splits each box once") {
  VDecomposition D = five_cube();
  step_vsplit(D, make_point({2, 2, 2}));
  const std::size_t before = D.boxes.size();
  const auto rep = step_vsplit(D, make_point({1, 1, 1}));
  CHECK(rep.profile.containing == 3);
  CHECK(rep.profile.by_count[1] == 3);
  CHECK(D.boxes.size() == before);
}

TEST_CASE("a box with v above the point is removed without children") {
  VDecomposition D = five_cube();
  D.boxes[0].v = make_point({3, 3, 3});
  const auto rep = step_vsplit(D, make_point({1, 1, 1}));
  CHECK(rep.profile.by_count[0] == 1);
  CHECK(D.boxes.empty());
}

TEST_CASE("a point in no box is an inconsistent state and leaves D untouched") {
  VDecomposition D = five_cube();
  step_vsplit(D, make_point({2, 2, 2}));
  const auto before = D.boxes.size();
  CHECK_THROWS_AS(step_vsplit(D, make_point({3, 3, 3})), InconsistentState);
  CHECK(D.boxes.size() == before);
}

TEST_CASE("exclusion suppresses one child") {
  VDecomposition D = five_cube();
  const BoxId first = D.boxes[0].id;
  step_vsplit(D, make_point({2, 2, 2}), SplitExclusion{first, 0});
  CHECK(D.boxes.size() == 2);
  for (const auto& b : D.boxes) CHECK(b.u(0) == 5);
}

TEST_CASE("random insertions: v-split equals globally filtered full split without ties") {
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 40; ++rep) {
    const auto N = oracle::distinct_front(rng, 25);
    std::vector<Point> all = N;
    const OutcomeSet Z(3, all);
    const Point l = ideal_point(Z);
    const Point u = upper_bound_point(Z, 1);
    VDecomposition D = VDecomposition::starting(l, u);
    std::vector<Point> ref{u};
    std::vector<Point> inserted;
    for (const auto& z : N) {
      const auto r = step_vsplit(D, z);
      ref = oracle::split_and_filter(ref, z, l);
      inserted.push_back(z);
      CHECK(oracle::keys(uppers_of(D.boxes)) == oracle::keys(ref));
      CHECK(r.boxes_after <= r.boxes_before + 2);
      CHECK(r.loose_pairs == 0);
      CHECK(verify_correctness(D, inserted, Z));
      for (const auto& b : D.boxes) {
        CHECK_FALSE(b.quasi);
        CHECK((b.v.array() < b.u.array()).all());
        CHECK((b.v.array() >= l.array()).all());
      }
    }
    CHECK_FALSE(compare_split_strategies(l, u, N).has_value());
  }
}

TEST_CASE("random insertions with ties: correctness, growth, flags") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 60; ++rep) {
    const auto pts = oracle::random_points(rng, 3, 80, 8);
    const auto N = oracle::nondominated(pts);
    const OutcomeSet Z(3, pts);
    VDecomposition D = init_starting_box_vsplit(Z);
    std::vector<Point> inserted;
    for (const auto& z : N) {
      const auto r = step_vsplit(D, z);
      inserted.push_back(z);
      CHECK(r.boxes_after <= r.boxes_before + 2);
      if (r.profile.by_count[3] > 0) CHECK(r.profile.containing == 1);
      CHECK(r.profile.by_count[2] <= 3);
      if (r.profile.by_count[2] == 3) CHECK(r.profile.by_count[0] >= 1);
      CHECK(verify_correctness(D, inserted, Z));
      VDecomposition fresh = D;
      recompute_quasi_flags(fresh);
      for (std::size_t q = 0; q < D.boxes.size(); ++q) {
        const auto& b = D.boxes[q];
        CHECK(b.quasi == fresh.boxes[q].quasi);
        CHECK((b.v.array() <= b.u.array()).all());
        // With ties, an unflagged box can have an empty V only next to a twin.
        if (!b.quasi && !(b.v.array() < b.u.array()).all()) {
          CHECK(std::count_if(D.boxes.begin(), D.boxes.end(),
                              [&](const VBox& o) { return o.u == b.u; }) > 1);
        }
      }
    }
  }
}

TEST_CASE("covered_by_other on boxes with equal u") {
  std::vector<VBox> boxes{vbox({3, 3, 3}, {0, 0, 0}, 1), vbox({3, 3, 3}, {1, 1, 1}, 4)};
  CHECK_FALSE(covered_by_other(boxes[0], boxes));
  CHECK(covered_by_other(boxes[1], boxes));
  // An empty individual subset decides before the id.
  boxes[0].v = make_point({3, 0, 2});
  CHECK(covered_by_other(boxes[0], boxes));
  CHECK_FALSE(covered_by_other(boxes[1], boxes));
}

TEST_CASE("twin boxes after a tie, both with an empty individual subset") {
  VDecomposition D = VDecomposition::starting(make_point({2, 2, 0}), make_point({5, 5, 5}));
  for (auto z : {make_point({3, 4, 0}), make_point({3, 2, 2}), make_point({2, 4, 4})}) step_vsplit(D, z);
  std::vector<const VBox*> twins;
  for (const auto& b : D.boxes) {
    if (b.u == make_point({3, 4, 5})) twins.push_back(&b);
  }
  REQUIRE(twins.size() == 2);
  CHECK(twins[0]->v == make_point({3, 2, 2}));
  CHECK_FALSE(twins[0]->quasi);
  CHECK(twins[1]->v == make_point({2, 4, 4}));
  CHECK(twins[1]->quasi);
}

TEST_CASE("removing an empty box clears the flags it caused") {
  VDecomposition D = five_cube();
  step_vsplit(D, make_point({3, 1, 4}));
  step_vsplit(D, make_point({3, 2, 1}));
  const BoxId cover = find_u(D, {3, 5, 5}).id;
  erase_box(D, cover);
  CHECK(D.boxes.size() == 4);
  CHECK_FALSE(find_u(D, {3, 5, 4}).quasi);
}
