#include <gtest/gtest.h>

#include <random>

#include "starlit/oracle.hpp"
#include "starlit/verifier.hpp"
#include "support/brute.hpp"
#include "support/fixtures.hpp"

namespace starlit {
namespace {

using testing::colored;
using testing::ids;

TEST(Verifier, TwoColoredFourCycle) {
  const auto v = find_violation(testing::ring(4), colored({1, 2, 1, 2}));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, ViolationKind::bichromatic_cycle);
  EXPECT_EQ(v->witness, ids({0, 1, 2, 3}));
}

TEST(Verifier, TwoColoredPath) {
  const auto v = find_violation(testing::path_graph(4), colored({1, 2, 1, 2}));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, ViolationKind::bichromatic_path);
  EXPECT_EQ(v->witness, ids({0, 1, 2, 3}));
}

TEST(Verifier, ThreeColoredFourCycleIsFine) {
  EXPECT_FALSE(find_violation(testing::ring(4), colored({1, 2, 1, 3})));
}

TEST(Verifier, ImproperPairComesFirst) {
  const auto v = find_violation(testing::path_graph(4), colored({1, 2, 1, 1}));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, ViolationKind::improper);
  EXPECT_EQ(v->witness, ids({2, 3}));
}

TEST(Verifier, ParallelPairMustDiffer) {
  const auto v = find_violation(testing::bundle(2), colored({4, 4}));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, ViolationKind::improper);
}

TEST(Verifier, PartialColoringRejectedByTotalCheck) {
  EdgeColoring c(4);
  c.set(EdgeId{0u}, 1);
  EXPECT_THROW(find_violation(testing::ring(4), c), InputError);
  EXPECT_THROW(find_violation(testing::ring(4), colored({1, 2, 3})), InputError);
}

TEST(Verifier, PartialExamples) {
  EXPECT_FALSE(find_violation_partial(named_graph("k4"), EdgeColoring(6)));

  EdgeColoring three(4);
  three.set(EdgeId{0u}, 1);
  three.set(EdgeId{1u}, 2);
  three.set(EdgeId{2u}, 1);
  EXPECT_FALSE(find_violation_partial(testing::ring(4), three));

  EdgeColoring clash(3);
  clash.set(EdgeId{0u}, 5);
  clash.set(EdgeId{1u}, 5);
  const auto v = find_violation_partial(testing::path_graph(3), clash);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, ViolationKind::improper);
  EXPECT_EQ(v->witness, ids({0, 1}));
}

TEST(Verifier, RespectsLists) {
  ListAssignment lists(1);
  lists[EdgeId{0u}] = {1, 2, 3};
  EXPECT_TRUE(respects_lists(colored({3}), lists));
  EXPECT_FALSE(respects_lists(colored({4}), lists));
  EXPECT_TRUE(respects_lists(EdgeColoring(1), lists));
}

TEST(Verifier, AgreesWithTupleEnumeration) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<Color> col(1, 3);
  std::size_t violations = 0;
  for (int round = 0; round < 400; ++round) {
    const auto g = brute::random_small_subcubic(8, 12, rng);
    std::vector<Color> colors(g.edge_count());
    for (auto& c : colors) c = col(rng);
    const auto c = brute::coloring_of(colors);
    const auto v = find_violation(g, c);
    ASSERT_EQ(v.has_value(), !brute::is_star(g, colors)) << "round " << round;
    if (!v) continue;
    ++violations;
    EXPECT_TRUE(brute::is_witness(g, colors, v->witness));
    EXPECT_TRUE(find_violation_partial(g, c));
  }
  EXPECT_GT(violations, 50u);
}

TEST(Verifier, PartialAgreesWithTupleEnumeration) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<Color> col(0, 3);
  for (int round = 0; round < 300; ++round) {
    const auto g = brute::random_small_subcubic(8, 11, rng);
    std::vector<std::optional<Color>> colors(g.edge_count());
    EdgeColoring c(g.edge_count());
    for (std::size_t i = 0; i < colors.size(); ++i) {
      if (Color x = col(rng)) {
        colors[i] = x;
        c.set(EdgeId{i}, x);
      }
    }
    EXPECT_EQ(find_violation_partial(g, c).has_value(), !brute::is_star_partial(g, colors)) << "round " << round;
  }
}

TEST(Verifier, InvolvingMatchesBeforeAndAfter) {
  // A violation appears when e is colored iff find_violation_involving sees it.
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<Color> col(1, 3);
  for (int round = 0; round < 300; ++round) {
    const auto g = brute::random_small_subcubic(8, 11, rng);
    if (g.edge_count() == 0) continue;
    EdgeColoring c(g.edge_count());
    std::size_t last = 0;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      c.set(EdgeId{i}, col(rng));
      if (find_violation_partial(g, c)) {
        last = i;
        break;
      }
      last = i;
    }
    const bool now = find_violation_partial(g, c).has_value();
    EXPECT_EQ(find_violation_involving(g, c, EdgeId{last}).has_value(), now);
  }
}

}  // namespace
}  // namespace starlit
