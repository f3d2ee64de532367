#include <gtest/gtest.h>

#include <random>

#include "random_operad.hpp"
#include "opcalc/functors.hpp"
#include "opcalc/recognize.hpp"

using namespace opcalc;

TEST(Recognize, IdentityComesFirst) {
  OperadPresentation d = zoo_get("dend");
  auto ts = find_transforms(d, d);
  ASSERT_TRUE(ts);
  ASSERT_FALSE(ts->empty());
  EXPECT_TRUE(ts->front().is_identity());
}

TEST(Recognize, RenamedEntryIsIdentityUpToNaming) {
  OperadPresentation a = zoo_get("ass");
  OperadPresentation r = rename(a, "other", {"mu"});
  auto ts = find_transforms(r, a);
  ASSERT_TRUE(ts && !ts->empty());
  EXPECT_EQ(to_string(ts->front(), a.signature, r.signature), "identity up to naming");
  EXPECT_EQ(to_string(ts->front(), a.signature, a.signature), "identity");
}

TEST(Recognize, OppositeFlipIsFound) {
  OperadPresentation leib = zoo_get("leib");
  OperadPresentation opp = opposite_operad(leib);
  auto ts = find_transforms(opp, leib);
  ASSERT_TRUE(ts && !ts->empty());
  EXPECT_FALSE(ts->front().is_identity());
  EXPECT_TRUE(ts->front().flip[0]);
}

TEST(Recognize, GeneratorSwapInDend) {
  OperadPresentation d = zoo_get("dend");
  GenTransform t = GenTransform::identity(2);
  std::swap(t.perm[0], t.perm[1]);
  t.flip = {true, true};
  OperadPresentation moved = apply(t, d, d.signature);
  EXPECT_TRUE(equal_presentations(moved, d));
}

TEST(Recognize, ApplyInvertsFoundTransforms) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 8; ++trial) {
    OperadPresentation o = gen::random_operad(rng, 2, trial % 2, 0, 2);
    GenTransform t = GenTransform::identity(o.signature.size());
    std::shuffle(t.perm.begin(), t.perm.begin() + 2, rng);
    t.sign[0] = trial % 3 == 0 ? -1 : 1;
    t.flip[1] = trial % 2 == 0;
    OperadPresentation moved = apply(t, o, o.signature);
    auto ts = find_transforms(moved, o);
    ASSERT_TRUE(ts);
    EXPECT_FALSE(ts->empty());
    for (const auto& u : *ts) EXPECT_TRUE(equal_presentations(apply(u, o, moved.signature), moved));
  }
}

TEST(Recognize, MatchZooFindsDiassForAssBlackLeib) {
  auto ms = match_zoo(black(Family::AssBlack, zoo_get("leib")));
  ASSERT_FALSE(ms.empty());
  EXPECT_EQ(ms.front().key, "diass");
}

TEST(Recognize, FreeOperadMatchesMagKey) {
  auto ms = match_zoo(mag(1, 1, 0));
  ASSERT_FALSE(ms.empty());
  EXPECT_EQ(ms.front().key, mag_key(1, 1, 0));
}

TEST(Recognize, BoundIsReported) {
  MatchOptions opts;
  opts.max_transforms = 1;
  EXPECT_FALSE(find_transforms(zoo_get("dend"), zoo_get("dend"), opts));
  std::vector<std::string> warnings;
  match_zoo(zoo_get("dend"), {"dend"}, opts, &warnings);
  EXPECT_FALSE(warnings.empty());
}

TEST(Recognize, DifferentDimensionsNeverMatch) {
  EXPECT_FALSE(recognized_as(zoo_get("ass"), "nilass"));
  EXPECT_FALSE(recognized_as(zoo_get("com"), "lie"));
}
