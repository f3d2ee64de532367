#include <gtest/gtest.h>

#include "opcalc/presentation.hpp"
#include "oracle.hpp"

using namespace opcalc;

namespace {

SparseVector vec(std::vector<std::pair<Key, int>> e) {
  std::vector<SparseVector::Entry> out;
  for (auto [k, c] : e) out.emplace_back(k, Scalar(c));
  return SparseVector::from_entries(std::move(out));
}

}  // namespace

TEST(Span, EmptyIsZero) {
  Subspace s = span({}, 3);
  EXPECT_EQ(s.dim(), 0u);
}

TEST(Span, RowReduces) {
  Subspace s = span({vec({{0, 1}, {1, 1}}), vec({{1, 1}})}, 3);
  ASSERT_EQ(s.dim(), 2u);
  EXPECT_EQ(s.basis()[0], SparseVector::unit(0));
  EXPECT_EQ(s.basis()[1], SparseVector::unit(1));
}

TEST(Span, AssociativityRelatorsHaveDimSix) {
  OperadPresentation ass = zoo_get("ass");
  EXPECT_EQ(ass.dim_relations(), 6u);
  EXPECT_EQ(oracle::rank_mod_p(ass.relations.basis(), ass.signature.dim3()), 6u);
}

TEST(Contains, Examples) {
  EXPECT_TRUE(Subspace(3).contains(SparseVector{}));
  EXPECT_FALSE(span({SparseVector::unit(0)}, 3).contains(SparseVector::unit(1)));
  OperadPresentation ass = zoo_get("ass");
  Element3 r = monomial_element(ass.signature, Shape::Left, 0, 0, {0, 1, 2}) -
               monomial_element(ass.signature, Shape::Right, 0, 0, {0, 1, 2});
  EXPECT_TRUE(ass.relations.contains(r));
}

TEST(Equality, ScalingInvariant) {
  Subspace a = span({vec({{0, 1}, {1, 1}})}, 3);
  Subspace b = span({vec({{0, 2}, {1, 2}})}, 3);
  EXPECT_TRUE(a == a);
  EXPECT_TRUE(a == b);
  EXPECT_FALSE(zoo_get("ass").relations == zoo_get("lie").relations);
}

TEST(Kernel, IdentityAndZero) {
  std::vector<SparseVector> id = {SparseVector::unit(0), SparseVector::unit(1), SparseVector::unit(2)};
  EXPECT_EQ(kernel(id, 3).dim(), 0u);
  std::vector<SparseVector> zero(3);
  EXPECT_EQ(kernel(zero, 3).dim(), 3u);
}

TEST(Annihilator, Extremes) {
  std::vector<SparseVector> pairing = {SparseVector::unit(0), SparseVector::unit(1), SparseVector::unit(2)};
  EXPECT_EQ(annihilator(Subspace(3), pairing, 3).dim(), 3u);
  EXPECT_EQ(annihilator(span(pairing, 3), pairing, 3).dim(), 0u);
}

TEST(Determinant, Small) {
  EXPECT_EQ(determinant({vec({{0, 2}, {1, 1}}), vec({{0, 1}, {1, 3}})}, 2), Scalar(5));
  EXPECT_EQ(determinant({vec({{1, 1}}), vec({{0, 1}})}, 2), Scalar(-1));
  EXPECT_EQ(determinant({vec({{0, 1}}), vec({{0, 2}})}, 2), Scalar(0));
}

TEST(Scalar, ParseAndPrint) {
  EXPECT_EQ(parse_scalar("-3/6"), Scalar(-1, 2));
  EXPECT_EQ(to_string(Scalar(4) / 2), "2");
  EXPECT_THROW(parse_scalar("1/0"), Error);
}

// Property: exact rank agrees with the modular oracle; RREF is idempotent;
// rank-nullity holds for kernels.
TEST(LinalgProperty, RandomMatrices) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 3 + trial % 17;
    std::size_t m = 1 + (trial * 7) % 19;
    auto rows = oracle::random_rows(rng, m, n, 0.35);
    Subspace s = span(rows, n);
    EXPECT_EQ(s.dim(), oracle::rank_mod_p(rows, n));
    EXPECT_EQ(rank(rows, n), s.dim());
    EXPECT_TRUE(span(s.basis(), n) == s);
    for (const auto& r : rows) EXPECT_TRUE(s.contains(r));
    // rows as columns of a map Q^m -> Q^n
    Subspace k = kernel(rows, n);
    EXPECT_EQ(k.dim() + s.dim(), m);
    for (const auto& v : k.basis()) {
      SparseVector image;
      for (const auto& [j, c] : v) image.axpy(c, rows[j]);
      EXPECT_TRUE(image.empty());
    }
  }
}

TEST(LinalgProperty, DeterminantMatchesRank) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + trial % 8;
    auto rows = oracle::random_rows(rng, n, n, 0.5);
    bool full = oracle::rank_mod_p(rows, n) == n;
    EXPECT_EQ(determinant(rows, n) != 0, full);
  }
}

TEST(LinalgProperty, AnnihilatorDimensions) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 4 + trial % 9;
    std::vector<SparseVector> pairing;
    for (std::size_t i = 0; i < n; ++i) pairing.push_back(SparseVector::unit(static_cast<Key>((i + 3) % n)));
    auto rows = oracle::random_rows(rng, 1 + trial % 5, n, 0.4);
    Subspace s = span(rows, n);
    Subspace a = annihilator(s, pairing, n);
    EXPECT_EQ(a.dim() + s.dim(), n);
    EXPECT_TRUE(annihilator(a, [&] {
                  // transpose of a permutation pairing
                  std::vector<SparseVector> t(n);
                  for (std::size_t i = 0; i < n; ++i) t[pairing[i].leading_key()] = SparseVector::unit(static_cast<Key>(i));
                  return t;
                }(), n) == s);
  }
}
