#include <gtest/gtest.h>

#include <random>

#include "random_operad.hpp"
#include "opcalc/error.hpp"
#include "opcalc/functors.hpp"
#include "opcalc/koszul.hpp"
#include "opcalc/recognize.hpp"

using namespace opcalc;

namespace {

const Family kBlack[] = {Family::AssBlack, Family::ComBlack, Family::PreLieRBlack, Family::PreLieLBlack};
const Family kWhite[] = {Family::AssWhite, Family::LieWhite, Family::PermWhite};

}  // namespace

TEST(Functors, DerivedSignatureSizes) {
  Signature s = mag(2, 1, 1).signature;
  for (Family f : {Family::AssBlack, Family::PreLieRBlack, Family::AssWhite, Family::PermWhite}) {
    Signature d = derived_signature(f, s);
    EXPECT_EQ(d.size(), 2u * 2 + 1 + 1) << to_string(f);
    EXPECT_EQ(d.p(), 6) << to_string(f);
  }
  for (Family f : {Family::ComBlack, Family::LieWhite}) {
    Signature d = derived_signature(f, s);
    EXPECT_EQ(d.size(), 4u) << to_string(f);
  }
}

TEST(Functors, DualFamilies) {
  for (Family f : {Family::AssBlack, Family::ComBlack, Family::PreLieRBlack}) {
    EXPECT_TRUE(is_black(f));
    EXPECT_FALSE(is_black(dual_family(f)));
    EXPECT_EQ(dual_family(dual_family(f)), f);
  }
}

TEST(Functors, WrongFamilyThrows) {
  EXPECT_THROW(black_uncached(Family::AssWhite, zoo_get("ass")), Error);
  EXPECT_THROW(white_uncached(Family::ComBlack, zoo_get("ass")), Error);
}

TEST(Functors, CacheAgreesWithUncached) {
  for (const char* k : {"lie", "pois", "dend"}) {
    OperadPresentation o = zoo_get(k);
    for (Family f : kBlack) EXPECT_TRUE(same_operad(black(f, o), black_uncached(f, o))) << k << to_string(f);
    for (Family f : kWhite) EXPECT_TRUE(same_operad(white_direct(f, o), white_uncached(f, o))) << k << to_string(f);
  }
}

TEST(Functors, FreeOperandsGiveFreeOrZeroResults) {
  for (Family f : kBlack) {
    OperadPresentation b = black(f, mag(1, 1, 0));
    EXPECT_EQ(b.dim_relations(), 0u) << to_string(f);
  }
  Signature m = mag(1, 0, 0).signature;
  std::vector<Element3> all;
  for (std::size_t k = 0; k < m.dim3(); ++k) all.push_back(SparseVector::unit(static_cast<Key>(k)));
  OperadPresentation zero = make_presentation("zero", m, all);
  for (Family f : kWhite) EXPECT_EQ(white_direct(f, zero).dim_quotient(), 0u) << to_string(f);
}

TEST(Functors, WhiteMethodsAgreeOnRandomOperads) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 12; ++trial) {
    OperadPresentation o = gen::random_operad(rng, 1 + trial % 2, trial % 3 == 0, trial % 3 == 1, 1 + trial % 3);
    for (Family f : kWhite) {
      EXPECT_TRUE(white_direct(f, o).relations == white_via_dual(f, o).relations)
          << to_string(f) << "\n" << render_dsl(o);
    }
  }
}

TEST(Functors, ComplementarityOnRandomOperads) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    OperadPresentation o = gen::random_operad(rng, 1, trial % 2, (trial / 2) % 2, 2);
    for (Family f : {Family::AssBlack, Family::ComBlack, Family::PreLieRBlack}) {
      OperadPresentation b = black(f, o);
      OperadPresentation w = white_direct(dual_family(f), dual(o));
      EXPECT_EQ(b.dim_relations() + w.dim_relations(), b.signature.dim3()) << to_string(f);
      EXPECT_TRUE(dual(b).relations == w.relations) << to_string(f);
    }
  }
}

TEST(Functors, LeftPreLieMatchesOppositeOnRandomOperads) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 6; ++trial) {
    OperadPresentation o = gen::random_operad(rng, 1, trial % 2, 0, 2);
    OperadPresentation l = black(Family::PreLieLBlack, o);
    OperadPresentation r = opposite_operad(black(Family::PreLieRBlack, o));
    EXPECT_EQ(l.dim_relations(), r.dim_relations());
  }
}

TEST(Functors, SumAndProd) {
  OperadPresentation a = zoo_get("ass"), l = zoo_get("lie");
  OperadPresentation s = sum(a, l), p = prod(a, l);
  EXPECT_EQ(s.signature.size(), 2u);
  EXPECT_EQ(p.signature.size(), 2u);
  // sum adds nothing mixed; prod kills every mixed monomial
  EXPECT_EQ(s.dim_relations(), a.dim_relations() + l.dim_relations());
  EXPECT_EQ(p.dim_relations(), s.signature.dim3() - a.dim_quotient() - l.dim_quotient());
}

TEST(Functors, AdmAndOpposite) {
  EXPECT_TRUE(recognized_as(adm(zoo_get("lie")), "lieadm"));
  EXPECT_EQ(adm(zoo_get("ass")).signature.p(), 2);
  for (const auto& k : zoo_keys()) {
    OperadPresentation o = zoo_get(k);
    EXPECT_TRUE(opposite_operad(opposite_operad(o)).relations == o.relations) << k;
  }
  EXPECT_TRUE(same_operad(opposite_operad(zoo_get("ass")), zoo_get("ass")));
  EXPECT_FALSE(same_operad(opposite_operad(zoo_get("leib")), zoo_get("leib")));
}

TEST(Functors, ComProjectionShape) {
  Signature s = mag(1, 1, 1).signature;
  EXPECT_EQ(com_projection(s).size(), derived_signature(Family::AssBlack, s).size());
}
