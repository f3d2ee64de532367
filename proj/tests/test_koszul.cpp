#include <gtest/gtest.h>

#include "oracle.hpp"
#include "opcalc/functors.hpp"
#include "opcalc/koszul.hpp"
#include "opcalc/recognize.hpp"

using namespace opcalc;

namespace {

Signature sig(std::vector<std::pair<std::string, Symmetry>> g) {
  std::vector<Generator> gens;
  for (auto& [n, s] : g) gens.push_back({n, s});
  return Signature(std::move(gens));
}

}  // namespace

TEST(Koszul, DualSignature) {
  Signature s = sig({{"m", Symmetry::NonSym}, {"c", Symmetry::Sym}, {"b", Symmetry::AntiSym}});
  Signature d = dual_signature(s);
  EXPECT_EQ(d[0].symmetry, Symmetry::NonSym);
  EXPECT_EQ(d[1].symmetry, Symmetry::AntiSym);
  EXPECT_EQ(d[2].symmetry, Symmetry::Sym);
  EXPECT_EQ(dual_signature(d), s);
}

TEST(Koszul, OneNonsymPairing) {
  Signature s = sig({{"m", Symmetry::NonSym}});
  Signature d = dual_signature(s);
  auto rows = pairing_rows(s, d);
  ASSERT_EQ(rows.size(), 12u);
  for (const auto& r : rows) {
    EXPECT_EQ(r.size(), 1u);
    for (const auto& [k, c] : r) EXPECT_TRUE(c == 1 || c == -1);
  }
  // the left comb m(m(x,y),z) pairs to +1 with its dual
  std::size_t left = s.index_of(Monomial3{Shape::Left, 0, 0, {0, 1, 2}});
  std::size_t left_d = d.index_of(Monomial3{Shape::Left, 0, 0, {0, 1, 2}});
  EXPECT_EQ(rows[left].coeff(left_d), Scalar(1));
  EXPECT_NE(pairing_determinant(s), Scalar(0));
}

TEST(Koszul, ComLiePairing) {
  Signature s = sig({{"c", Symmetry::Sym}});
  auto rows = pairing_rows(s, dual_signature(s));
  EXPECT_EQ(rows.size(), 3u);
  EXPECT_NE(pairing_determinant(s), Scalar(0));
}

TEST(Koszul, PairingNondegenerateOnMixedSignatures) {
  for (int p = 0; p <= 2; ++p) {
    for (int q = 0; q <= 1; ++q) {
      for (int r = 0; r <= 1; ++r) {
        if (p + q + r == 0) continue;
        Signature s = mag(p, q, r).signature;
        auto rows = pairing_rows(s, dual_signature(s));
        EXPECT_EQ(oracle::rank_mod_p(rows, s.dim3()), s.dim3()) << p << q << r;
      }
    }
  }
}

TEST(Koszul, ClassicalDuals) {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"ass", "ass"}, {"com", "lie"}, {"lie", "com"}, {"prelie", "perm"}, {"perm", "prelie"},
      {"leib", "zinb"}, {"zinb", "leib"}, {"dend", "diass"}, {"diass", "dend"}, {"pois", "pois"},
  };
  for (const auto& [a, b] : pairs) EXPECT_TRUE(recognized_as(dual(zoo_get(a)), b)) << a;
}

TEST(Koszul, DualIsInvolutiveAndComplementary) {
  for (const auto& k : zoo_keys()) {
    OperadPresentation o = zoo_get(k);
    OperadPresentation d = dual(o);
    EXPECT_EQ(d.dim_relations(), o.signature.dim3() - o.dim_relations()) << k;
    EXPECT_TRUE(same_operad(dual(d), o)) << k;
  }
}

TEST(Koszul, FreeAndZeroSwap) {
  OperadPresentation free = mag(1, 1, 0);
  OperadPresentation d = dual(free);
  EXPECT_EQ(d.dim_quotient(), 0u);
}
