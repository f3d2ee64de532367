#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "opcalc/presentation.hpp"

using namespace opcalc;

namespace {

Signature sig(std::vector<std::pair<std::string, Symmetry>> g) {
  std::vector<Generator> gens;
  for (auto& [n, s] : g) gens.push_back({n, s});
  return Signature(std::move(gens));
}

// First relator of a one-relator DSL text, over its own signature.
std::pair<Signature, Element3> relator(const std::string& gens, const std::string& rel) {
  OperadPresentation o = parse_presentation("operad t { gens: " + gens + "; rel: " + rel + "; }");
  return {o.signature, o.relators.at(0)};
}

// Orbits of raw planar monomials under the generator symmetries, found by
// search; an orbit reached with both signs would vanish.
std::size_t brute_basis_count(const Signature& s) {
  using Raw = std::tuple<int, int, int, std::array<std::uint8_t, 3>>;
  std::set<Raw> seen;
  std::size_t orbits = 0;
  const int g = static_cast<int>(s.size());
  for (int shape = 0; shape < 2; ++shape) {
    for (int o = 0; o < g; ++o) {
      for (int i = 0; i < g; ++i) {
        for (const auto& l : all_permutations()) {
          Raw start{shape, o, i, l};
          if (seen.count(start)) continue;
          std::map<Raw, int> sign{{start, 1}};
          std::vector<Raw> todo{start};
          bool vanishes = false;
          while (!todo.empty()) {
            Raw cur = todo.back();
            todo.pop_back();
            auto [sh, ou, in, lv] = cur;
            int sc = sign[cur];
            std::vector<std::pair<Raw, int>> moves;
            auto sg = [&](int gen) { return s[gen].symmetry == Symmetry::Sym ? 1 : -1; };
            if (s[in].symmetry != Symmetry::NonSym) {
              auto l2 = lv;
              if (sh == 0) std::swap(l2[0], l2[1]);
              else std::swap(l2[1], l2[2]);
              moves.push_back({{sh, ou, in, l2}, sg(in)});
            }
            if (s[ou].symmetry != Symmetry::NonSym) {
              std::array<std::uint8_t, 3> l2 = sh == 0 ? std::array<std::uint8_t, 3>{lv[2], lv[0], lv[1]}
                                                       : std::array<std::uint8_t, 3>{lv[1], lv[2], lv[0]};
              moves.push_back({{1 - sh, ou, in, l2}, sg(ou)});
            }
            for (auto& [nx, f] : moves) {
              auto it = sign.find(nx);
              if (it == sign.end()) {
                sign[nx] = sc * f;
                todo.push_back(nx);
              } else if (it->second != sc * f) {
                vanishes = true;
              }
            }
          }
          for (auto& [r, x] : sign) seen.insert(r);
          if (!vanishes) ++orbits;
        }
      }
    }
  }
  return orbits;
}

}  // namespace

TEST(Canonicalize, InnerAntisymmetry) {
  Signature lie = zoo_get("lie").signature;
  auto c = canonicalize(lie, {Shape::Left, 0, 0, {1, 0, 2}});
  ASSERT_TRUE(c);
  EXPECT_EQ(c->sign, -1);
  EXPECT_EQ(c->monomial, (Monomial3{Shape::Left, 0, 0, {0, 1, 2}}));
}

TEST(Canonicalize, SymOuterMovesToLeft) {
  Signature com = zoo_get("com").signature;
  auto c = canonicalize(com, {Shape::Right, 0, 0, {0, 1, 2}});
  ASSERT_TRUE(c);
  EXPECT_EQ(c->sign, 1);
  EXPECT_EQ(c->monomial, (Monomial3{Shape::Left, 0, 0, {1, 2, 0}}));
}

TEST(Canonicalize, NonSymUnchanged) {
  Signature s = sig({{"a", Symmetry::NonSym}, {"b", Symmetry::NonSym}});
  Monomial3 m{Shape::Left, 0, 1, {0, 1, 2}};
  auto c = canonicalize(s, m);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->sign, 1);
  EXPECT_EQ(c->monomial, m);
}

TEST(Basis3, Counts) {
  EXPECT_EQ(mag(1, 0, 0).signature.dim3(), 12u);
  EXPECT_EQ(mag(1, 0, 1).signature.dim3(), 27u);
  Signature lie = zoo_get("lie").signature;
  ASSERT_EQ(lie.dim3(), 3u);
  std::set<std::string> names;
  for (const auto& m : lie.basis()) names.insert(to_string(m, lie));
  EXPECT_EQ(names, (std::set<std::string>{"b(b(x,y),z)", "b(b(x,z),y)", "b(b(y,z),x)"}));
}

TEST(Basis3, MatchesBruteForce) {
  for (int p = 0; p <= 3; ++p) {
    for (int q = 0; p + q <= 3; ++q) {
      for (int r = 0; p + q + r <= 3; ++r) {
        Signature s = mag(p, q, r).signature;
        EXPECT_EQ(s.dim3(), brute_basis_count(s)) << mag_key(p, q, r);
      }
    }
  }
}

TEST(Canonicalize, IdempotentOnRandomMonomials) {
  std::mt19937 rng(5);
  for (int p = 0; p <= 3; ++p) {
    for (int q = 0; p + q <= 3; ++q) {
      for (int r = 0; p + q + r <= 3; ++r) {
        Signature s = mag(p, q, r).signature;
        if (s.size() == 0) continue;
        std::uniform_int_distribution<int> gen(0, static_cast<int>(s.size()) - 1);
        std::uniform_int_distribution<int> perm(0, 5);
        for (int t = 0; t < 50; ++t) {
          Monomial3 m{t % 2 ? Shape::Right : Shape::Left, static_cast<std::uint16_t>(gen(rng)),
                      static_cast<std::uint16_t>(gen(rng)), all_permutations()[perm(rng)]};
          auto c = canonicalize(s, m);
          ASSERT_TRUE(c);
          auto again = canonicalize(s, c->monomial);
          ASSERT_TRUE(again);
          EXPECT_EQ(again->sign, 1);
          EXPECT_EQ(again->monomial, c->monomial);
        }
      }
    }
  }
}

TEST(Substitute, IdentityKeepsElement) {
  OperadPresentation pl = zoo_get("prelie");
  Element3 e = pl.relators.at(0);
  EXPECT_EQ(substitute(pl.signature, e, {Element2::term(0)}, pl.signature), e);
}

TEST(Substitute, JacobiUnderCommutatorIsLieAdmissible) {
  OperadPresentation lie = zoo_get("lie");
  OperadPresentation adm = zoo_get("lieadm");
  Element2 comm = Element2::term(0) + Element2::term(0, Orientation::Op, -1);
  Element3 e = substitute(lie.signature, lie.relators.at(0), {comm}, adm.signature);
  EXPECT_EQ(e.size(), 12u);
  EXPECT_EQ(span({e}, adm.signature.dim3()), span({adm.relators.at(0)}, adm.signature.dim3()));
}

TEST(Substitute, AssociatorUnderSplitting) {
  OperadPresentation ass = zoo_get("ass");
  Signature two = sig({{"l", Symmetry::NonSym}, {"r", Symmetry::NonSym}});
  Element3 e = substitute(ass.signature, ass.relators.at(0), {Element2::term(0) + Element2::term(1)}, two);
  Element3 want;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      want = want + monomial_element(two, Shape::Left, a, b, {0, 1, 2}) -
             monomial_element(two, Shape::Right, a, b, {0, 1, 2});
    }
  }
  EXPECT_EQ(e, want);
  EXPECT_EQ(e.size(), 8u);
}

TEST(Opposite, Involution) {
  for (const auto& k : zoo_keys()) {
    OperadPresentation o = zoo_get(k);
    for (const auto& r : o.relators) EXPECT_EQ(opposite(o.signature, opposite(o.signature, r)), r) << k;
  }
}

TEST(Opposite, RightLeibnizBecomesLeft) {
  auto [s, right] = relator("m:nonsym", "m(m(x,y),z) - m(x,m(y,z)) - m(m(x,z),y)");
  auto [s2, left] = relator("m:nonsym", "m(z,m(y,x)) - m(m(z,y),x) - m(y,m(z,x))");
  EXPECT_EQ(opposite(s, right), left);
}

TEST(Opposite, SymMonomialFixed) {
  Signature com = zoo_get("com").signature;
  Element3 e = monomial_element(com, Shape::Left, 0, 0, {0, 1, 2});
  EXPECT_EQ(opposite(com, e), e);
}

TEST(Element2, Normalization) {
  Signature s = sig({{"m", Symmetry::NonSym}, {"c", Symmetry::Sym}, {"b", Symmetry::AntiSym}});
  Element2 e = Element2::term(1, Orientation::Op) + Element2::term(2, Orientation::Op) + Element2::term(2);
  EXPECT_EQ(e.normalized(s), Element2::term(1));
  Element2 f = Element2::term(0) + Element2::term(0, Orientation::Op);
  EXPECT_EQ(f.normalized(s).terms().size(), 2u);
}

TEST(Signature, RejectsDuplicateNames) {
  EXPECT_THROW(sig({{"m", Symmetry::NonSym}, {"m", Symmetry::Sym}}), Error);
}
