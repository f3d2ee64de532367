#include "opcalc/verify.hpp"

#include <chrono>
#include <cstdio>
#include <set>

#include "opcalc/error.hpp"
#include "opcalc/morphisms.hpp"
#include "opcalc/recognize.hpp"

namespace opcalc {

namespace {

using Fails = std::vector<std::string>;
using O = Orientation;

OperadPresentation Z(const std::string& k) { return zoo_get(k); }

Element2 T(int g, O o = O::Id, int c = 1) { return Element2::term(g, o, c); }

void expect_as(Fails& f, const std::string& label, const OperadPresentation& o,
               const OperadPresentation& want) {
  MatchOptions opts;
  opts.first_only = true;
  auto ts = find_transforms(o, want, opts);
  if (!ts || ts->empty()) {
    f.push_back(label + ": not recognized (dim " + std::to_string(o.dim_relations()) + " vs " +
                std::to_string(want.dim_relations()) + ")");
  }
}

void expect_as(Fails& f, const std::string& label, const OperadPresentation& o, const std::string& key) {
  expect_as(f, label, o, Z(key));
}

OperadPresentation B(Family fam, const std::string& k) { return black(fam, Z(k)); }
OperadPresentation W(Family fam, const std::string& k) { return white_direct(fam, Z(k)); }

constexpr Family kAss = Family::AssBlack;
constexpr Family kCom = Family::ComBlack;
constexpr Family kPre = Family::PreLieRBlack;

Fails c1() {
  Fails f;
  expect_as(f, "Ass.Lie = Ass", B(kAss, "lie"), "ass");
  expect_as(f, "preLie.Lie = preLie", B(kPre, "lie"), "prelie");
  expect_as(f, "Com.Lie = Com", B(kCom, "lie"), "com");
  return f;
}

Fails c2() {
  Fails f;
  expect_as(f, "Ass.Ass = Ass x Ass", B(kAss, "ass"), prod(Z("ass"), Z("ass")));
  expect_as(f, "Com.Ass = nilAss", B(kCom, "ass"), "nilass");
  expect_as(f, "preLie.Ass = Dend", B(kPre, "ass"), "dend");
  return f;
}

Fails c3() {
  Fails f;
  expect_as(f, "Com.Com = nilLie", B(kCom, "com"), "nillie");
  expect_as(f, "preLie.Com = Zinb", B(kPre, "com"), "zinb");
  OperadPresentation ac = B(kAss, "com");
  expect_as(f, "Ass.Com = nilAss", ac, "nilass");
  expect_as(f, "dual(Ass.Com) = Ass o Lie", dual(ac), white_direct(Family::AssWhite, Z("lie")));
  return f;
}

Fails c4() {
  Fails f;
  expect_as(f, "Ass.preLie = Dend", B(kAss, "prelie"), "dend");
  expect_as(f, "Com.preLie = Zinb", B(kCom, "prelie"), "zinb");
  expect_as(f, "preLie.preLie = LDend", B(kPre, "prelie"), "ldend");
  return f;
}

Fails c5() {
  Fails f;
  expect_as(f, "Ass.Leib = diAss", B(kAss, "leib"), "diass");
  expect_as(f, "Com.Leib = Perm", B(kCom, "leib"), "perm");
  expect_as(f, "preLie.Leib = preLieBulletLeib", B(kPre, "leib"), "preLieBulletLeib");
  return f;
}

Fails c6() {
  Fails f;
  expect_as(f, "Ass.Pois = assBulletPois", B(kAss, "pois"), "assBulletPois");
  expect_as(f, "Com.Pois = nilLie x Com", B(kCom, "pois"), prod(Z("nillie"), Z("com")));
  expect_as(f, "preLie.Pois = prePois", B(kPre, "pois"), "prepois");
  return f;
}

Fails c7() {
  Fails f;
  expect_as(f, "Ass.Perm = nilAss x nilAss", B(kAss, "perm"), prod(Z("nilass"), Z("nilass")));
  expect_as(f, "Com.Perm = nilAss", B(kCom, "perm"), "nilass");
  expect_as(f, "preLie.Perm = preLieBulletPerm", B(kPre, "perm"), "preLieBulletPerm");
  return f;
}

Fails c8() {
  Fails f;
  expect_as(f, "Ass.LieAdm = adm(Ass)", B(kAss, "lieadm"), adm(Z("ass")));
  expect_as(f, "Com.LieAdm = adm(Com)", B(kCom, "lieadm"), adm(Z("com")));
  expect_as(f, "preLie.LieAdm = adm(preLie)", B(kPre, "lieadm"), adm(Z("prelie")));
  return f;
}

Fails c9() {
  Fails f;
  expect_as(f, "Ass.postLie = Tridend", B(kAss, "postlie"), "tridend");
  expect_as(f, "Com.postLie = postCom", B(kCom, "postlie"), "postcom");
  OperadPresentation pd = dual(Z("postcom"));
  expect_as(f, "Ass.postCom! = Triass", black(kAss, pd), "triass");
  expect_as(f, "Com.postCom! = ComTrias", black(kCom, pd), "comtrias");
  return f;
}

Fails c10() {
  Fails f;
  for (int p = 0; p <= 2; ++p) {
    for (int q = 0; q <= 2; ++q) {
      for (int r = 0; r <= 2; ++r) {
        if (p + q + r > 3) continue;
        OperadPresentation m = mag(p, q, r);
        expect_as(f, "Ass." + mag_key(p, q, r), black(kAss, m), mag(2 * p + q + r, 0, 0));
        expect_as(f, "Com." + mag_key(p, q, r), black(kCom, m), mag(p, r, q));
      }
    }
  }
  return f;
}

// dual pairs, involution and sum/prod exchange under one pairing convention
Fails duality_checks(PairingConvention c) {
  Fails f;
  auto eq = [&](const std::string& label, const OperadPresentation& a, const std::string& key) {
    expect_as(f, label, a, key);
  };
  eq("ass! = ass", dual(Z("ass"), c), "ass");
  eq("com! = lie", dual(Z("com"), c), "lie");
  eq("lie! = com", dual(Z("lie"), c), "com");
  eq("prelie! = perm", dual(Z("prelie"), c), "perm");
  eq("perm! = prelie", dual(Z("perm"), c), "prelie");
  eq("leib! = zinb", dual(Z("leib"), c), "zinb");
  eq("zinb! = leib", dual(Z("zinb"), c), "leib");
  eq("diass! = dend", dual(Z("diass"), c), "dend");
  eq("dend! = diass", dual(Z("dend"), c), "diass");
  eq("tridend! = triass", dual(Z("tridend"), c), "triass");
  eq("triass! = tridend", dual(Z("triass"), c), "tridend");
  eq("postcom! = postcomdual", dual(Z("postcom"), c), "postcomdual");
  for (const auto& k : zoo_keys()) {
    OperadPresentation o = Z(k);
    if (!(dual(dual(o, c), c).relations == o.relations)) f.push_back("dual(dual(" + k + ")) != " + k);
  }
  const std::pair<const char*, const char*> pairs[] = {
      {"ass", "lie"}, {"com", "perm"}, {"prelie", "leib"}, {"pois", "dend"}, {"zinb", "postlie"}};
  for (const auto& [a, b] : pairs) {
    OperadPresentation lhs = dual(sum(Z(a), Z(b)), c);
    OperadPresentation rhs = prod(dual(Z(a), c), dual(Z(b), c));
    if (!(lhs.relations == rhs.relations) || !lhs.signature.same_shape(rhs.signature)) {
      f.push_back(std::string("dual(sum(") + a + "," + b + ")) != prod of duals");
    }
  }
  return f;
}

Fails c11(std::vector<std::string>& notes) {
  Fails f = duality_checks({});
  for (int rs : {1, -1}) {
    for (bool ps : {false, true}) {
      PairingConvention c{rs, ps};
      Fails g = duality_checks(c);
      char buf[96];
      std::snprintf(buf, sizeof buf, "convention right_sign=%+d perm_sign=%s: %s", rs, ps ? "yes" : "no",
                    g.empty() ? "passes" : "fails");
      notes.emplace_back(buf);
    }
  }
  return f;
}

Fails c12() {
  Fails f;
  std::set<std::string> seen;
  auto check = [&](const Signature& s) {
    std::string key;
    for (const auto& g : s.generators()) key += to_string(g.symmetry) + ",";
    if (!seen.insert(key).second) return;
    if (pairing_determinant(s) == 0) f.push_back("singular pairing on signature " + key);
  };
  for (const auto& k : zoo_keys()) {
    OperadPresentation o = Z(k);
    check(o.signature);
    check(dual_signature(o.signature));
  }
  for (int p = 0; p <= 3; ++p) {
    for (int q = 0; p + q <= 3; ++q) {
      for (int r = 0; p + q + r <= 3; ++r) check(mag(p, q, r).signature);
    }
  }
  return f;
}

Fails c13() {
  Fails f;
  constexpr Family A = Family::AssWhite, P = Family::PermWhite, L = Family::LieWhite;
  expect_as(f, "Ass o Com = Ass", W(A, "com"), "ass");
  expect_as(f, "Ass o Lie = Mag100", W(A, "lie"), mag(1, 0, 0));
  expect_as(f, "Ass o Zinb = Dend", W(A, "zinb"), "dend");
  expect_as(f, "Ass o Leib = assCircLeib", W(A, "leib"), "assCircLeib");
  expect_as(f, "Perm o Lie = Leib", W(P, "lie"), "leib");
  expect_as(f, "Perm o Ass = diAss", W(P, "ass"), "diass");
  expect_as(f, "Perm o Pois = prePoisDual", W(P, "pois"), "prePoisDual");
  expect_as(f, "Perm o preLie = permCircPreLie", W(P, "prelie"), "permCircPreLie");
  expect_as(f, "Lie o Ass = Mag100", W(L, "ass"), mag(1, 0, 0));
  expect_as(f, "Lie o preLie = Mag100", W(L, "prelie"), mag(1, 0, 0));
  expect_as(f, "Lie o Lie = Mag010", W(L, "lie"), mag(0, 1, 0));
  expect_as(f, "Lie o Pois = Lie + Mag010", W(L, "pois"), sum(Z("lie"), mag(0, 1, 0)));
  expect_as(f, "Lie o Perm = Leib", W(L, "perm"), "leib");
  expect_as(f, "Lie o Zinb = preLie", W(L, "zinb"), "prelie");
  return f;
}

Fails c14() {
  Fails f;
  for (Family fam : {Family::AssWhite, Family::LieWhite, Family::PermWhite}) {
    for (const auto& k : zoo_keys()) {
      OperadPresentation o = Z(k);
      if (!(white_direct(fam, o).relations == white_via_dual(fam, o).relations)) {
        f.push_back(to_string(fam) + "(" + k + "): methods disagree");
      }
    }
  }
  return f;
}

Fails c15() {
  Fails f;
  for (Family fam : {kAss, kCom, kPre}) {
    for (const auto& k : zoo_keys()) {
      OperadPresentation o = Z(k);
      OperadPresentation b = black(fam, o);
      OperadPresentation w = white_direct(dual_family(fam), dual(o));
      std::string label = to_string(fam) + "(" + k + ")";
      if (b.dim_relations() + w.dim_relations() != b.signature.dim3()) {
        f.push_back(label + ": dimensions not complementary");
        continue;
      }
      Signature d = dual_signature(b.signature);
      if (!d.same_shape(w.signature)) {
        f.push_back(label + ": signatures not dual");
        continue;
      }
      Subspace ann = annihilator(b.relations, pairing_rows(b.signature, d), d.dim3());
      if (!(ann == w.relations)) f.push_back(label + ": not mutual annihilators");
    }
  }
  return f;
}

Fails c16() {
  Fails f;
  for (const auto& k : zoo_keys()) {
    OperadPresentation o = Z(k);
    OperadPresentation l = black(Family::PreLieLBlack, o);
    OperadPresentation r = opposite_operad(black(kPre, o));
    DerivedLayout lay = make_layout(o.signature, LayoutKind::Doubling);
    GenTransform t = GenTransform::identity(lay.gens.size());
    for (std::size_t g = 0; g < o.signature.size(); ++g) {
      int s = static_cast<int>(g);
      switch (o.signature[g].symmetry) {
        case Symmetry::NonSym: {
          int a = lay.at(s, Slot::Prec), b = lay.at(s, Slot::Succ);
          t.perm[a] = b;
          t.perm[b] = a;
          break;
        }
        case Symmetry::Sym: t.sign[lay.at(s, Slot::Circ)] = -1; break;
        case Symmetry::AntiSym: break;
      }
    }
    if (!(apply(t, r, l.signature).relations == l.relations)) {
      f.push_back("preLie_l." + k + " != opposite(preLie_r." + k + ")");
    }
  }
  return f;
}

Fails c17() {
  Fails f;
  auto check = [&](const std::string& label, const OperadMorphism& m) {
    if (!is_morphism(m)) f.push_back(label + " is not a morphism");
  };
  check("Lie -> postLie", make_morphism(Z("lie"), Z("postlie"), {T(0) + T(0, O::Op, -1) + T(1)}));
  check("Ass -> Tridend", make_morphism(Z("ass"), Z("tridend"), {T(0) + T(1) + T(2)}));
  check("Com -> postCom", make_morphism(Z("com"), Z("postcom"), {T(0) + T(0, O::Op) + T(1)}));
  OperadMorphism tri = make_morphism(Z("prelie"), Z("ldend"), {T(0) + T(1)});
  check("preLie -> LDend (l + r)", tri);
  check("preLie -> LDend (l - r^op)", make_morphism(Z("prelie"), Z("ldend"), {T(0) + T(1, O::Op, -1)}));
  OperadMorphism comm = make_morphism(Z("lie"), Z("prelie"), {T(0) + T(0, O::Op, -1)});
  check("Lie -> preLie", comm);
  check("Lie -> LDend", compose(tri, comm));
  return f;
}

Fails c18() {
  Fails f;
  for (Adjunction a : {Adjunction::Ass, Adjunction::ComLie, Adjunction::PreLiePerm}) {
    for (const auto& k : zoo_keys()) {
      OperadPresentation o = Z(k);
      std::string label = to_string(a) + " " + k;
      if (!is_morphism(unit(a, o))) f.push_back(label + ": unit");
      if (!is_morphism(counit(a, o))) f.push_back(label + ": counit");
      if (!triangle_check(a, o)) f.push_back(label + ": triangle");
      if (a == Adjunction::Ass && !is_morphism(associated_operations(o))) {
        f.push_back(label + ": associated operations");
      }
    }
  }
  return f;
}

Fails c19() {
  Fails f;
  // top row: preLie black and Zinb white of the middle row
  expect_as(f, "preLie.Lie = preLie", B(kPre, "lie"), "prelie");
  expect_as(f, "preLie.Ass = Dend", B(kPre, "ass"), "dend");
  expect_as(f, "preLie.Com = Zinb", B(kPre, "com"), "zinb");
  expect_as(f, "Lie o Zinb = preLie", W(Family::LieWhite, "zinb"), "prelie");
  expect_as(f, "Ass o Zinb = Dend", W(Family::AssWhite, "zinb"), "dend");
  // bottom row: Perm white and Leib black of the middle row
  expect_as(f, "Perm o Lie = Leib", W(Family::PermWhite, "lie"), "leib");
  expect_as(f, "Perm o Ass = diAss", W(Family::PermWhite, "ass"), "diass");
  expect_as(f, "Perm o Com = Perm", W(Family::PermWhite, "com"), "perm");
  expect_as(f, "Ass.Leib = diAss", B(kAss, "leib"), "diass");
  expect_as(f, "Com.Leib = Perm", B(kCom, "leib"), "perm");
  // Com black of the middle row
  expect_as(f, "Com.Lie = Com", B(kCom, "lie"), "com");
  expect_as(f, "Com.Ass = nilAss", B(kCom, "ass"), "nilass");
  expect_as(f, "Com.Com = nilLie", B(kCom, "com"), "nillie");
  return f;
}

// planar span modulo the symmetry relations, computed without canonicalize
std::size_t brute_dim3(const Signature& s) {
  const std::size_t g = s.size();
  const auto& perms = all_permutations();
  auto key = [&](Shape sh, std::size_t o, std::size_t i, std::size_t p) {
    return static_cast<Key>(((static_cast<std::size_t>(sh) * g + o) * g + i) * 6 + p);
  };
  auto pidx = [&](const std::array<std::uint8_t, 3>& l) {
    for (std::size_t p = 0; p < perms.size(); ++p) {
      if (perms[p] == l) return p;
    }
    return std::size_t{0};
  };
  const std::size_t planar = 2 * g * g * 6;
  std::vector<SparseVector> rels;
  auto add = [&](Key a, Key b, int sign) {
    rels.push_back(SparseVector::unit(a) + SparseVector::unit(b) * Scalar(-sign));
  };
  for (std::size_t o = 0; o < g; ++o) {
    for (std::size_t i = 0; i < g; ++i) {
      for (const auto& l : perms) {
        Key left = key(Shape::Left, o, i, pidx(l));
        Key right = key(Shape::Right, o, i, pidx(l));
        auto sg = [&](Symmetry sym) { return sym == Symmetry::Sym ? 1 : -1; };
        if (s[i].symmetry != Symmetry::NonSym) {
          add(left, key(Shape::Left, o, i, pidx({l[1], l[0], l[2]})), sg(s[i].symmetry));
          add(right, key(Shape::Right, o, i, pidx({l[0], l[2], l[1]})), sg(s[i].symmetry));
        }
        if (s[o].symmetry != Symmetry::NonSym) {
          // o(i(a,b),c) = ±o(c,i(a,b))
          add(left, key(Shape::Right, o, i, pidx({l[2], l[0], l[1]})), sg(s[o].symmetry));
        }
      }
    }
  }
  return planar - rank(rels, planar);
}

Fails c20() {
  Fails f;
  for (int p = 0; p <= 3; ++p) {
    for (int q = 0; p + q <= 3; ++q) {
      for (int r = 0; p + q + r <= 3; ++r) {
        Signature s = mag(p, q, r).signature;
        if (brute_dim3(s) != s.dim3()) f.push_back("basis count mismatch for " + mag_key(p, q, r));
        for (const auto& m : s.basis()) {
          auto c = canonicalize(s, m);
          if (!c || c->sign != 1 || c->monomial != m) f.push_back("canonicalize moves a basis monomial");
        }
      }
    }
  }
  for (const auto& e : zoo_entries()) {
    OperadPresentation o = Z(e.key);
    Subspace again = span(o.relations.basis(), o.signature.dim3());
    if (!(again == o.relations)) f.push_back("RREF not idempotent on " + e.key);
    OperadPresentation back = parse_presentation(render_dsl(o));
    if (!same_operad(back, o)) f.push_back("parse(render) differs on " + e.key);
  }
  // rank-nullity on the white kernels
  for (const auto& k : {"ass", "pois", "postlie", "tridend"}) {
    OperadPresentation o = Z(k);
    OperadPresentation w = white_direct(Family::AssWhite, o);
    if (w.dim_relations() + w.dim_quotient() != w.signature.dim3()) f.push_back("rank-nullity on " + std::string(k));
  }
  for (TableKind t : {TableKind::BlackAss, TableKind::BlackPreLieR, TableKind::BlackPreLieL,
                      TableKind::WhiteCup, TableKind::WhiteCupBracket}) {
    for (Symmetry s : {Symmetry::NonSym, Symmetry::Sym, Symmetry::AntiSym}) {
      for (auto& m : leibniz_check(t, s)) f.push_back(m);
    }
  }
  return f;
}

const char* title(int id) {
  static const char* titles[] = {
      "",
      "black with Lie",
      "black with Ass",
      "black with Com",
      "black with preLie",
      "black with Leib",
      "black with Pois",
      "black with Perm",
      "black with LieAdm",
      "black with postLie and postCom dual",
      "Mag laws",
      "Koszul dual pairs, involution, sum/prod",
      "pairing nondegeneracy",
      "white products",
      "white method agreement",
      "black/white complementarity",
      "left preLie is the opposite",
      "named morphisms",
      "adjunction unit, counit, triangles",
      "Chapoton square",
      "property checks",
  };
  return id >= 1 && id <= 20 ? titles[id] : "?";
}

}  // namespace

Suite parse_suite(const std::string& s) {
  if (s == "paper") return Suite::Paper;
  if (s == "duality") return Suite::Duality;
  if (s == "adjunction") return Suite::Adjunction;
  if (s == "all") return Suite::All;
  throw Error("unknown suite '" + s + "' (paper, duality, adjunction, all)");
}

std::vector<int> criteria_of(Suite s) {
  switch (s) {
    case Suite::Paper: return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 13, 19};
    case Suite::Duality: return {11, 12, 14, 15};
    case Suite::Adjunction: return {16, 17, 18};
    case Suite::All: break;
  }
  std::vector<int> all;
  for (int i = 1; i <= 20; ++i) all.push_back(i);
  return all;
}

CriterionResult run_criterion(int id) {
  CriterionResult r;
  r.id = id;
  r.title = title(id);
  auto t0 = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: r.failures = c1(); break;
      case 2: r.failures = c2(); break;
      case 3: r.failures = c3(); break;
      case 4: r.failures = c4(); break;
      case 5: r.failures = c5(); break;
      case 6: r.failures = c6(); break;
      case 7: r.failures = c7(); break;
      case 8: r.failures = c8(); break;
      case 9: r.failures = c9(); break;
      case 10: r.failures = c10(); break;
      case 11: r.failures = c11(r.notes); break;
      case 12: r.failures = c12(); break;
      case 13: r.failures = c13(); break;
      case 14: r.failures = c14(); break;
      case 15: r.failures = c15(); break;
      case 16: r.failures = c16(); break;
      case 17: r.failures = c17(); break;
      case 18: r.failures = c18(); break;
      case 19: r.failures = c19(); break;
      case 20: r.failures = c20(); break;
      default: throw Error("no criterion " + std::to_string(id));
    }
  } catch (const std::exception& e) {
    r.failures.push_back(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.pass = r.failures.empty();
  return r;
}

std::vector<CriterionResult> run_suite(Suite s, const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id : criteria_of(s)) {
    out.push_back(run_criterion(id));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string summary_line(const CriterionResult& r) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "criterion %2d %s  %s (%.2fs)", r.id, r.pass ? "PASS" : "FAIL",
                r.title.c_str(), r.seconds);
  return buf;
}

}  // namespace opcalc
