#include "opcalc/functors.hpp"

#include <map>
#include <mutex>

namespace opcalc {

std::string to_string(Family f) {
  switch (f) {
    case Family::AssBlack: return "black_ass";
    case Family::ComBlack: return "black_com";
    case Family::PreLieRBlack: return "black_prelie";
    case Family::PreLieLBlack: return "black_prelie_left";
    case Family::AssWhite: return "white_ass";
    case Family::LieWhite: return "white_lie";
    case Family::PermWhite: return "white_perm";
  }
  return "?";
}

bool is_black(Family f) {
  return f == Family::AssBlack || f == Family::ComBlack || f == Family::PreLieRBlack ||
         f == Family::PreLieLBlack;
}

LayoutKind layout_kind(Family f) {
  return (f == Family::ComBlack || f == Family::LieWhite) ? LayoutKind::Transposing
                                                         : LayoutKind::Doubling;
}

Complex complex_of(Family f) {
  switch (f) {
    case Family::PreLieRBlack:
    case Family::PermWhite: return Complex::RelLeft;
    case Family::PreLieLBlack: return Complex::RelRight;
    default: return Complex::Full;
  }
}

Family dual_family(Family f) {
  switch (f) {
    case Family::AssBlack: return Family::AssWhite;
    case Family::ComBlack: return Family::LieWhite;
    case Family::PreLieRBlack: return Family::PermWhite;
    case Family::AssWhite: return Family::AssBlack;
    case Family::LieWhite: return Family::ComBlack;
    case Family::PermWhite: return Family::PreLieRBlack;
    case Family::PreLieLBlack: break;
  }
  throw StructuralError("family has no dual in this calculator");
}

Signature derived_signature(Family f, const Signature& src) {
  return derived_signature(src, make_layout(src, layout_kind(f)));
}

namespace {

std::string wrap(Family f, const std::string& name) { return to_string(f) + "(" + name + ")"; }

// Results are cached on (family, signature, relation space); the name is
// restored on lookup.
std::string cache_key(Family f, const OperadPresentation& o) {
  std::string k = to_string(f) + "|";
  for (const auto& g : o.signature.generators()) k += g.name + ":" + to_string(g.symmetry) + ",";
  k += "|";
  for (const auto& r : o.relations.basis()) {
    for (const auto& [i, c] : r) k += std::to_string(i) + "=" + c.get_str() + " ";
    k += ";";
  }
  return k;
}

template <class F>
OperadPresentation cached(Family f, const OperadPresentation& o, F compute) {
  static std::mutex mu;
  static std::map<std::string, OperadPresentation> cache;
  std::string k = cache_key(f, o);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) {
      OperadPresentation r = it->second;
      r.name = wrap(f, o.name);
      return r;
    }
  }
  OperadPresentation r = compute();
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::move(k), r);
  return r;
}

}  // namespace

std::vector<Element2> com_projection(const Signature& src) {
  DerivedLayout ass = make_layout(src, LayoutKind::Doubling);
  DerivedLayout com = make_layout(src, LayoutKind::Transposing);
  std::vector<Element2> images;
  for (const auto& d : ass.gens) {
    int t = com.index[d.source][0];
    Orientation o = d.slot == Slot::Succ ? Orientation::Op : Orientation::Id;
    images.push_back(Element2::term(t, o));
  }
  return images;
}

OperadPresentation black(Family f, const OperadPresentation& o) {
  if (!is_black(f)) throw StructuralError(to_string(f) + " is not a black family");
  return cached(f, o, [&] { return black_uncached(f, o); });
}

OperadPresentation white_direct(Family f, const OperadPresentation& o) {
  if (is_black(f)) throw StructuralError(to_string(f) + " is not a white family");
  return cached(f, o, [&] { return white_uncached(f, o); });
}

OperadPresentation black_uncached(Family f, const OperadPresentation& o) {
  if (!is_black(f)) throw StructuralError(to_string(f) + " is not a black family");
  if (f == Family::ComBlack) {
    OperadPresentation a = black(Family::AssBlack, o);
    Signature c = derived_signature(Family::ComBlack, o.signature);
    auto images = com_projection(o.signature);
    RrefBuilder b(c.dim3());
    for (const auto& r : a.relations.basis()) {
      b.add(substitute(a.signature, r, images, c));
    }
    return from_relations(wrap(f, o.name), std::move(c), b.finish());
  }
  DerivedLayout layout = make_layout(o.signature, LayoutKind::Doubling);
  Signature d = derived_signature(o.signature, layout);
  BlackProduct rule(o.signature, layout);
  RrefBuilder b(d.dim3());
  for (const auto& cfg : configurations(complex_of(f))) {
    for (const auto& r : o.relations.basis()) {
      b.add(eval_relator(o.signature, r, cfg, rule, d));
    }
  }
  return from_relations(wrap(f, o.name), std::move(d), b.finish());
}

OperadPresentation white_uncached(Family f, const OperadPresentation& o) {
  if (is_black(f)) throw StructuralError(to_string(f) + " is not a white family");
  DerivedLayout layout = make_layout(o.signature, layout_kind(f));
  Signature w = derived_signature(o.signature, layout);
  WhiteProduct rule(layout);
  auto cfgs = configurations(complex_of(f));
  const std::size_t n = o.signature.dim3();
  std::vector<SparseVector> columns;
  columns.reserve(w.dim3());
  for (Key j = 0; j < w.dim3(); ++j) {
    SparseVector unit = SparseVector::unit(j);
    std::vector<SparseVector::Entry> col;
    for (std::size_t c = 0; c < cfgs.size(); ++c) {
      Element3 v = o.relations.reduce(eval_relator(w, unit, cfgs[c], rule, o.signature));
      for (const auto& [k, x] : v) col.emplace_back(static_cast<Key>(c * n + k), x);
    }
    columns.push_back(SparseVector::from_entries(std::move(col)));
  }
  return from_relations(wrap(f, o.name), std::move(w), kernel(columns, cfgs.size() * n));
}

OperadPresentation white_via_dual(Family f, const OperadPresentation& o) {
  if (is_black(f)) throw StructuralError(to_string(f) + " is not a white family");
  OperadPresentation d = dual(black(dual_family(f), dual(o)));
  Signature w = derived_signature(f, o.signature);
  if (!w.same_shape(d.signature)) {
    throw StructuralError("dual route produced a different signature shape");
  }
  return from_relations(wrap(f, o.name), std::move(w), d.relations);
}

namespace {

std::vector<Generator> joined(const Signature& a, const Signature& b) {
  std::vector<Generator> gens = a.generators();
  for (auto g : b.generators()) {
    auto taken = [&](const std::string& n) {
      for (const auto& h : gens) {
        if (h.name == n) return true;
      }
      return false;
    };
    while (taken(g.name)) g.name += "_2";
    gens.push_back(g);
  }
  return gens;
}

std::vector<Element2> shift_images(std::size_t count, std::size_t offset) {
  std::vector<Element2> images;
  for (std::size_t i = 0; i < count; ++i) {
    images.push_back(Element2::term(static_cast<int>(i + offset)));
  }
  return images;
}

RrefBuilder embed_both(const OperadPresentation& o, const OperadPresentation& p,
                       const Signature& s) {
  RrefBuilder b(s.dim3());
  auto io = shift_images(o.signature.size(), 0);
  auto ip = shift_images(p.signature.size(), o.signature.size());
  for (const auto& r : o.relations.basis()) b.add(substitute(o.signature, r, io, s));
  for (const auto& r : p.relations.basis()) b.add(substitute(p.signature, r, ip, s));
  return b;
}

}  // namespace

OperadPresentation sum(const OperadPresentation& o, const OperadPresentation& p) {
  Signature s(joined(o.signature, p.signature));
  RrefBuilder b = embed_both(o, p, s);
  return from_relations("sum(" + o.name + "," + p.name + ")", std::move(s), b.finish());
}

OperadPresentation prod(const OperadPresentation& o, const OperadPresentation& p) {
  Signature s(joined(o.signature, p.signature));
  RrefBuilder b = embed_both(o, p, s);
  const std::size_t split = o.signature.size();
  Key idx = 0;
  for (const auto& m : s.basis()) {
    if ((m.outer < split) != (m.inner < split)) b.add(SparseVector::unit(idx));
    ++idx;
  }
  return from_relations("prod(" + o.name + "," + p.name + ")", std::move(s), b.finish());
}

OperadPresentation adm(const OperadPresentation& o) {
  DerivedLayout layout = make_layout(o.signature, LayoutKind::Doubling);
  Signature d = derived_signature(o.signature, layout);
  std::vector<Element2> images;
  for (std::size_t g = 0; g < o.signature.size(); ++g) {
    int s = static_cast<int>(g);
    switch (o.signature[g].symmetry) {
      case Symmetry::NonSym:
        images.push_back(Element2::term(layout.at(s, Slot::Prec)) +
                         Element2::term(layout.at(s, Slot::Succ)));
        break;
      case Symmetry::Sym: {
        int c = layout.at(s, Slot::Circ);
        images.push_back(Element2::term(c) + Element2::term(c, Orientation::Op));
        break;
      }
      case Symmetry::AntiSym: {
        int a = layout.at(s, Slot::Ast);
        images.push_back(Element2::term(a) + Element2::term(a, Orientation::Op, -1));
        break;
      }
    }
  }
  RrefBuilder b(d.dim3());
  for (const auto& r : o.relations.basis()) b.add(substitute(o.signature, r, images, d));
  return from_relations("adm(" + o.name + ")", std::move(d), b.finish());
}

OperadPresentation opposite_operad(const OperadPresentation& o) {
  RrefBuilder b(o.signature.dim3());
  for (const auto& r : o.relations.basis()) b.add(opposite(o.signature, r));
  return from_relations("opp(" + o.name + ")", o.signature, b.finish());
}

}  // namespace opcalc
