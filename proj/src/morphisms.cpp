#include "opcalc/morphisms.hpp"

namespace opcalc {

OperadMorphism make_morphism(OperadPresentation source, OperadPresentation target,
                             std::vector<Element2> images) {
  if (images.size() != source.signature.size()) {
    throw StructuralError("morphism needs one image per source generator");
  }
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (const auto& t : images[i].terms()) {
      if (t.gen >= target.signature.size()) throw StructuralError("image uses an unknown generator");
    }
    images[i] = images[i].normalized(target.signature);
    Symmetry s = source.signature[i].symmetry;
    if (s == Symmetry::NonSym) continue;
    Element2 f = images[i].flipped().normalized(target.signature);
    Element2 want = s == Symmetry::Sym ? images[i] : (images[i] * Scalar(-1)).normalized(target.signature);
    if (!(f == want)) {
      throw StructuralError("image of " + source.signature[i].name + " violates its symmetry");
    }
  }
  return {std::move(source), std::move(target), std::move(images)};
}

OperadMorphism identity_morphism(const OperadPresentation& o) {
  std::vector<Element2> im;
  for (std::size_t i = 0; i < o.signature.size(); ++i) im.push_back(Element2::term(static_cast<int>(i)));
  return make_morphism(o, o, std::move(im));
}

bool is_morphism(const OperadMorphism& f) {
  for (const auto& r : f.source.relations.basis()) {
    if (!f.target.relations.contains(substitute(f.source.signature, r, f.images, f.target.signature))) {
      return false;
    }
  }
  return true;
}

namespace {

// e with every generator replaced by its image
Element2 substitute2(const Element2& e, const std::vector<Element2>& images, const Signature& tgt) {
  Element2 out;
  for (const auto& t : e.terms()) {
    Element2 im = images.at(t.gen);
    if (t.orient == Orientation::Op) im = im.flipped();
    out = out + im * t.coeff;
  }
  return out.normalized(tgt);
}

}  // namespace

OperadMorphism compose(const OperadMorphism& g, const OperadMorphism& f) {
  if (!same_operad(f.target, g.source)) throw StructuralError("compose: target and source differ");
  std::vector<Element2> im;
  for (const auto& e : f.images) im.push_back(substitute2(e, g.images, g.target.signature));
  return make_morphism(f.source, g.target, std::move(im));
}

bool same_images(const OperadMorphism& f, const OperadMorphism& g) {
  if (!f.source.signature.same_shape(g.source.signature) ||
      !f.target.signature.same_shape(g.target.signature) || f.images.size() != g.images.size()) {
    return false;
  }
  for (std::size_t i = 0; i < f.images.size(); ++i) {
    if (!(f.images[i].normalized(f.target.signature) == g.images[i].normalized(g.target.signature))) {
      return false;
    }
  }
  return true;
}

std::string to_string(const OperadMorphism& f) {
  std::string out;
  for (std::size_t i = 0; i < f.images.size(); ++i) {
    out += f.source.signature[i].name + " -> " + to_string(f.images[i], f.target.signature) + "\n";
  }
  return out;
}

std::string to_string(Adjunction a) {
  switch (a) {
    case Adjunction::Ass: return "ass";
    case Adjunction::ComLie: return "com/lie";
    case Adjunction::PreLiePerm: return "prelie/perm";
  }
  return "?";
}

Family black_family(Adjunction a) {
  switch (a) {
    case Adjunction::Ass: return Family::AssBlack;
    case Adjunction::ComLie: return Family::ComBlack;
    case Adjunction::PreLiePerm: return Family::PreLieRBlack;
  }
  return Family::AssBlack;
}

Family white_family(Adjunction a) { return dual_family(black_family(a)); }

namespace {

bool defined_first(Slot s) { return s != Slot::Succ; }

// value of the arity-2 element e on (first, second), read in out
Element2 eval2(const ProductRule& rule, const Element2& e, const Value& first, const Value& second,
               const Signature& out) {
  Payload acc;
  for (const auto& t : e.terms()) {
    std::optional<Value> v = t.orient == Orientation::Id ? rule.apply(t.gen, first, second)
                                                         : rule.apply(t.gen, second, first);
    if (!v) continue;
    if (v->pos != Position::E1) throw StructuralError("defining position left the edge");
    for (const auto& [rt, c] : v->payload) {
      Scalar& s = acc[rt];
      s += t.coeff * c;
      if (s == 0) acc.erase(rt);
    }
  }
  return payload_to_element2(acc, out);
}

// The derived operation at slot s read off from e: prec-type slots at
// (E1 a, R0 b), succ at -(R0 b, E1 a).
Element2 read_slot(const ProductRule& rule, const Element2& e, Slot s, const Signature& out) {
  Value a = atom(Position::E1, 0);
  Value b = atom(Position::R0, 1);
  if (defined_first(s)) return eval2(rule, e, a, b, out);
  return eval2(rule, e, b, a, out) * Scalar(-1);
}

Element2 project(const Element2& e, const std::vector<Element2>& proj, const Signature& out) {
  return substitute2(e, proj, out);
}

// the white generator carrying cup (tensor) h, possibly opposed, over a layout
Element2 cup_with(const DerivedLayout& l, const Signature& src, int h, Orientation o) {
  switch (src[h].symmetry) {
    case Symmetry::NonSym:
      return Element2::term(l.at(h, o == Orientation::Id ? Slot::Prec : Slot::Succ));
    case Symmetry::Sym: return Element2::term(l.at(h, Slot::Circ));
    case Symmetry::AntiSym:
      return Element2::term(l.at(h, Slot::Ast), Orientation::Id, o == Orientation::Id ? 1 : -1);
  }
  return {};
}

Element2 bracket_with(const DerivedLayout& l, int h, Orientation o) {
  int k = l.index[h][0];
  if (o == Orientation::Id) return Element2::term(k);
  return Element2::term(k, Orientation::Op, -1);
}

}  // namespace

OperadMorphism unit(Adjunction a, const OperadPresentation& o) {
  Family bf = black_family(a);
  Family wf = white_family(a);
  OperadPresentation b = black(bf, o);
  OperadPresentation w = white_direct(wf, b);
  DerivedLayout l1 = make_layout(o.signature, layout_kind(bf));
  DerivedLayout l2 = make_layout(b.signature, layout_kind(wf));
  std::vector<Element2> im;
  for (std::size_t g = 0; g < o.signature.size(); ++g) {
    int s = static_cast<int>(g);
    if (a == Adjunction::ComLie) {
      im.push_back(Element2::term(l2.index[l1.index[g][0]][0]));
      continue;
    }
    switch (o.signature[g].symmetry) {
      case Symmetry::NonSym:
        im.push_back(Element2::term(l2.at(l1.at(s, Slot::Prec), Slot::Prec)) +
                     Element2::term(l2.at(l1.at(s, Slot::Succ), Slot::Prec), Orientation::Op, -1));
        break;
      case Symmetry::Sym: {
        int k = l2.at(l1.at(s, Slot::Circ), Slot::Prec);
        im.push_back(Element2::term(k) + Element2::term(k, Orientation::Op));
        break;
      }
      case Symmetry::AntiSym: {
        int k = l2.at(l1.at(s, Slot::Ast), Slot::Prec);
        im.push_back(Element2::term(k) + Element2::term(k, Orientation::Op, -1));
        break;
      }
    }
  }
  return make_morphism(o, std::move(w), std::move(im));
}

OperadMorphism counit(Adjunction a, const OperadPresentation& o) {
  Family bf = black_family(a);
  Family wf = white_family(a);
  OperadPresentation w = white_direct(wf, o);
  OperadPresentation b = black(bf, w);
  WhiteProduct rule(make_layout(o.signature, layout_kind(wf)));
  DerivedLayout lb = make_layout(w.signature, layout_kind(bf));
  std::vector<Element2> im;
  for (const auto& d : lb.gens) {
    im.push_back(read_slot(rule, Element2::term(d.source), d.slot, o.signature));
  }
  return make_morphism(std::move(b), o, std::move(im));
}

OperadMorphism black_on_morphism(Family f, const OperadMorphism& m) {
  if (!is_black(f)) throw StructuralError(to_string(f) + " is not a black family");
  Family base = f == Family::ComBlack ? Family::AssBlack : f;
  if (base == Family::PreLieLBlack) throw StructuralError("left preLie family has no morphism action");
  OperadPresentation src = black(f, m.source);
  OperadPresentation tgt = black(f, m.target);
  DerivedLayout ls = make_layout(m.source.signature, LayoutKind::Doubling);
  DerivedLayout lt = make_layout(m.target.signature, LayoutKind::Doubling);
  Signature ass_tgt = derived_signature(m.target.signature, lt);
  BlackProduct rule(m.target.signature, lt);
  std::vector<Element2> proj;
  if (f == Family::ComBlack) proj = com_projection(m.target.signature);
  std::vector<Element2> im;
  if (f == Family::ComBlack) {
    DerivedLayout lc = make_layout(m.source.signature, LayoutKind::Transposing);
    for (const auto& d : lc.gens) {
      Slot s = m.source.signature[d.source].symmetry == Symmetry::NonSym
                   ? Slot::Prec
                   : ls.gens[ls.index[d.source][0]].slot;
      Element2 e = read_slot(rule, m.images[d.source], s, ass_tgt);
      im.push_back(project(e, proj, tgt.signature));
    }
  } else {
    for (const auto& d : ls.gens) im.push_back(read_slot(rule, m.images[d.source], d.slot, ass_tgt));
  }
  return make_morphism(std::move(src), std::move(tgt), std::move(im));
}

OperadMorphism white_on_morphism(Family f, const OperadMorphism& m) {
  if (is_black(f)) throw StructuralError(to_string(f) + " is not a white family");
  OperadPresentation src = white_direct(f, m.source);
  OperadPresentation tgt = white_direct(f, m.target);
  DerivedLayout ls = make_layout(m.source.signature, layout_kind(f));
  DerivedLayout lt = make_layout(m.target.signature, layout_kind(f));
  std::vector<Element2> im;
  for (const auto& d : ls.gens) {
    Element2 e = m.images[d.source];
    if (d.slot == Slot::Succ) e = e.flipped();
    Element2 out;
    for (const auto& t : e.terms()) {
      Element2 piece = layout_kind(f) == LayoutKind::Transposing
                           ? bracket_with(lt, t.gen, t.orient)
                           : cup_with(lt, m.target.signature, t.gen, t.orient);
      out = out + piece * t.coeff;
    }
    im.push_back(out);
  }
  return make_morphism(std::move(src), std::move(tgt), std::move(im));
}

bool triangle_check(Adjunction a, const OperadPresentation& o) {
  Family bf = black_family(a);
  Family wf = white_family(a);
  OperadMorphism first = compose(counit(a, black(bf, o)), black_on_morphism(bf, unit(a, o)));
  if (!same_images(first, identity_morphism(first.source))) return false;
  OperadMorphism second = compose(white_on_morphism(wf, counit(a, o)), unit(a, white_direct(wf, o)));
  return same_images(second, identity_morphism(second.source));
}

OperadMorphism associated_operations(const OperadPresentation& o) {
  OperadPresentation b = black(Family::AssBlack, o);
  DerivedLayout l = make_layout(o.signature, LayoutKind::Doubling);
  std::vector<Element2> im;
  for (std::size_t g = 0; g < o.signature.size(); ++g) {
    int s = static_cast<int>(g);
    switch (o.signature[g].symmetry) {
      case Symmetry::NonSym:
        im.push_back(Element2::term(l.at(s, Slot::Prec)) +
                     Element2::term(l.at(s, Slot::Succ), Orientation::Op, -1));
        break;
      case Symmetry::Sym: {
        int k = l.at(s, Slot::Circ);
        im.push_back(Element2::term(k) + Element2::term(k, Orientation::Op));
        break;
      }
      case Symmetry::AntiSym: {
        int k = l.at(s, Slot::Ast);
        im.push_back(Element2::term(k) + Element2::term(k, Orientation::Op, -1));
        break;
      }
    }
  }
  return make_morphism(o, std::move(b), std::move(im));
}

}  // namespace opcalc
