#include "opcalc/cochain.hpp"

#include <sstream>

namespace opcalc {

std::string to_string(Position p) {
  switch (p) {
    case Position::L0: return "L0";
    case Position::R0: return "R0";
    case Position::E1: return "E1";
  }
  return "?";
}

std::string to_string(Slot s) {
  switch (s) {
    case Slot::Prec: return "prec";
    case Slot::Succ: return "succ";
    case Slot::Circ: return "circ";
    case Slot::Ast: return "ast";
    case Slot::Star: return "star";
    case Slot::Brace: return "brace";
    case Slot::Cast: return "cast";
  }
  return "?";
}

std::string to_string(TableKind k) {
  switch (k) {
    case TableKind::BlackAss: return "BlackAss";
    case TableKind::BlackPreLieR: return "BlackPreLieR";
    case TableKind::BlackPreLieL: return "BlackPreLieL";
    case TableKind::WhiteCup: return "WhiteCup";
    case TableKind::WhiteCupBracket: return "WhiteCupBracket";
  }
  return "?";
}

Complex complex_of(TableKind k) {
  switch (k) {
    case TableKind::BlackPreLieR: return Complex::RelLeft;
    case TableKind::BlackPreLieL: return Complex::RelRight;
    default: return Complex::Full;
  }
}

int DerivedLayout::at(int source, Slot slot) const {
  const auto& idx = index.at(source);
  for (int k : idx) {
    if (k >= 0 && gens[k].slot == slot) return k;
  }
  throw StructuralError("derived generator " + to_string(slot) + " missing for source " +
                        std::to_string(source));
}

DerivedLayout make_layout(const Signature& src, LayoutKind kind) {
  DerivedLayout l;
  l.kind = kind;
  for (std::size_t g = 0; g < src.size(); ++g) {
    int s = static_cast<int>(g);
    std::array<int, 2> idx{-1, -1};
    auto push = [&](Slot slot, int k) {
      idx[k] = static_cast<int>(l.gens.size());
      l.gens.push_back({s, slot});
    };
    Symmetry sym = src[g].symmetry;
    if (kind == LayoutKind::Doubling) {
      if (sym == Symmetry::NonSym) {
        push(Slot::Prec, 0);
        push(Slot::Succ, 1);
      } else {
        push(sym == Symmetry::Sym ? Slot::Circ : Slot::Ast, 0);
      }
    } else {
      push(sym == Symmetry::NonSym ? Slot::Star
                                   : (sym == Symmetry::Sym ? Slot::Brace : Slot::Cast),
           0);
    }
    l.index.push_back(idx);
  }
  return l;
}

Signature derived_signature(const Signature& src, const DerivedLayout& layout) {
  std::vector<Generator> gens;
  for (const auto& d : layout.gens) {
    Symmetry s = Symmetry::NonSym;
    if (d.slot == Slot::Brace) s = Symmetry::AntiSym;
    if (d.slot == Slot::Cast) s = Symmetry::Sym;
    gens.push_back({src[d.source].name + "_" + to_string(d.slot), s});
  }
  return Signature(std::move(gens));
}

Value atom(Position p, int var) {
  Value v;
  v.pos = p;
  RawTerm t;
  t.arity = 1;
  t.leaves = {static_cast<std::uint8_t>(var), 0, 0};
  v.payload[t] = 1;
  return v;
}

std::optional<Value> differential(const Value& v) {
  if (v.pos == Position::E1 || v.payload.empty()) return std::nullopt;
  Value r;
  r.pos = Position::E1;
  r.payload = v.payload;
  if (v.pos == Position::L0) {
    for (auto& [t, c] : r.payload) c = -c;
  }
  return r;
}

namespace {

RawTerm combine(int gen, const RawTerm& a, const RawTerm& b) {
  RawTerm t;
  t.outer = static_cast<std::int16_t>(gen);
  if (a.arity == 1 && b.arity == 1) {
    t.arity = 2;
    t.leaves = {a.leaves[0], b.leaves[0], 0};
  } else if (a.arity == 2 && b.arity == 1) {
    t.arity = 3;
    t.shape = Shape::Left;
    t.inner = a.outer;
    t.leaves = {a.leaves[0], a.leaves[1], b.leaves[0]};
  } else if (a.arity == 1 && b.arity == 2) {
    t.arity = 3;
    t.shape = Shape::Right;
    t.inner = b.outer;
    t.leaves = {a.leaves[0], b.leaves[0], b.leaves[1]};
  } else {
    throw StructuralError("payload arity exceeds three");
  }
  return t;
}

// acc += coef * gen(a, b), or gen(b, a) when swapped
void accumulate(Payload& acc, int gen, bool swap, const Scalar& coef, const Payload& a,
                const Payload& b) {
  for (const auto& [ta, ca] : a) {
    for (const auto& [tb, cb] : b) {
      RawTerm t = swap ? combine(gen, tb, ta) : combine(gen, ta, tb);
      Scalar& slot = acc[t];
      slot += coef * ca * cb;
      if (slot == 0) acc.erase(t);
    }
  }
}

struct Summand {
  Slot slot;
  bool swap;
  int sign;
};

struct BlackRule {
  Position out;
  std::vector<Summand> terms;
};

std::optional<BlackRule> black_rule(Symmetry sym, Position a, Position b) {
  using P = Position;
  Slot s = sym == Symmetry::NonSym ? Slot::Prec : (sym == Symmetry::Sym ? Slot::Circ : Slot::Ast);
  Slot t = sym == Symmetry::NonSym ? Slot::Succ : s;
  int flip = sym == Symmetry::Sym ? 1 : -1;
  if ((a == P::L0 && b == P::E1) || (a == P::E1 && b == P::R0)) {
    return BlackRule{P::E1, {{s, false, 1}}};
  }
  if ((a == P::R0 && b == P::E1) || (a == P::E1 && b == P::L0)) {
    return BlackRule{P::E1, {{t, true, flip}}};
  }
  if (a == b && a != P::E1) return BlackRule{a, {{s, false, 1}, {t, true, flip}}};
  return std::nullopt;
}

}  // namespace

std::optional<Position> cup(Position a, Position b) {
  using P = Position;
  if (a == P::L0 && b == P::L0) return P::L0;
  if (a == P::R0 && b == P::R0) return P::R0;
  if (a == P::L0 && b == P::E1) return P::E1;
  if (a == P::E1 && b == P::R0) return P::E1;
  return std::nullopt;
}

BlackProduct::BlackProduct(Signature src, DerivedLayout layout)
    : src_(std::move(src)), layout_(std::move(layout)) {}

std::optional<Value> BlackProduct::apply(int gen, const std::optional<Value>& a,
                                         const std::optional<Value>& b) const {
  if (!a || !b) return std::nullopt;
  auto rule = black_rule(src_[gen].symmetry, a->pos, b->pos);
  if (!rule) return std::nullopt;
  Value v;
  v.pos = rule->out;
  for (const auto& s : rule->terms) {
    accumulate(v.payload, layout_.at(gen, s.slot), s.swap, s.sign, a->payload, b->payload);
  }
  if (v.payload.empty()) return std::nullopt;
  return v;
}

WhiteProduct::WhiteProduct(DerivedLayout layout) : layout_(std::move(layout)) {}

std::optional<Value> WhiteProduct::apply(int gen, const std::optional<Value>& a,
                                         const std::optional<Value>& b) const {
  if (!a || !b) return std::nullopt;
  const DerivedGen& d = layout_.gens.at(gen);
  std::optional<Position> fwd = cup(a->pos, b->pos);
  std::optional<Position> rev = cup(b->pos, a->pos);
  Value v;
  switch (d.slot) {
    case Slot::Prec:
    case Slot::Circ:
    case Slot::Ast:
      if (!fwd) return std::nullopt;
      v.pos = *fwd;
      accumulate(v.payload, d.source, false, 1, a->payload, b->payload);
      break;
    case Slot::Succ:
      if (!fwd) return std::nullopt;
      v.pos = *fwd;
      accumulate(v.payload, d.source, true, 1, a->payload, b->payload);
      break;
    default:
      // bracket type; both orders defined only on a common vertex, where they cancel
      if (fwd && rev) return std::nullopt;
      if (!fwd && !rev) return std::nullopt;
      v.pos = fwd ? *fwd : *rev;
      accumulate(v.payload, d.source, false, fwd ? 1 : -1, a->payload, b->payload);
      break;
  }
  if (v.payload.empty()) return std::nullopt;
  return v;
}

Element3 payload_to_element3(const Payload& p, const Signature& out) {
  std::vector<SparseVector::Entry> acc;
  for (const auto& [t, c] : p) {
    if (t.arity != 3) throw StructuralError("expected an arity-3 payload");
    auto r = out.lookup(t.shape, t.outer, t.inner, t.leaves);
    if (r) acc.emplace_back(r->first, c * r->second);
  }
  return SparseVector::from_entries(std::move(acc));
}

Element2 payload_to_element2(const Payload& p, const Signature& out) {
  Element2 e;
  for (const auto& [t, c] : p) {
    if (t.arity != 2) throw StructuralError("expected an arity-2 payload");
    Orientation o = t.leaves[0] < t.leaves[1] ? Orientation::Id : Orientation::Op;
    e = e + Element2::term(t.outer, o, c);
  }
  return e.normalized(out);
}

std::map<Position, Element3> evaluate(const Signature& sig, const Element3& e,
                                      const Configuration& c, const ProductRule& rule,
                                      const Signature& out) {
  std::map<Position, Payload> acc;
  for (const auto& [idx, coef] : e) {
    const Monomial3& m = sig.basis()[idx];
    const auto& l = m.leaves;
    std::optional<Value> a0 = atom(c.assignment[l[0]], l[0]);
    std::optional<Value> a1 = atom(c.assignment[l[1]], l[1]);
    std::optional<Value> a2 = atom(c.assignment[l[2]], l[2]);
    std::optional<Value> v;
    if (m.shape == Shape::Left) {
      v = rule.apply(m.outer, rule.apply(m.inner, a0, a1), a2);
    } else {
      v = rule.apply(m.outer, a0, rule.apply(m.inner, a1, a2));
    }
    if (!v) continue;
    Payload& p = acc[v->pos];
    for (const auto& [t, x] : v->payload) {
      Scalar& s = p[t];
      s += coef * x;
      if (s == 0) p.erase(t);
    }
  }
  std::map<Position, Element3> res;
  for (const auto& [pos, p] : acc) {
    Element3 r = payload_to_element3(p, out);
    if (!r.empty()) res.emplace(pos, std::move(r));
  }
  return res;
}

Element3 eval_relator(const Signature& sig, const Element3& e, const Configuration& c,
                      const ProductRule& rule, const Signature& out) {
  auto res = evaluate(sig, e, c, rule, out);
  for (const auto& [pos, v] : res) {
    if (pos != Position::E1) {
      throw StructuralError("evaluation produced a nonzero vertex component");
    }
  }
  auto it = res.find(Position::E1);
  return it == res.end() ? Element3{} : it->second;
}

std::vector<Configuration> configurations(Complex c) {
  std::vector<Configuration> out;
  using P = Position;
  if (c == Complex::Full) {
    for (const auto& p : all_permutations()) {
      static const P atoms[] = {P::E1, P::L0, P::R0};
      out.push_back({{atoms[p[0]], atoms[p[1]], atoms[p[2]]}, c});
    }
    return out;
  }
  P v = c == Complex::RelLeft ? P::R0 : P::L0;
  for (int k = 0; k < 3; ++k) {
    Configuration cf{{v, v, v}, c};
    cf.assignment[k] = P::E1;
    out.push_back(cf);
  }
  return out;
}

std::vector<Configuration> all_configurations(Complex c) {
  using P = Position;
  std::vector<P> atoms;
  if (c != Complex::RelRight) atoms.push_back(P::R0);
  if (c != Complex::RelLeft) atoms.push_back(P::L0);
  atoms.push_back(P::E1);
  std::vector<Configuration> out;
  for (P a : atoms) {
    for (P b : atoms) {
      for (P d : atoms) out.push_back({{a, b, d}, c});
    }
  }
  return out;
}

namespace {

std::vector<Position> atoms_of(Complex c) {
  using P = Position;
  if (c == Complex::RelLeft) return {P::R0, P::E1};
  if (c == Complex::RelRight) return {P::L0, P::E1};
  return {P::L0, P::R0, P::E1};
}

bool same_value(const std::optional<Value>& a, const std::optional<Value>& b) {
  bool za = !a || a->payload.empty();
  bool zb = !b || b->payload.empty();
  if (za || zb) return za && zb;
  return a->pos == b->pos && a->payload == b->payload;
}

std::optional<Value> add(const std::optional<Value>& a, const std::optional<Value>& b) {
  if (!a || a->payload.empty()) return b;
  if (!b || b->payload.empty()) return a;
  if (a->pos != b->pos) throw StructuralError("adding cochains of different positions");
  Value r = *a;
  for (const auto& [t, c] : b->payload) {
    Scalar& s = r.payload[t];
    s += c;
    if (s == 0) r.payload.erase(t);
  }
  return r;
}

std::optional<Value> negate(std::optional<Value> v) {
  if (v) {
    for (auto& [t, c] : v->payload) c = -c;
  }
  return v;
}

std::optional<Value> d_opt(const std::optional<Value>& v) {
  if (!v) return std::nullopt;
  return differential(*v);
}

}  // namespace

std::vector<std::string> leibniz_check(TableKind kind, Symmetry sym) {
  std::vector<std::string> failures;
  Signature src({{"g", sym}});
  std::unique_ptr<ProductRule> rule;
  Signature ruled = src;
  if (kind == TableKind::WhiteCup || kind == TableKind::WhiteCupBracket) {
    DerivedLayout l = make_layout(
        src, kind == TableKind::WhiteCup ? LayoutKind::Doubling : LayoutKind::Transposing);
    ruled = derived_signature(src, l);
    rule = std::make_unique<WhiteProduct>(l);
  } else {
    rule = std::make_unique<BlackProduct>(src, make_layout(src, LayoutKind::Doubling));
  }
  auto atoms = atoms_of(complex_of(kind));
  for (std::size_t g = 0; g < ruled.size(); ++g) {
    for (Position pa : atoms) {
      for (Position pb : atoms) {
        std::optional<Value> a = atom(pa, 0);
        std::optional<Value> b = atom(pb, 1);
        int gi = static_cast<int>(g);
        auto lhs = d_opt(rule->apply(gi, a, b));
        auto t2 = rule->apply(gi, a, d_opt(b));
        if (pa == Position::E1) t2 = negate(t2);
        auto rhs = add(rule->apply(gi, d_opt(a), b), t2);
        if (!same_value(lhs, rhs)) {
          failures.push_back(to_string(kind) + " " + to_string(sym) + " " + ruled[g].name +
                             " (" + to_string(pa) + "," + to_string(pb) + ")");
        }
      }
    }
  }
  return failures;
}

namespace {

std::string value_string(const std::optional<Value>& v, const Signature& out) {
  if (!v || v->payload.empty()) return "0";
  static const char* vars[] = {"a", "b", "c"};
  std::string s = to_string(v->pos) + "[";
  bool first = true;
  for (const auto& [t, c] : v->payload) {
    if (!first) s += " ";
    first = false;
    s += c < 0 ? "-" : "+";
    s += out[t.outer].name + "(" + vars[t.leaves[0]] + "," + vars[t.leaves[1]] + ")";
  }
  return s + "]";
}

}  // namespace

std::string dump_table(TableKind kind) {
  std::ostringstream out;
  out << "table " << to_string(kind) << "\n";
  auto atoms = atoms_of(complex_of(kind));
  for (Symmetry sym : {Symmetry::NonSym, Symmetry::Sym, Symmetry::AntiSym}) {
    Signature src({{"g", sym}});
    std::unique_ptr<ProductRule> rule;
    Signature ruled = src;
    Signature payload_sig = src;
    if (kind == TableKind::WhiteCup || kind == TableKind::WhiteCupBracket) {
      DerivedLayout l = make_layout(
          src, kind == TableKind::WhiteCup ? LayoutKind::Doubling : LayoutKind::Transposing);
      ruled = derived_signature(src, l);
      rule = std::make_unique<WhiteProduct>(l);
    } else {
      DerivedLayout l = make_layout(src, LayoutKind::Doubling);
      payload_sig = derived_signature(src, l);
      rule = std::make_unique<BlackProduct>(src, l);
    }
    for (std::size_t g = 0; g < ruled.size(); ++g) {
      out << "  " << ruled[g].name << " (" << to_string(ruled[g].symmetry) << ")\n";
      for (Position pa : atoms) {
        for (Position pb : atoms) {
          auto v = rule->apply(static_cast<int>(g), atom(pa, 0), atom(pb, 1));
          out << "    " << to_string(pa) << " a * " << to_string(pb)
              << " b = " << value_string(v, payload_sig) << "\n";
        }
      }
    }
  }
  return out.str();
}

}  // namespace opcalc
