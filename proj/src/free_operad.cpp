#include "opcalc/free_operad.hpp"

#include <algorithm>
#include <map>

namespace opcalc {

std::string to_string(Symmetry s) {
  switch (s) {
    case Symmetry::NonSym: return "nonsym";
    case Symmetry::Sym: return "sym";
    case Symmetry::AntiSym: return "antisym";
  }
  return "?";
}

Symmetry parse_symmetry(const std::string& s) {
  if (s == "nonsym") return Symmetry::NonSym;
  if (s == "sym") return Symmetry::Sym;
  if (s == "antisym") return Symmetry::AntiSym;
  throw StructuralError("unknown symmetry '" + s + "'");
}

const std::array<std::array<std::uint8_t, 3>, 6>& all_permutations() {
  static const std::array<std::array<std::uint8_t, 3>, 6> perms{{
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  return perms;
}

int permutation_index(const std::array<std::uint8_t, 3>& p) {
  return p[0] * 2 + (p[1] > p[2] ? 1 : 0);
}

int permutation_sign(const std::array<std::uint8_t, 3>& p) {
  int inv = (p[0] > p[1]) + (p[0] > p[2]) + (p[1] > p[2]);
  return inv % 2 ? -1 : 1;
}

std::optional<SignedMonomial> canonicalize(const Signature& sig, const Monomial3& raw) {
  if (raw.outer >= sig.size() || raw.inner >= sig.size()) {
    throw StructuralError("generator id out of range for signature");
  }
  SignedMonomial r{1, raw};
  Monomial3& m = r.monomial;
  Symmetry inner = sig[m.inner].symmetry;
  Symmetry outer = sig[m.outer].symmetry;
  int i0 = m.shape == Shape::Left ? 0 : 1;
  if (inner != Symmetry::NonSym && m.leaves[i0] > m.leaves[i0 + 1]) {
    std::swap(m.leaves[i0], m.leaves[i0 + 1]);
    if (inner == Symmetry::AntiSym) r.sign = -r.sign;
  }
  if (outer != Symmetry::NonSym && m.shape == Shape::Right) {
    m.shape = Shape::Left;
    m.leaves = {m.leaves[1], m.leaves[2], m.leaves[0]};
    if (outer == Symmetry::AntiSym) r.sign = -r.sign;
  }
  return r;
}

namespace {

std::shared_ptr<const Basis3> build_basis(const Signature& sig) {
  auto b = std::make_shared<Basis3>();
  const int g = static_cast<int>(sig.size());
  for (Shape shape : {Shape::Left, Shape::Right}) {
    for (int o = 0; o < g; ++o) {
      for (int i = 0; i < g; ++i) {
        for (const auto& p : all_permutations()) {
          Monomial3 m{shape, static_cast<std::uint16_t>(o), static_cast<std::uint16_t>(i), p};
          auto c = canonicalize(sig, m);
          if (c && c->sign == 1 && c->monomial == m) b->monomials.push_back(m);
        }
      }
    }
  }
  b->raw.assign(static_cast<std::size_t>(2 * g * g * 6), {-1, 0});
  for (Shape shape : {Shape::Left, Shape::Right}) {
    for (int o = 0; o < g; ++o) {
      for (int i = 0; i < g; ++i) {
        for (const auto& p : all_permutations()) {
          Monomial3 m{shape, static_cast<std::uint16_t>(o), static_cast<std::uint16_t>(i), p};
          auto c = canonicalize(sig, m);
          if (!c) continue;
          auto it = std::lower_bound(b->monomials.begin(), b->monomials.end(), c->monomial);
          std::size_t key =
              ((static_cast<std::size_t>(shape) * g + o) * g + i) * 6 + permutation_index(p);
          b->raw[key] = {static_cast<std::int32_t>(it - b->monomials.begin()),
                         static_cast<std::int8_t>(c->sign)};
        }
      }
    }
  }
  return b;
}

}  // namespace

Signature::Signature() : basis_(std::make_shared<Basis3>()) {}

Signature::Signature(std::vector<Generator> gens) : gens_(std::move(gens)) {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].name.empty()) throw StructuralError("generator with empty name");
    for (std::size_t j = 0; j < i; ++j) {
      if (gens_[j].name == gens_[i].name) {
        throw StructuralError("duplicate generator name '" + gens_[i].name + "'");
      }
    }
  }
  if (gens_.size() > 4096) throw StructuralError("too many generators");
  basis_ = build_basis(*this);
}

int Signature::p() const {
  return static_cast<int>(std::count_if(gens_.begin(), gens_.end(), [](const Generator& g) {
    return g.symmetry == Symmetry::NonSym;
  }));
}

int Signature::q() const {
  return static_cast<int>(std::count_if(gens_.begin(), gens_.end(), [](const Generator& g) {
    return g.symmetry == Symmetry::Sym;
  }));
}

int Signature::r() const {
  return static_cast<int>(std::count_if(gens_.begin(), gens_.end(), [](const Generator& g) {
    return g.symmetry == Symmetry::AntiSym;
  }));
}

std::optional<int> Signature::find(const std::string& name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].name == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

bool Signature::same_shape(const Signature& o) const {
  if (gens_.size() != o.gens_.size()) return false;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].symmetry != o.gens_[i].symmetry) return false;
  }
  return true;
}

std::size_t Signature::raw_key(Shape shape, int outer, int inner,
                               const std::array<std::uint8_t, 3>& leaves) const {
  const std::size_t g = gens_.size();
  return ((static_cast<std::size_t>(shape) * g + outer) * g + inner) * 6 +
         permutation_index(leaves);
}

std::optional<std::pair<Key, int>> Signature::lookup(
    Shape shape, int outer, int inner, const std::array<std::uint8_t, 3>& leaves) const {
  if (outer < 0 || inner < 0 || static_cast<std::size_t>(outer) >= gens_.size() ||
      static_cast<std::size_t>(inner) >= gens_.size()) {
    throw StructuralError("generator id out of range for signature");
  }
  const auto& [idx, sign] = basis_->raw[raw_key(shape, outer, inner, leaves)];
  if (idx < 0) return std::nullopt;
  return std::make_pair(static_cast<Key>(idx), static_cast<int>(sign));
}

std::size_t Signature::index_of(const Monomial3& m) const {
  auto r = lookup(m.shape, m.outer, m.inner, m.leaves);
  if (!r || r->second != 1 || basis()[r->first] != m) {
    throw StructuralError("monomial is not a canonical basis element");
  }
  return r->first;
}

Element3 monomial_element(const Signature& sig, Shape shape, int outer, int inner,
                          const std::array<std::uint8_t, 3>& leaves, const Scalar& c) {
  auto r = sig.lookup(shape, outer, inner, leaves);
  if (!r) return {};
  return SparseVector::unit(r->first, c * r->second);
}

Element2 Element2::term(int gen, Orientation o, const Scalar& c) {
  Element2 e;
  if (c != 0) e.terms_.push_back({static_cast<std::uint16_t>(gen), o, c});
  return e;
}

Element2 Element2::normalized(const Signature& sig) const {
  std::map<std::pair<int, int>, Scalar> acc;
  for (const auto& t : terms_) {
    if (t.gen >= sig.size()) throw StructuralError("generator id out of range in arity-2 element");
    Symmetry s = sig[t.gen].symmetry;
    Orientation o = t.orient;
    Scalar c = t.coeff;
    if (o == Orientation::Op && s != Symmetry::NonSym) {
      o = Orientation::Id;
      if (s == Symmetry::AntiSym) c = -c;
    }
    acc[{t.gen, static_cast<int>(o)}] += c;
  }
  Element2 e;
  for (const auto& [k, c] : acc) {
    if (c != 0) {
      e.terms_.push_back(
          {static_cast<std::uint16_t>(k.first), static_cast<Orientation>(k.second), c});
    }
  }
  return e;
}

Element2 Element2::flipped() const {
  Element2 e = *this;
  for (auto& t : e.terms_) {
    t.orient = t.orient == Orientation::Id ? Orientation::Op : Orientation::Id;
  }
  return e;
}

Element2 Element2::operator+(const Element2& o) const {
  Element2 e = *this;
  e.terms_.insert(e.terms_.end(), o.terms_.begin(), o.terms_.end());
  return e;
}

Element2 Element2::operator*(const Scalar& c) const {
  Element2 e;
  if (c == 0) return e;
  e = *this;
  for (auto& t : e.terms_) t.coeff *= c;
  return e;
}

bool Element2::operator==(const Element2& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& a = terms_[i];
    const auto& b = o.terms_[i];
    if (a.gen != b.gen || a.orient != b.orient || a.coeff != b.coeff) return false;
  }
  return true;
}

std::string to_string(const Element2& e, const Signature& sig) {
  if (e.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : e.terms()) {
    Scalar c = t.coeff;
    if (!first) {
      s += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    } else if (c < 0) {
      s += "-";
      c = -c;
    }
    first = false;
    if (c != 1) s += to_string(c) + "*";
    s += sig[t.gen].name + (t.orient == Orientation::Op ? "(y,x)" : "(x,y)");
  }
  return s;
}

Monomial3 orient(const Monomial3& m, Orientation outer, Orientation inner) {
  const auto& l = m.leaves;
  bool inner_op = inner == Orientation::Op;
  bool outer_op = outer == Orientation::Op;
  Monomial3 t = m;
  if (m.shape == Shape::Left) {
    std::uint8_t i0 = inner_op ? l[1] : l[0];
    std::uint8_t i1 = inner_op ? l[0] : l[1];
    if (outer_op) {
      t.shape = Shape::Right;
      t.leaves = {l[2], i0, i1};
    } else {
      t.leaves = {i0, i1, l[2]};
    }
  } else {
    std::uint8_t i0 = inner_op ? l[2] : l[1];
    std::uint8_t i1 = inner_op ? l[1] : l[2];
    if (outer_op) {
      t.shape = Shape::Left;
      t.leaves = {i0, i1, l[0]};
    } else {
      t.leaves = {l[0], i0, i1};
    }
  }
  return t;
}

Element3 substitute(const Signature& src, const Element3& e, const std::vector<Element2>& images,
                    const Signature& tgt) {
  if (images.size() != src.size()) {
    throw StructuralError("substitution needs one image per source generator");
  }
  std::vector<SparseVector::Entry> acc;
  for (const auto& [idx, c] : e) {
    if (idx >= src.dim3()) throw StructuralError("basis key outside source ambient");
    const Monomial3& m = src.basis()[idx];
    for (const auto& to : images[m.outer].terms()) {
      for (const auto& ti : images[m.inner].terms()) {
        Scalar coef = c * to.coeff * ti.coeff;
        Monomial3 t = orient(m, to.orient, ti.orient);
        auto r = tgt.lookup(t.shape, to.gen, ti.gen, t.leaves);
        if (r) acc.emplace_back(r->first, coef * r->second);
      }
    }
  }
  return SparseVector::from_entries(std::move(acc));
}

Element3 permute_variables(const Signature& sig, const Element3& e,
                           const std::array<std::uint8_t, 3>& perm) {
  std::vector<SparseVector::Entry> acc;
  for (const auto& [idx, c] : e) {
    const Monomial3& m = sig.basis()[idx];
    std::array<std::uint8_t, 3> leaves{perm[m.leaves[0]], perm[m.leaves[1]], perm[m.leaves[2]]};
    auto r = sig.lookup(m.shape, m.outer, m.inner, leaves);
    if (r) acc.emplace_back(r->first, c * r->second);
  }
  return SparseVector::from_entries(std::move(acc));
}

Element3 opposite(const Signature& sig, const Element3& e) {
  std::vector<Element2> images;
  for (std::size_t g = 0; g < sig.size(); ++g) {
    images.push_back(Element2::term(static_cast<int>(g), Orientation::Op));
  }
  return substitute(sig, e, images, sig);
}

namespace {
const char* var_name(int v) {
  static const char* names[] = {"x", "y", "z"};
  return names[v];
}
}  // namespace

std::string to_string(const Monomial3& m, const Signature& sig) {
  const std::string& o = sig[m.outer].name;
  const std::string& i = sig[m.inner].name;
  const auto& l = m.leaves;
  if (m.shape == Shape::Left) {
    return o + "(" + i + "(" + var_name(l[0]) + "," + var_name(l[1]) + ")," + var_name(l[2]) + ")";
  }
  return o + "(" + var_name(l[0]) + "," + i + "(" + var_name(l[1]) + "," + var_name(l[2]) + "))";
}

std::string to_string(const Element3& e, const Signature& sig) {
  if (e.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [idx, coef] : e) {
    Scalar c = coef;
    if (!first) {
      s += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    } else if (c < 0) {
      s += "-";
      c = -c;
    }
    first = false;
    if (c != 1) s += to_string(c) + "*";
    s += to_string(sig.basis()[idx], sig);
  }
  return s;
}

}  // namespace opcalc
