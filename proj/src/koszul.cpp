#include "opcalc/koszul.hpp"

#include <map>

namespace opcalc {

namespace {

const std::string kDualSuffix = "_dual";

std::string dual_name(const std::string& n) {
  if (n.size() > kDualSuffix.size() &&
      n.compare(n.size() - kDualSuffix.size(), kDualSuffix.size(), kDualSuffix) == 0) {
    return n.substr(0, n.size() - kDualSuffix.size());
  }
  return n + kDualSuffix;
}

// Orientation expansion of a generator into planar copies.
std::vector<std::pair<Orientation, int>> lift(Symmetry s) {
  switch (s) {
    case Symmetry::NonSym: return {{Orientation::Id, 1}};
    case Symmetry::Sym: return {{Orientation::Id, 1}, {Orientation::Op, 1}};
    case Symmetry::AntiSym: return {{Orientation::Id, 1}, {Orientation::Op, -1}};
  }
  return {};
}

std::size_t planar_key(const Monomial3& m, std::size_t g) {
  return ((static_cast<std::size_t>(m.shape) * g + m.outer) * g + m.inner) * 6 +
         permutation_index(m.leaves);
}

// planar key -> (basis index, coefficient) pairs for every basis monomial;
// weights[i] is the number of planar copies of basis monomial i.
std::vector<std::vector<std::pair<Key, int>>> lifted(const Signature& sig,
                                                     std::vector<int>* weights = nullptr) {
  const std::size_t g = sig.size();
  std::vector<std::vector<std::pair<Key, int>>> out(2 * g * g * 6);
  Key idx = 0;
  for (const auto& m : sig.basis()) {
    for (const auto& [oo, oc] : lift(sig[m.outer].symmetry)) {
      for (const auto& [io, ic] : lift(sig[m.inner].symmetry)) {
        Monomial3 t = orient(m, oo, io);
        out[planar_key(t, g)].emplace_back(idx, oc * ic);
      }
    }
    if (weights) {
      weights->push_back(static_cast<int>(lift(sig[m.outer].symmetry).size() *
                                          lift(sig[m.inner].symmetry).size()));
    }
    ++idx;
  }
  return out;
}

}  // namespace

Signature dual_signature(const Signature& sig) {
  std::vector<Generator> gens;
  for (const auto& g : sig.generators()) {
    Symmetry s = g.symmetry;
    if (s == Symmetry::Sym) {
      s = Symmetry::AntiSym;
    } else if (s == Symmetry::AntiSym) {
      s = Symmetry::Sym;
    }
    gens.push_back({dual_name(g.name), s});
  }
  return Signature(std::move(gens));
}

std::vector<SparseVector> pairing_rows(const Signature& sig, const Signature& dual,
                                       PairingConvention c) {
  if (sig.size() != dual.size()) throw StructuralError("pairing needs equal generator counts");
  for (std::size_t i = 0; i < sig.size(); ++i) {
    bool ok = (sig[i].symmetry == Symmetry::NonSym && dual[i].symmetry == Symmetry::NonSym) ||
              (sig[i].symmetry == Symmetry::Sym && dual[i].symmetry == Symmetry::AntiSym) ||
              (sig[i].symmetry == Symmetry::AntiSym && dual[i].symmetry == Symmetry::Sym);
    if (!ok) throw StructuralError("pairing needs transposed symmetries");
  }
  const std::size_t g = sig.size();
  std::vector<int> w;
  auto a = lifted(sig, &w);
  auto b = lifted(dual);
  std::vector<std::vector<SparseVector::Entry>> rows(sig.dim3());
  for (std::size_t key = 0; key < a.size(); ++key) {
    if (a[key].empty() || b[key].empty()) continue;
    std::size_t perm = key % 6;
    std::size_t shape = key / (6 * g * g);
    int eps = shape == 0 ? 1 : c.right_sign;
    if (c.use_perm_sign) eps *= permutation_sign(all_permutations()[perm]);
    for (const auto& [i, ci] : a[key]) {
      for (const auto& [j, cj] : b[key]) rows[i].emplace_back(j, Scalar(eps * ci * cj) / w[i]);
    }
  }
  std::vector<SparseVector> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.push_back(SparseVector::from_entries(std::move(r)));
  return out;
}

Scalar pairing_determinant(const Signature& sig, PairingConvention c) {
  Signature d = dual_signature(sig);
  return determinant(pairing_rows(sig, d, c), sig.dim3());
}

OperadPresentation dual(const OperadPresentation& o, PairingConvention c) {
  Signature d = dual_signature(o.signature);
  auto rows = pairing_rows(o.signature, d, c);
  Subspace rel = annihilator(o.relations, rows, d.dim3());
  return from_relations(dual_name(o.name), std::move(d), std::move(rel));
}

}  // namespace opcalc
