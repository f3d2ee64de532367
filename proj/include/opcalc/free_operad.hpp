#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "opcalc/linalg.hpp"

namespace opcalc {

enum class Symmetry : std::uint8_t { NonSym, Sym, AntiSym };
enum class Shape : std::uint8_t { Left, Right };
enum class Orientation : std::uint8_t { Id, Op };

std::string to_string(Symmetry s);
Symmetry parse_symmetry(const std::string& s);

struct Generator {
  std::string name;
  Symmetry symmetry = Symmetry::NonSym;
  bool operator==(const Generator&) const = default;
};

// Left:  outer(inner(l0,l1), l2)
// Right: outer(l0, inner(l1,l2))
// Leaves are a permutation of the variables 0,1,2 (x,y,z).
struct Monomial3 {
  Shape shape = Shape::Left;
  std::uint16_t outer = 0;
  std::uint16_t inner = 0;
  std::array<std::uint8_t, 3> leaves{0, 1, 2};
  auto operator<=>(const Monomial3&) const = default;
};

struct SignedMonomial {
  int sign = 1;
  Monomial3 monomial;
};

int permutation_index(const std::array<std::uint8_t, 3>& p);
int permutation_sign(const std::array<std::uint8_t, 3>& p);
const std::array<std::array<std::uint8_t, 3>, 6>& all_permutations();

struct Basis3 {
  std::vector<Monomial3> monomials;
  // raw planar key -> (basis index or -1, sign)
  std::vector<std::pair<std::int32_t, std::int8_t>> raw;
};

class Signature {
 public:
  Signature();
  explicit Signature(std::vector<Generator> gens);

  std::size_t size() const { return gens_.size(); }
  const Generator& operator[](std::size_t i) const { return gens_[i]; }
  const std::vector<Generator>& generators() const { return gens_; }
  int p() const;
  int q() const;
  int r() const;
  std::optional<int> find(const std::string& name) const;
  // Same number of generators with the same symmetry sequence.
  bool same_shape(const Signature& o) const;
  bool operator==(const Signature& o) const { return gens_ == o.gens_; }

  const std::vector<Monomial3>& basis() const { return basis_->monomials; }
  std::size_t dim3() const { return basis_->monomials.size(); }
  std::size_t raw_key(Shape shape, int outer, int inner,
                      const std::array<std::uint8_t, 3>& leaves) const;
  // Canonical basis index and sign of a raw planar monomial; nullopt if it
  // vanishes (never happens for binary generators but kept for callers).
  std::optional<std::pair<Key, int>> lookup(Shape shape, int outer, int inner,
                                            const std::array<std::uint8_t, 3>& leaves) const;
  std::size_t index_of(const Monomial3& m) const;

 private:
  std::vector<Generator> gens_;
  std::shared_ptr<const Basis3> basis_;
};

std::optional<SignedMonomial> canonicalize(const Signature& sig, const Monomial3& raw);

// Element of the arity-3 component of the free operad: keys index sig.basis().
using Element3 = SparseVector;

Element3 monomial_element(const Signature& sig, Shape shape, int outer, int inner,
                          const std::array<std::uint8_t, 3>& leaves, const Scalar& c = 1);

// Arity-2 element: linear combination of generators and their opposites.
class Element2 {
 public:
  struct Term {
    std::uint16_t gen;
    Orientation orient;
    Scalar coeff;
  };
  Element2() = default;
  static Element2 term(int gen, Orientation o = Orientation::Id, const Scalar& c = 1);

  // Sym opposites fold onto Id, AntiSym opposites onto -Id, like terms merge.
  Element2 normalized(const Signature& sig) const;
  Element2 flipped() const;
  Element2 operator+(const Element2& o) const;
  Element2 operator*(const Scalar& c) const;
  bool operator==(const Element2& o) const;
  bool empty() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

 private:
  std::vector<Term> terms_;
};

std::string to_string(const Element2& e, const Signature& sig);

// Planar monomial obtained by letting Op orientations swap the children of
// the outer and inner nodes.
Monomial3 orient(const Monomial3& m, Orientation outer, Orientation inner);

// Operadic substitution of generator images into an arity-3 element.
Element3 substitute(const Signature& src, const Element3& e, const std::vector<Element2>& images,
                    const Signature& tgt);

// Relabel variables: variable v becomes perm[v].
Element3 permute_variables(const Signature& sig, const Element3& e,
                           const std::array<std::uint8_t, 3>& perm);

Element3 opposite(const Signature& sig, const Element3& e);

std::string to_string(const Monomial3& m, const Signature& sig);
std::string to_string(const Element3& e, const Signature& sig);

}  // namespace opcalc
