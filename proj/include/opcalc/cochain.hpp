#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "opcalc/free_operad.hpp"

namespace opcalc {

// Cochain atoms on the interval: the two vertex cochains and the edge.
enum class Position : std::uint8_t { L0, R0, E1 };
enum class Complex : std::uint8_t { Full, RelLeft, RelRight };

std::string to_string(Position p);

struct Configuration {
  std::array<Position, 3> assignment;
  Complex complex = Complex::Full;
};

// Derived generator slots. Doubling layouts (Ass / preLie black products,
// Ass / Perm white products, adm) use Prec/Succ for nonsym sources and
// Circ/Ast for sym/antisym ones; transposing layouts (Com black, Lie white)
// use Star/Brace/Cast.
enum class Slot : std::uint8_t { Prec, Succ, Circ, Ast, Star, Brace, Cast };
enum class LayoutKind : std::uint8_t { Doubling, Transposing };

std::string to_string(Slot s);

struct DerivedGen {
  int source;
  Slot slot;
};

struct DerivedLayout {
  LayoutKind kind = LayoutKind::Doubling;
  std::vector<DerivedGen> gens;
  // per source generator: derived index of its first and second slot (-1 if none)
  std::vector<std::array<int, 2>> index;

  int at(int source, Slot slot) const;
};

DerivedLayout make_layout(const Signature& src, LayoutKind kind);
Signature derived_signature(const Signature& src, const DerivedLayout& layout);

// Planar tree with 1..3 leaves used for payloads.
struct RawTerm {
  std::uint8_t arity = 1;
  Shape shape = Shape::Left;
  std::int16_t outer = -1;
  std::int16_t inner = -1;
  std::array<std::uint8_t, 3> leaves{0, 0, 0};
  auto operator<=>(const RawTerm&) const = default;
};

using Payload = std::map<RawTerm, Scalar>;

struct Value {
  Position pos = Position::E1;
  Payload payload;
};

// Atom for variable v placed at position p.
Value atom(Position p, int var);
// Differential: d(R0 x) = E1 x, d(L0 x) = -E1 x, d(E1 x) = 0.
std::optional<Value> differential(const Value& v);

// A binary product on cochain values, indexed by the generators of some
// signature.
class ProductRule {
 public:
  virtual ~ProductRule() = default;
  virtual std::optional<Value> apply(int gen, const std::optional<Value>& a,
                                     const std::optional<Value>& b) const = 0;
};

enum class TableKind : std::uint8_t { BlackAss, BlackPreLieR, BlackPreLieL, WhiteCup, WhiteCupBracket };

std::string to_string(TableKind k);
Complex complex_of(TableKind k);

// Black multiplication of a source operad's generators on cochains with
// payloads in the derived operad (doubling layout).
class BlackProduct : public ProductRule {
 public:
  BlackProduct(Signature src, DerivedLayout layout);
  std::optional<Value> apply(int gen, const std::optional<Value>& a,
                             const std::optional<Value>& b) const override;

 private:
  Signature src_;
  DerivedLayout layout_;
};

// Cup products: a derived generator (source op, slot) of a white product acts
// on cochains with payloads in the source operad.
//   Prec/Circ/Ast  : cup tensor op
//   Succ           : cup tensor op^op
//   Star/Brace/Cast: (cup - cup^op) tensor op
class WhiteProduct : public ProductRule {
 public:
  explicit WhiteProduct(DerivedLayout layout);
  std::optional<Value> apply(int gen, const std::optional<Value>& a,
                             const std::optional<Value>& b) const override;

 private:
  DerivedLayout layout_;
};

std::optional<Position> cup(Position a, Position b);

// Evaluate an arity-3 element (over the rule's signature) at a configuration;
// the result is split by output position and converted to elements of out.
std::map<Position, Element3> evaluate(const Signature& sig, const Element3& e,
                                      const Configuration& c, const ProductRule& rule,
                                      const Signature& out);

// The E1 component of evaluate(); the other positions must vanish when the
// configuration carries exactly one edge atom.
Element3 eval_relator(const Signature& sig, const Element3& e, const Configuration& c,
                      const ProductRule& rule, const Signature& out);

// Configurations with one edge atom: all six for Full, the three with two
// R0 (resp. L0) vertex atoms for RelLeft (resp. RelRight).
std::vector<Configuration> configurations(Complex c);
// Every assignment of atoms of the complex to x,y,z.
std::vector<Configuration> all_configurations(Complex c);

Element2 payload_to_element2(const Payload& p, const Signature& out);
Element3 payload_to_element3(const Payload& p, const Signature& out);

// Leibniz rule d(a*b) = da*b + a*db on all atom pairs of the complex, for a
// one-generator signature of the given symmetry; returns failure messages.
std::vector<std::string> leibniz_check(TableKind kind, Symmetry sym);

std::string dump_table(TableKind kind);

}  // namespace opcalc
