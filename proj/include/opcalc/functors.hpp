#pragma once

#include "opcalc/cochain.hpp"
#include "opcalc/koszul.hpp"
#include "opcalc/presentation.hpp"

namespace opcalc {

enum class Family : std::uint8_t {
  AssBlack,
  ComBlack,
  PreLieRBlack,
  PreLieLBlack,
  AssWhite,
  LieWhite,
  PermWhite,
};

std::string to_string(Family f);
bool is_black(Family f);
LayoutKind layout_kind(Family f);
Complex complex_of(Family f);
// Koszul dual family: AssBlack<->AssWhite, ComBlack<->LieWhite,
// PreLieRBlack<->PermWhite.
Family dual_family(Family f);

// Generators of the derived operad, in source order.
Signature derived_signature(Family f, const Signature& src);

OperadPresentation black(Family f, const OperadPresentation& o);
OperadPresentation white_direct(Family f, const OperadPresentation& o);
OperadPresentation white_via_dual(Family f, const OperadPresentation& o);
// The same computations without the result cache.
OperadPresentation black_uncached(Family f, const OperadPresentation& o);
OperadPresentation white_uncached(Family f, const OperadPresentation& o);

// Projection of the Ass black product onto the Com one
// (prec -> star, succ -> star^op, circ -> brace, ast -> cast).
std::vector<Element2> com_projection(const Signature& src);

OperadPresentation sum(const OperadPresentation& o, const OperadPresentation& p);
OperadPresentation prod(const OperadPresentation& o, const OperadPresentation& p);
OperadPresentation adm(const OperadPresentation& o);
OperadPresentation opposite_operad(const OperadPresentation& o);

}  // namespace opcalc
