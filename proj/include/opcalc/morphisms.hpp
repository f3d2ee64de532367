#pragma once

#include "opcalc/functors.hpp"

namespace opcalc {

struct OperadMorphism {
  OperadPresentation source;
  OperadPresentation target;
  // one image per source generator, over the target signature
  std::vector<Element2> images;
};

// Normalizes the images and checks the symmetry constraints.
OperadMorphism make_morphism(OperadPresentation source, OperadPresentation target,
                             std::vector<Element2> images);
OperadMorphism identity_morphism(const OperadPresentation& o);

bool is_morphism(const OperadMorphism& f);
// g after f
OperadMorphism compose(const OperadMorphism& g, const OperadMorphism& f);
// Same generator images after normalization.
bool same_images(const OperadMorphism& f, const OperadMorphism& g);

std::string to_string(const OperadMorphism& f);

enum class Adjunction : std::uint8_t { Ass, ComLie, PreLiePerm };

std::string to_string(Adjunction a);
Family black_family(Adjunction a);
Family white_family(Adjunction a);

// o -> white(black(o))
OperadMorphism unit(Adjunction a, const OperadPresentation& o);
// black(white(o)) -> o
OperadMorphism counit(Adjunction a, const OperadPresentation& o);

// Functors on morphisms.
OperadMorphism black_on_morphism(Family f, const OperadMorphism& m);
OperadMorphism white_on_morphism(Family f, const OperadMorphism& m);

// counit(black o) . black(unit o) = id and white(counit o) . unit(white o) = id
bool triangle_check(Adjunction a, const OperadPresentation& o);

// o -> black_ass(o): g -> g_prec - g_succ^op, circ + circ^op, ast - ast^op
OperadMorphism associated_operations(const OperadPresentation& o);

}  // namespace opcalc
