#pragma once

#include <random>
#include <string>

#include "opcalc/presentation.hpp"

namespace gen {

// Presentation on mag(p,q,r) with `count` random relators of small support.
inline opcalc::OperadPresentation random_operad(std::mt19937_64& rng, int p, int q, int r, int count) {
  opcalc::OperadPresentation m = opcalc::mag(p, q, r);
  const std::size_t n = m.signature.dim3();
  std::uniform_int_distribution<std::size_t> key(0, n - 1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::uniform_int_distribution<int> terms(1, 3);
  std::vector<opcalc::Element3> rels;
  for (int i = 0; i < count; ++i) {
    opcalc::Element3 e;
    for (int t = terms(rng); t > 0; --t) {
      int c = coeff(rng);
      if (c != 0) e = e + opcalc::SparseVector::unit(static_cast<opcalc::Key>(key(rng)), c);
    }
    if (!e.empty()) rels.push_back(e);
  }
  return opcalc::make_presentation("rnd", m.signature, rels);
}

}  // namespace gen
