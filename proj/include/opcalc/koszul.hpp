#pragma once

#include "opcalc/presentation.hpp"

namespace opcalc {

// Sign attached to a matching pair of planar monomials: Left shape counts
// +1, Right shape counts right_sign, times sgn(leaves) when use_perm_sign.
struct PairingConvention {
  int right_sign = -1;
  bool use_perm_sign = true;
};

// Sym and AntiSym swap; names gain or lose the "_dual" suffix.
Signature dual_signature(const Signature& sig);

// Row a = pairing of basis3(sig)[a] against every element of basis3(dual).
std::vector<SparseVector> pairing_rows(const Signature& sig, const Signature& dual,
                                       PairingConvention c = {});

Scalar pairing_determinant(const Signature& sig, PairingConvention c = {});

OperadPresentation dual(const OperadPresentation& o, PairingConvention c = {});

}  // namespace opcalc
