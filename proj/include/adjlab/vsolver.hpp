// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "adjlab/dinv.hpp"

namespace adjlab {

struct VSolution {
  std::vector<VSequence> sequences;  // sorted, no duplicates
  bool unique = false;
  std::size_t nodes = 0;             // search nodes visited
};

// All V-sequences V for which lens - 2 V_slot, taken over one representative
// per conjugation class, reproduces the multiset sigma_d.  lens_d must be the
// Ni-Wu ordered vector of L(p,q) (p = its length); only the multiset of
// sigma_d matters.  An empty result means no surgery description with this
// coefficient is consistent.
VSolution admissible_v_sequences(const DInvariantVector& lens_d,
                                 const DInvariantVector& sigma_d, long q = 2);

// Same search over bare value vectors.
VSolution admissible_v_sequences(const std::vector<Rational>& lens,
                                 const std::vector<Rational>& sigma, long q);

}  // namespace adjlab
