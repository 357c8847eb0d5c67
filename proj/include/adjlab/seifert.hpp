// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "adjlab/algebra.hpp"
#include "adjlab/filters.hpp"

namespace adjlab {

// Two-string tangle with clasped bands.  interleaved: the arc endpoints
// alternate around the tangle circle.
struct TangleParams {
  long linking = 0;  // linking number of the two arcs
  int h1 = 1;        // clasp signs, +-1
  int h2 = 1;
  bool interleaved = false;
};

struct SeifertMatrix {
  std::array<std::array<long, 4>, 4> m{};
  friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;
};

// non-interleaved: lower-left block (1,0,0,l),(0,1,l,0)
// interleaved:     lower-left block (1,0,0,l),(0,1,l-1,0)
SeifertMatrix build_seifert_matrix(const TangleParams& params);

// det(V - t V^T) by cofactor expansion over Z[t, t^-1].
IntLaurentPoly alexander_from_seifert(const SeifertMatrix& v);
IntLaurentPoly laurent_determinant(const std::vector<std::vector<IntLaurentPoly>>& m);

// (l,l) block:   1 - h1 h2 l^2 z^4
// (l,l-1) block: 1 + h1 h2 z^2 - h1 h2 (l^2 - l) z^4
IntLaurentPoly conway_closed_form(const TangleParams& params);

// alexander_to_conway(symmetrize(alexander_from_seifert(build(params))))
IntLaurentPoly construction_conway(const TangleParams& params);

struct ConstructionDeterminant {
  long det = 1;
  DetForm form;
};

// |Conway at z^2 = -4|, with its det_form (which always exists for this
// family; InconsistencyError otherwise).
ConstructionDeterminant construction_determinant(const TangleParams& params);

nlohmann::json construct_report(const TangleParams& params);

}  // namespace adjlab
