// SPDX-License-Identifier: Apache-2.0
#include "adjlab/seifert.hpp"

#include "adjlab/errors.hpp"

namespace adjlab {

SeifertMatrix build_seifert_matrix(const TangleParams& p) {
  const long l = p.linking;
  SeifertMatrix v;
  v.m = {{{p.h1, 0, 0, 0},
          {0, p.h2, 0, 0},
          {1, 0, 0, l},
          {0, 1, p.interleaved ? l - 1 : l, 0}}};
  return v;
}

IntLaurentPoly laurent_determinant(const std::vector<std::vector<IntLaurentPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return IntLaurentPoly(Integer(1));
  if (n == 1) return m[0][0];
  IntLaurentPoly acc;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<IntLaurentPoly>> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<IntLaurentPoly> row;
      row.reserve(n - 1);
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    IntLaurentPoly term = m[0][c] * laurent_determinant(minor);
    if (c % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

IntLaurentPoly alexander_from_seifert(const SeifertMatrix& v) {
  std::vector<std::vector<IntLaurentPoly>> a(4, std::vector<IntLaurentPoly>(4));
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      a[r][c] = IntLaurentPoly(Integer(v.m[r][c])) -
                IntLaurentPoly::monomial(Integer(v.m[c][r]), 1);
  return laurent_determinant(a);
}

IntLaurentPoly conway_closed_form(const TangleParams& p) {
  const long h = static_cast<long>(p.h1) * p.h2;
  const Integer l(p.linking);
  IntLaurentPoly::Terms t{{0, Integer(1)}};
  if (p.interleaved) {
    t[2] = Integer(h);
    t[4] = -h * (l * l - l);
  } else {
    t[4] = -h * l * l;
  }
  return IntLaurentPoly::from_terms(t);
}

IntLaurentPoly construction_conway(const TangleParams& params) {
  return alexander_to_conway(symmetrize(alexander_from_seifert(build_seifert_matrix(params))));
}

ConstructionDeterminant construction_determinant(const TangleParams& params) {
  IntLaurentPoly nabla = construction_conway(params);
  Integer at = 0;
  Integer pw = 1;
  for (int e = 0; e <= nabla.max_exponent(); e += 2) {
    at += nabla.coeff(e) * pw;
    pw *= -4;
  }
  Integer d = abs(at);
  if (!d.fits_slong_p()) throw DomainError("determinant out of range");
  ConstructionDeterminant out;
  out.det = d.get_si();
  auto form = det_form(out.det);
  if (!form)
    throw InconsistencyError("construction determinant " + d.get_str() +
                             " is not of the form 4w^2 +- 1");
  out.form = *form;
  return out;
}

nlohmann::json construct_report(const TangleParams& params) {
  SeifertMatrix v = build_seifert_matrix(params);
  IntLaurentPoly delta = alexander_from_seifert(v);
  nlohmann::json j;
  j["params"] = {{"linking", params.linking},
                 {"h1", params.h1},
                 {"h2", params.h2},
                 {"interleaved", params.interleaved}};
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : v.m) rows.push_back(r);
  j["seifert_matrix"] = rows;
  j["det_V_minus_tVT"] = delta.str("t");
  SymmetrizeResult s = symmetrize_with_unit(delta);
  j["alexander"] = s.alex.to_laurent().str("t");
  j["alexander_symmetrized"] = to_json(s.alex);
  IntLaurentPoly nabla = alexander_to_conway(s.alex);
  j["conway"] = nabla.str("z");
  j["conway_closed_form"] = conway_closed_form(params).str("z");
  ConstructionDeterminant d = construction_determinant(params);
  j["determinant"] = d.det;
  j["det_form"] = {{"omega", d.form.omega}, {"sign", to_string(d.form.sign)}, {"text", d.form.str()}};
  return j;
}

}  // namespace adjlab
