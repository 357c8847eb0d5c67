#include <doctest.h>

#include <algorithm>
#include <array>
#include <numeric>

#include "adjlab/errors.hpp"
#include "adjlab/seifert.hpp"

using namespace adjlab;

namespace {

// Leibniz expansion of det(V - t V^T) at an integer t.
long leibniz_at(const SeifertMatrix& v, long t) {
  std::array<int, 4> perm{0, 1, 2, 3};
  long total = 0;
  do {
    int inversions = 0;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        if (perm[a] > perm[b]) ++inversions;
    long prod = 1;
    for (int r = 0; r < 4; ++r) prod *= v.m[r][perm[r]] - t * v.m[perm[r]][r];
    total += inversions % 2 ? -prod : prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::vector<TangleParams> grid() {
  std::vector<TangleParams> out;
  for (long l = -6; l <= 6; ++l)
    for (int h1 : {1, -1})
      for (int h2 : {1, -1})
        for (bool inter : {false, true}) out.push_back({l, h1, h2, inter});
  return out;
}

}  // namespace

TEST_SUITE("seifert") {
  TEST_CASE("matrix templates") {
    SeifertMatrix v = build_seifert_matrix({2, 1, -1, false});
    CHECK(v.m[0] == std::array<long, 4>{1, 0, 0, 0});
    CHECK(v.m[1] == std::array<long, 4>{0, -1, 0, 0});
    CHECK(v.m[2] == std::array<long, 4>{1, 0, 0, 2});
    CHECK(v.m[3] == std::array<long, 4>{0, 1, 2, 0});
    CHECK(build_seifert_matrix({2, 1, -1, true}).m[3] == std::array<long, 4>{0, 1, 1, 0});
  }

  TEST_CASE("determinant of the zero matrix") {
    CHECK(alexander_from_seifert(SeifertMatrix{}).is_zero());
    CHECK(laurent_determinant({}) == IntLaurentPoly(Integer(1)));
  }

  TEST_CASE("small closed forms") {
    CHECK(construction_conway({1, 1, 1, true}) == IntLaurentPoly({{0, 1}, {2, 1}}));
    CHECK(construction_conway({1, 1, 1, false}) == IntLaurentPoly({{0, 1}, {4, -1}}));
    CHECK(construction_conway({0, 1, 1, false}) == IntLaurentPoly({{0, 1}}));
  }

  TEST_CASE("determinants") {
    CHECK(construction_determinant({1, 1, 1, false}).det == 15);
    CHECK(construction_determinant({1, 1, 1, false}).form == DetForm{2, DetSign::MinusOne});
    CHECK(construction_determinant({1, 1, 1, true}).det == 3);
    CHECK(construction_determinant({1, 1, -1, true}).det == 5);
    CHECK(construction_determinant({1, 1, -1, true}).form == DetForm{1, DetSign::PlusOne});
  }

  TEST_CASE("closed forms agree with the symbolic determinant on the grid") {
    auto g = grid();
    CHECK(g.size() == 104);
    for (const auto& p : g) {
      CHECK(construction_conway(p) == conway_closed_form(p));
      IntLaurentPoly delta = alexander_from_seifert(build_seifert_matrix(p));
      for (long t : {-3L, -1L, 2L, 5L})
        CHECK(laurent_eval_int(delta, Integer(t)) == Rational(leibniz_at(build_seifert_matrix(p), t)));
    }
  }

  TEST_CASE("clasp-sign law") {
    for (const auto& p : grid()) {
      auto d = construction_determinant(p);
      CHECK(d.form.value() == d.det);
      if (d.form.omega == 0) {
        // det 1: only the unlinked non-interleaved template, where the law is vacuous
        CHECK(p.linking == 0);
        CHECK_FALSE(p.interleaved);
        continue;
      }
      DetSign expected = p.h1 * p.h2 == 1 ? DetSign::MinusOne : DetSign::PlusOne;
      CHECK(d.form.sign == expected);
    }
  }

  TEST_CASE("family shape") {
    for (const auto& p : grid()) {
      IntLaurentPoly c = construction_conway(p);
      CHECK(c.max_exponent() <= 4);
      CHECK(c.coeff(0) == 1);
      Integer a2 = c.coeff(2);
      CHECK((a2 == 0 || a2 == 1 || a2 == -1));
      CHECK(symmetrize(alexander_from_seifert(build_seifert_matrix(p))).genus() <= 2);
    }
  }

  TEST_CASE("report") {
    auto j = construct_report({2, 1, 1, true});
    CHECK(j["determinant"] == 35);
    CHECK(j["det_form"]["omega"] == 3);
    CHECK(j["det_form"]["sign"] == "MinusOne");
    CHECK(j["conway"] == j["conway_closed_form"]);
    CHECK(j["seifert_matrix"].size() == 4);
  }
}
