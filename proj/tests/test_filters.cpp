#include <doctest.h>

#include "adjlab/errors.hpp"
#include "adjlab/filters.hpp"
#include "adjlab/knotdata.hpp"
#include "support.hpp"

using namespace adjlab;

namespace {

KnotRecord base(long det, int sigma, std::vector<long> conway) {
  KnotRecord r;
  r.name = "x_1";
  r.crossing_number = 9;
  r.determinant = det;
  r.signature = sigma;
  r.unknotting = {1, 1};
  std::vector<Integer> c(conway.begin(), conway.end());
  r.conway_coeffs = c;
  return r;
}

// p2 with p2'(i) = k i: the polynomial (k/2) l^2 has derivative k l, value k i.
IntLaurentPoly p2_with(long k) { return IntLaurentPoly{{2, k / 2}}; }

}  // namespace

TEST_SUITE("filters") {
  TEST_CASE("det_form") {
    CHECK(det_form(3) == DetForm{1, DetSign::MinusOne});
    CHECK(det_form(99) == DetForm{5, DetSign::MinusOne});
    CHECK(det_form(101) == DetForm{5, DetSign::PlusOne});
    CHECK_FALSE(det_form(7).has_value());
    CHECK(det_form(1) == DetForm{0, DetSign::PlusOne});
    CHECK(det_form(101)->str() == "4(5^2)+1");
    CHECK_THROWS_AS(det_form(14), PreconditionError);
    for (long d = 1; d < 2000; d += 2)
      if (auto f = det_form(d)) CHECK(f->value() == d);
  }

  TEST_CASE("unknotting") {
    KnotRecord r = base(5, 0, {1, -1});
    CHECK(filter_unknotting(r).status == FilterStatus::Pass);
    r.unknotting = {1, 2};
    CHECK(filter_unknotting(r).status == FilterStatus::Pass);
    r.unknotting = {2, 2};
    CHECK(filter_unknotting(r).failed());
    r.unknotting = {};
    CHECK(filter_unknotting(r).status == FilterStatus::Skipped);
  }

  TEST_CASE("signature") {
    CHECK(filter_signature(base(3, 4, {1, 1})).failed());
    CHECK(filter_signature(base(101, 0, {1})).status == FilterStatus::Pass);
    CHECK(filter_signature(base(5, 2, {1, -1})).failed());  // PlusOne form with sigma != 0
    CHECK(filter_signature(base(15, 2, {1})).status == FilterStatus::Pass);
  }

  TEST_CASE("rational") {
    KnotRecord r = base(3, -2, {1, 1});
    r.is_rational_knot = true;
    r.name = "3_1";
    CHECK(filter_rational(r).status == FilterStatus::Pass);
    r.name = "5_2";
    CHECK(filter_rational(r).failed());
    r.name = "8_17";
    r.is_rational_knot = false;
    CHECK(filter_rational(r).status == FilterStatus::Inapplicable);
  }

  TEST_CASE("conway_a2a4") {
    CHECK(filter_conway(base(3, 0, {1, 1})).status == FilterStatus::Pass);
    CHECK(filter_conway(base(3, 0, {1, 0, 4})).status == FilterStatus::Pass);
    CHECK(filter_conway(base(3, 0, {1, 0, 3})).failed());
    CHECK(filter_conway(base(3, 0, {1, 2})).failed());
    CHECK(filter_conway(base(3, 0, {1, 0, 0})).status == FilterStatus::Pass);
    // the sign of a_4 is -h1 h2 l^2; its magnitude must be a square
    CHECK(filter_conway(base(15, 0, {1, 0, -1})).status == FilterStatus::Pass);
    CHECK(filter_conway(base(15, 0, {1, 0, -2})).failed());
    KnotRecord none = base(3, 0, {1});
    none.conway_coeffs.reset();
    CHECK(filter_conway(none).status == FilterStatus::Skipped);
  }

  TEST_CASE("tao_p0") {
    KnotRecord r = base(5, 0, {1, -1});
    r.homfly_p0 = IntLaurentPoly{{-2, 1}, {0, 1}, {2, 1}};
    CHECK(filter_tao_p0(r).status == FilterStatus::Pass);
    r.homfly_p0 = IntLaurentPoly{{4, 1}, {2, 2}};
    CHECK(filter_tao_p0(r).status == FilterStatus::Pass);
    r.homfly_p0 = IntLaurentPoly{{2, 1}, {0, 2}};
    CHECK(filter_tao_p0(r).failed());
    r.homfly_p0.reset();
    CHECK(filter_tao_p0(r).status == FilterStatus::Skipped);
    CHECK(filter_tao_p0(base(5, 0, {1, 0})).status == FilterStatus::Inapplicable);
  }

  TEST_CASE("tao_p2") {
    KnotRecord r = base(17, 0, {1, 0, 4});
    r.homfly_p2 = p2_with(4);
    CHECK(filter_tao_p2(r).status == FilterStatus::Pass);
    r.homfly_p2 = p2_with(-4);
    CHECK(filter_tao_p2(r).status == FilterStatus::Pass);
    r.homfly_p2 = IntLaurentPoly{{3, 1}};  // derivative 3 l^2, value -3
    CHECK(filter_tao_p2(r).failed());
    r.homfly_p2 = IntLaurentPoly{{1, 3}};  // derivative 3, value 3 (not imaginary)
    CHECK(filter_tao_p2(r).failed());
    KnotRecord z = base(1, 0, {1, 0, 0});
    z.homfly_p2 = IntLaurentPoly{{0, 5}};  // derivative 0
    CHECK(filter_tao_p2(z).status == FilterStatus::Pass);
    KnotRecord three = base(17, 0, {1, 0, 4});
    three.homfly_p2 = IntLaurentPoly{{1, 1}, {3, 1}};  // 1 + 3 l^2 at i: 1 - 3 = -2, real
    CHECK(filter_tao_p2(three).failed());
    // p2'(i) = 0 with a_4 = 4 (integer polynomials give even imaginary parts, so 3i cannot occur)
    KnotRecord odd = base(17, 0, {1, 0, 4});
    odd.homfly_p2 = IntLaurentPoly{{2, 1}, {-2, 1}};  // 2i - 2i^-3 = 0
    CHECK(filter_tao_p2(odd).failed());
    // negative a_4 uses its magnitude
    KnotRecord neg = base(15, 0, {1, 0, -1});
    neg.homfly_p2 = p2_with(2);
    CHECK(filter_tao_p2(neg).status == FilterStatus::Pass);
    CHECK(filter_tao_p2(base(3, 0, {1, 1})).status == FilterStatus::Inapplicable);
  }

  TEST_CASE("tao_mixed") {
    CHECK(filter_tao_mixed(base(17, 2, {1, 0, 1})).failed());
    CHECK(filter_tao_mixed(base(17, 0, {1, 0, 1})).status == FilterStatus::Pass);
    CHECK(filter_tao_mixed(base(3, 0, {1, 1})).status == FilterStatus::Inapplicable);
    CHECK(filter_tao_mixed(base(15, 2, {1, 0, -1})).status == FilterStatus::Inapplicable);
  }

  TEST_CASE("mccoy") {
    KnotRecord r = base(17, 0, {1, 0, 1});
    r.alternating = true;
    r.mccoy = McCoyAnnotations{true, true};
    CHECK(filter_mccoy(r).status == FilterStatus::Pass);
    CHECK(filter_mccoy(r).data_assisted);
    r.mccoy = McCoyAnnotations{true, false};
    CHECK(filter_mccoy(r).failed());
    r.alternating = false;
    CHECK(filter_mccoy(r).status == FilterStatus::Inapplicable);
    r.alternating = true;
    r.mccoy.reset();
    CHECK(filter_mccoy(r).status == FilterStatus::Skipped);
    KnotRecord minus = base(15, 2, {1, 0, -1});
    minus.alternating = true;
    minus.mccoy = McCoyAnnotations{true, false};
    CHECK(filter_mccoy(minus).status == FilterStatus::Inapplicable);
  }

  TEST_CASE("filters are order independent") {
    auto table = load_table(testsupport::fixture("knots_le12.csv"));
    for (std::size_t k = 0; k < table.size(); k += 97) {
      auto a = run_classical_filters(table[k]);
      std::vector<FilterOutcome> b = {filter_tao_mixed(table[k]), filter_conway(table[k]),
                                      filter_unknotting(table[k]), filter_tao_p2(table[k]),
                                      filter_det_form(table[k]),  filter_mccoy(table[k]),
                                      filter_rational(table[k]),  filter_tao_p0(table[k]),
                                      filter_signature(table[k])};
      for (const auto& fa : a)
        for (const auto& fb : b)
          if (fa.id == fb.id) CHECK(to_json(fa) == to_json(fb));
    }
  }

  TEST_CASE("known 2-adjacent knots pass every classical filter") {
    auto table = load_table(testsupport::fixture("knots_le12.csv"));
    for (const auto& n : load_name_list(testsupport::fixture("two_adjacent_le12.txt"))) {
      const KnotRecord* r = find_knot(table, n);
      REQUIRE(r);
      for (const auto& f : run_classical_filters(*r)) CHECK_MESSAGE(!f.failed(), (n + " " + f.id));
    }
  }
}
