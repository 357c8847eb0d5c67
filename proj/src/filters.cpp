// SPDX-License-Identifier: Apache-2.0
#include "adjlab/filters.hpp"

#include <cstdlib>

#include "adjlab/errors.hpp"

namespace adjlab {

std::string to_string(DetSign s) { return s == DetSign::PlusOne ? "PlusOne" : "MinusOne"; }

std::string DetForm::str() const {
  return "4(" + std::to_string(omega) + "^2)" + (sign == DetSign::PlusOne ? "+1" : "-1");
}

std::optional<DetForm> det_form(long d) {
  if (d < 1 || d % 2 == 0) throw PreconditionError("det_form needs an odd positive determinant");
  for (int s : {-1, 1}) {
    // 4 w^2 = d - s
    long four_w2 = d - s;
    if (four_w2 % 4 != 0) continue;
    Integer w;
    if (is_perfect_square(Integer(four_w2 / 4), &w))
      return DetForm{w.get_si(), s == 1 ? DetSign::PlusOne : DetSign::MinusOne};
  }
  return std::nullopt;
}

std::string to_string(FilterStatus s) {
  switch (s) {
    case FilterStatus::Pass: return "pass";
    case FilterStatus::Fail: return "fail";
    case FilterStatus::Inapplicable: return "inapplicable";
    case FilterStatus::Skipped: return "skipped";
  }
  return "?";
}

nlohmann::json to_json(const FilterOutcome& f) {
  nlohmann::json j;
  j["filter"] = f.id;
  j["status"] = to_string(f.status);
  j["reason"] = f.reason;
  if (!f.payload.empty()) j["payload"] = f.payload;
  if (f.data_assisted) j["data_assisted"] = true;
  return j;
}

const std::vector<std::string>& filter_order() {
  static const std::vector<std::string> order = {
      kFilterUnknotting, kFilterDetForm, kFilterSignature, kFilterRational, kFilterConway,
      kFilterMcCoy,      kFilterTaoP0,   kFilterTaoP2,     kFilterTaoMixed, kFilterFloer};
  return order;
}

const std::vector<std::string>& basic_filters() {
  static const std::vector<std::string> basic = {kFilterUnknotting, kFilterDetForm,
                                                 kFilterSignature, kFilterRational, kFilterConway};
  return basic;
}

namespace {

FilterOutcome make(const char* id, FilterStatus s, std::string reason) {
  FilterOutcome f;
  f.id = id;
  f.status = s;
  f.reason = std::move(reason);
  return f;
}

std::string poly_l(const IntLaurentPoly& p) { return p.str("l"); }

}  // namespace

FilterOutcome filter_unknotting(const KnotRecord& r) {
  if (!r.unknotting.min) return make(kFilterUnknotting, FilterStatus::Skipped, "skipped: missing data");
  if (*r.unknotting.min >= 2)
    return make(kFilterUnknotting, FilterStatus::Fail,
                "unknotting number " + r.unknotting.str() + " is at least 2");
  return make(kFilterUnknotting, FilterStatus::Pass, "unknotting number " + r.unknotting.str());
}

FilterOutcome filter_det_form(const KnotRecord& r) {
  auto form = det_form(r.determinant);
  if (!form)
    return make(kFilterDetForm, FilterStatus::Fail,
                "det " + std::to_string(r.determinant) + " is not 4w^2 +- 1");
  FilterOutcome f = make(kFilterDetForm, FilterStatus::Pass,
                         "det " + std::to_string(r.determinant) + " = " + form->str());
  f.payload = {{"omega", form->omega}, {"sign", to_string(form->sign)}};
  return f;
}

FilterOutcome filter_signature(const KnotRecord& r) {
  if (std::abs(r.signature) > 2)
    return make(kFilterSignature, FilterStatus::Fail,
                "|sigma| = " + std::to_string(std::abs(r.signature)) + " > 2");
  auto form = r.determinant > 0 && r.determinant % 2 == 1 ? det_form(r.determinant)
                                                          : std::nullopt;
  if (form && form->sign == DetSign::PlusOne && r.signature != 0)
    return make(kFilterSignature, FilterStatus::Fail,
                "det " + form->str() + " forces crossings of both signs, so sigma must be 0, "
                "but sigma = " + std::to_string(r.signature));
  return make(kFilterSignature, FilterStatus::Pass,
              "sigma = " + std::to_string(r.signature));
}

FilterOutcome filter_rational(const KnotRecord& r) {
  if (!r.is_rational_knot) return make(kFilterRational, FilterStatus::Inapplicable, "not rational");
  if (r.name == "3_1" || r.name == "4_1")
    return make(kFilterRational, FilterStatus::Pass, "rational knot " + r.name);
  return make(kFilterRational, FilterStatus::Fail,
              "rational knot other than 3_1 and 4_1");
}

FilterOutcome filter_conway(const KnotRecord& r) {
  if (!r.conway_coeffs) return make(kFilterConway, FilterStatus::Skipped, "skipped: missing data");
  Integer a2 = r.conway_a(2);
  Integer a4 = r.conway_a(4);
  FilterOutcome f;
  if (abs(a2) > 1) {
    f = make(kFilterConway, FilterStatus::Fail, "a_2 = " + a2.get_str() + " not in {-1, 0, 1}");
  } else if (a2 == 0 && !is_perfect_square(abs(a4))) {
    // the sign of a_4 follows the clasp signs: a_4 = -h1 h2 l^2
    f = make(kFilterConway, FilterStatus::Fail,
             "a_2 = 0 and |a_4| = " + Integer(abs(a4)).get_str() + " is not a perfect square");
  } else {
    f = make(kFilterConway, FilterStatus::Pass, "a_2 = " + a2.get_str() + ", a_4 = " + a4.get_str());
  }
  f.payload = {{"a2", integer_to_json(a2)}, {"a4", integer_to_json(a4)}};
  return f;
}

FilterOutcome filter_tao_p0(const KnotRecord& r) {
  if (!r.conway_coeffs) return make(kFilterTaoP0, FilterStatus::Skipped, "skipped: missing data");
  Integer a2 = r.conway_a(2);
  if (a2 != 1 && a2 != -1) return make(kFilterTaoP0, FilterStatus::Inapplicable, "a_2 is not +-1");
  if (!r.homfly_p0) return make(kFilterTaoP0, FilterStatus::Skipped, "skipped: missing data");
  static const IntLaurentPoly targets[] = {
      IntLaurentPoly{{-4, 1}, {-2, 2}},
      IntLaurentPoly{{4, 1}, {2, 2}},
      IntLaurentPoly{{-2, 1}, {0, 1}, {2, 1}},
  };
  FilterOutcome f;
  bool hit = false;
  for (const auto& t : targets) hit = hit || *r.homfly_p0 == t;
  if (hit)
    f = make(kFilterTaoP0, FilterStatus::Pass, "p0 = " + poly_l(*r.homfly_p0));
  else
    f = make(kFilterTaoP0, FilterStatus::Fail,
             "p0 = " + poly_l(*r.homfly_p0) +
                 " is none of l^-4 + 2*l^-2, l^4 + 2*l^2, l^-2 + 1 + l^2");
  f.payload = {{"p0", to_json(*r.homfly_p0)}};
  return f;
}

FilterOutcome filter_tao_p2(const KnotRecord& r) {
  if (!r.conway_coeffs) return make(kFilterTaoP2, FilterStatus::Skipped, "skipped: missing data");
  if (r.conway_a(2) != 0) return make(kFilterTaoP2, FilterStatus::Inapplicable, "a_2 != 0");
  if (!r.homfly_p2) return make(kFilterTaoP2, FilterStatus::Skipped, "skipped: missing data");
  Integer a4 = r.conway_a(4);
  Integer mag = abs(a4);
  GaussianRational v = laurent_eval_gaussian(laurent_derivative(*r.homfly_p2), GaussianRational::i());
  Integer s;
  bool ok = false;
  if (is_perfect_square(mag, &s) && v.re.sign() == 0 && v.im.is_integer()) {
    Integer im = v.im.numerator();
    ok = im == 2 * s || im == -2 * s;
  }
  FilterOutcome f = make(kFilterTaoP2, ok ? FilterStatus::Pass : FilterStatus::Fail,
                         "p2'(i) = " + v.str() + ", a_4 = " + a4.get_str() +
                             (ok ? "" : "; expected +-2i*sqrt(|a_4|)"));
  f.payload = {{"p2_prime_at_i", v.str()}, {"a4", integer_to_json(a4)}};
  return f;
}

FilterOutcome filter_tao_mixed(const KnotRecord& r) {
  if (!r.conway_coeffs) return make(kFilterTaoMixed, FilterStatus::Skipped, "skipped: missing data");
  if (r.conway_a(2) != 0 || r.conway_a(4) <= 0)
    return make(kFilterTaoMixed, FilterStatus::Inapplicable, "needs a_2 = 0 and a_4 > 0");
  if (r.signature != 0)
    return make(kFilterTaoMixed, FilterStatus::Fail,
                "a_2 = 0, a_4 > 0 force crossings of both signs, but sigma = " +
                    std::to_string(r.signature));
  return make(kFilterTaoMixed, FilterStatus::Pass, "sigma = 0");
}

FilterOutcome filter_mccoy(const KnotRecord& r) {
  if (!r.alternating) return make(kFilterMcCoy, FilterStatus::Inapplicable, "not alternating");
  auto form = r.determinant > 0 && r.determinant % 2 == 1 ? det_form(r.determinant)
                                                          : std::nullopt;
  if (!form || form->sign != DetSign::PlusOne)
    return make(kFilterMcCoy, FilterStatus::Inapplicable, "det is not of the form 4w^2 + 1");
  if (!r.mccoy) return make(kFilterMcCoy, FilterStatus::Skipped, "skipped: missing data");
  bool ok = r.mccoy->positive && r.mccoy->negative;
  std::string seen = std::string("minimal diagram shows ") +
                     (r.mccoy->positive ? "a" : "no") + " positive and " +
                     (r.mccoy->negative ? "a" : "no") + " negative unknotting crossing";
  FilterOutcome f = make(kFilterMcCoy, ok ? FilterStatus::Pass : FilterStatus::Fail, seen);
  f.data_assisted = true;
  f.payload = {{"positive", r.mccoy->positive}, {"negative", r.mccoy->negative}};
  return f;
}

std::vector<FilterOutcome> run_classical_filters(const KnotRecord& r) {
  return {filter_unknotting(r), filter_det_form(r), filter_signature(r),
          filter_rational(r),   filter_conway(r),   filter_mccoy(r),
          filter_tao_p0(r),     filter_tao_p2(r),   filter_tao_mixed(r)};
}

}  // namespace adjlab
