#include <doctest.h>

#include <algorithm>
#include <random>

#include "adjlab/dinv.hpp"
#include "adjlab/errors.hpp"
#include "support.hpp"

using namespace adjlab;
using testsupport::rationals;
using testsupport::reference;
using testsupport::sorted;

namespace {

SymmetrizedAlex lift_11a_255() {
  return SymmetrizedAlex::from_ints(reference()["alex_11a_255_lift"].get<std::vector<long>>());
}

std::vector<Rational> slice(const std::vector<Rational>& v, std::size_t from, std::size_t to) {
  return {v.begin() + static_cast<long>(from), v.begin() + static_cast<long>(to)};
}

}  // namespace

TEST_SUITE("dinv") {
  TEST_CASE("recursion base and small lens spaces") {
    CHECK(lens_d_recursive(1, 0, 0) == Rational(0));
    // L(2,1): values +-1/4
    CHECK(lens_d(2, 1, 0) == Rational(Integer(1), Integer(4)));
    CHECK(lens_d(2, 1, 1) == Rational(Integer(-1), Integer(4)));
    // the closed form at d = 3
    for (long i = 0; i < 5; ++i) CHECK(lens_d(3, 2, i) == lens_d2_closed(3, i));
    CHECK_THROWS_AS(lens_d_recursive(4, 2, 0), PreconditionError);
    CHECK_THROWS_AS(lens_d_recursive(5, 2, 7), PreconditionError);
    CHECK_THROWS_AS(lens_d_recursive(5, 2, -1), PreconditionError);
    CHECK_THROWS_AS(lens_d2_closed(4, 0), PreconditionError);
  }

  TEST_CASE("recursion agrees with an independent naive implementation") {
    for (long p = 1; p <= 40; ++p)
      for (long q = p == 1 ? 0 : 1; q < std::max(p, 1L); ++q) {
        if (std::gcd(p, q) != 1) continue;
        for (long i = 0; i < p + q; ++i)
          CHECK(lens_d_recursive(p, q, i) == testsupport::naive_dneg(p, q, i));
      }
  }

  TEST_CASE("L(143,2) and L(101,2) printed values") {
    auto l143 = lens_d_vector(143, 2).values;
    CHECK(std::count(l143.begin(), l143.end(), Rational::parse("5041/286")) > 0);
    CHECK(*std::max_element(l143.begin(), l143.end()) == Rational::parse("5041/286"));
    CHECK(sorted(slice(l143, 1, 73)) == sorted(rationals(reference()["lens_143_2"])));
    auto l101 = lens_d_vector(101, 2).values;
    CHECK(std::count(l101.begin(), l101.end(), Rational::parse("1250/101")) == 2);
    CHECK(std::count(l101.begin(), l101.end(), Rational::parse("-50/101")) > 0);
    CHECK(slice(l101, 0, 52) == rationals(reference()["lens_101_2"]));
  }

  TEST_CASE("closed form agrees with the recursion and is conjugation symmetric") {
    for (long d = 3; d <= 61; d += 2) {
      for (long i = 0; i < d + 2; ++i) CHECK(lens_d2_closed(d, i) == -lens_d_recursive(d, 2, i));
      for (long i = 1; i <= d; ++i) CHECK(lens_d2_closed(d, i) == lens_d2_closed(d, d + 1 - i));
    }
  }

  TEST_CASE("conjugation and slots") {
    CHECK(niwu_conjugate(143, 2, 0) == 1);
    CHECK(niwu_conjugate(143, 2, 72) == 72);
    CHECK(niwu_slot(143, 2, 9) == 4);
    CHECK(niwu_slot(143, 2, 142) == 1);
    for (long i = 0; i < 101; ++i) CHECK(niwu_slot(101, 3, i) == niwu_slot(101, 3, niwu_conjugate(101, 3, i)));
  }

  TEST_CASE("v_from_alex") {
    CHECK(v_from_alex(SymmetrizedAlex::from_ints({1})) == VSequence({0}));
    CHECK(v_from_alex(lift_11a_255()) == VSequence(testsupport::ints(reference()["v_11a_255_lift"])));
    SymmetrizedAlex j586 = symmetrize(parse_laurent(reference()["alex_12n_586_lift_q3_text"].get<std::string>()));
    CHECK(v_from_alex(j586)[0] == 4);
    CHECK_THROWS_AS(v_from_alex(SymmetrizedAlex::from_ints({1, 1, -1})), NotLSpaceKnotError);
    CHECK_THROWS_AS(v_from_alex(SymmetrizedAlex::from_ints({3, -1})), NotLSpaceKnotError);  // figure eight
  }

  TEST_CASE("alex_from_v") {
    CHECK(alex_from_v(VSequence({0})) == SymmetrizedAlex::from_ints({1}));
    CHECK(alex_from_v(VSequence({1, 0})) == SymmetrizedAlex::from_ints({-1, 1}));
    // brute force the forward map over all short valid sequences
    for (int len = 1; len <= 8; ++len)
      for (int mask = 0; mask < (1 << (len - 1)); ++mask) {
        std::vector<std::int64_t> v(len, 0);
        for (int k = len - 2; k >= 0; --k) v[k] = v[k + 1] + ((mask >> k) & 1);
        VSequence vs(v);
        SymmetrizedAlex a = alex_from_v(vs);
        CHECK(v_from_alex(a) == vs);
      }
  }

  TEST_CASE("v and alex are mutually inverse on random sequences") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
      VSequence v(testsupport::random_v(rng, 1 + rng() % 60));
      SymmetrizedAlex a = alex_from_v(v);
      CHECK(v_from_alex(a) == v);
      CHECK(alex_from_v(v_from_alex(a)) == a);
    }
  }

  TEST_CASE("VSequence validation") {
    CHECK_THROWS_AS(VSequence({1, 3, 0}), PreconditionError);
    CHECK_THROWS_AS(VSequence({-1, 0}), PreconditionError);
    CHECK_THROWS_AS(VSequence({2, 1}), PreconditionError);
    CHECK(VSequence({1, 0, 0, 0}).size() == 2);
    CHECK(VSequence({2, 1, 0}).str() == "(2,1,0)");
  }

  TEST_CASE("Ni-Wu with the unknot is the lens vector") {
    for (long p : {1L, 3L, 7L, 101L, 143L})
      for (long q : {1L, 2L, 3L}) {
        if (p > 1 && (q >= p || std::gcd(p, q) != 1)) continue;
        CHECK(niwu_surgery_d(p, q, VSequence({0})).values ==
              lens_d_vector(p, p == 1 ? 0 : q).values);
      }
  }

  TEST_CASE("Sigma(11a_255) from the lift") {
    VSequence v = v_from_alex(lift_11a_255());
    auto sigma = niwu_surgery_d(143, 2, v, "11a_255").values;
    CHECK(sorted(slice(sigma, 1, 73)) == sorted(rationals(reference()["sigma_11a_255"])));
    CHECK(lens_d(143, 2, 9) == Rational::parse("3969/286"));
    CHECK(sigma[9] == Rational::parse("3969/286") - Rational(2 * v[4]));
    CHECK(rationals(reference()["sigma_11a_255"]).front() == Rational::parse("-107/286"));
  }

  TEST_CASE("invert_niwu") {
    CHECK(invert_niwu(lens_d_vector(101, 2), 101, 2) == VSequence({0}));
    VSequence v = v_from_alex(lift_11a_255());
    auto sigma = niwu_surgery_d(143, 2, v);
    CHECK(invert_niwu(sigma, 143, 2) == v);
    auto bumped = sigma;
    bumped.values[5] += Rational(Integer(1), Integer(143));
    CHECK_THROWS_AS(invert_niwu(bumped, 143, 2), InconsistencyError);
    auto negative = lens_d_vector(5, 2);
    negative.values[2] += Rational(2);
    CHECK_THROWS_AS(invert_niwu(negative, 5, 2), InconsistencyError);
  }

  TEST_CASE("12n_586: the q = 3 surgery admits no half-integral inversion") {
    SymmetrizedAlex j = symmetrize(parse_laurent(reference()["alex_12n_586_lift_q3_text"].get<std::string>()));
    auto sigma = niwu_surgery_d(101, 3, v_from_alex(j), "12n_586");
    CHECK_THROWS_AS(invert_niwu(align_to_surgery_order(sigma, 101, 2), 101, 2), InconsistencyError);
  }

  TEST_CASE("12n_586: the printed V sequence and recovered polynomial disagree") {
    VSequence printed_v(testsupport::ints(reference()["v_12n_586_reported"]));
    SymmetrizedAlex printed = symmetrize(parse_laurent(reference()["alex_12n_586_recovered_text"].get<std::string>()));
    CHECK(printed.genus() == 15);
    CHECK(alex_from_v(printed_v).genus() == 16);
    CHECK(v_from_alex(printed) != printed_v);
  }

  TEST_CASE("json") {
    auto v = lens_d_vector(5, 2);
    auto j = to_json(v);
    CHECK(j[0] == "2/5");
    CHECK(dinv_from_json(j).values == v.values);
    CHECK_THROWS_AS(dinv_from_json(nlohmann::json::array({"1/0"})), Error);
  }
}
