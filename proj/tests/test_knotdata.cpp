#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "adjlab/errors.hpp"
#include "adjlab/knotdata.hpp"
#include "support.hpp"

using namespace adjlab;

namespace {

const char* kHeader =
    "name,crossing_number,alternating,determinant,signature,unknotting_min,unknotting_max,"
    "conway_coeffs,alexander_symmetrized,homfly_p0,homfly_p2,is_lspace_dbc,is_rational_knot,"
    "mccoy_pos,mccoy_neg\n";

const std::vector<KnotRecord>& le12() {
  static const auto t = load_table(testsupport::fixture("knots_le12.csv"));
  return t;
}

KnotRecord trefoil() {
  KnotRecord r;
  r.name = "3_1";
  r.crossing_number = 3;
  r.alternating = true;
  r.determinant = 3;
  r.signature = -2;
  r.unknotting = {1, 1};
  r.conway_coeffs = std::vector<Integer>{1, 1};
  r.alexander = SymmetrizedAlex::from_ints({-1, 1});
  r.homfly_p0 = IntLaurentPoly{{-4, 1}, {-2, 2}};
  r.homfly_p2 = IntLaurentPoly{{-2, -1}};
  r.is_lspace_dbc = true;
  r.is_rational_knot = true;
  return r;
}

}  // namespace

TEST_SUITE("knotdata") {
  TEST_CASE("shipped table rows") {
    const KnotRecord* r = find_knot(le12(), "12n_586");
    REQUIRE(r);
    CHECK(r->determinant == 101);
    CHECK(r->signature == 0);
    CHECK(r->unknotting.str() == "1..2");
    r = find_knot(le12(), "12a_358");
    REQUIRE(r);
    CHECK(r->determinant == 255);
    CHECK(r->signature == -2);
    CHECK(le12().size() == 2977);
  }

  TEST_CASE("table agrees with the published determinant and signature table") {
    for (const auto& [name, v] : testsupport::reference()["table2"].items()) {
      const KnotRecord* r = find_knot(le12(), name);
      REQUIRE(r);
      CHECK(r->determinant == v[0].get<long>());
      CHECK(r->signature == v[1].get<int>());
    }
  }

  TEST_CASE("every known 2-adjacent knot is in the table") {
    for (const auto& n : load_name_list(testsupport::fixture("two_adjacent_le12.txt")))
      CHECK_MESSAGE(find_knot(le12(), n), n);
  }

  TEST_CASE("even determinant is a validation error") {
    std::istringstream in(std::string(kHeader) + "x_1,5,true,14,0,1,1,,,,,false,false,,\n");
    CHECK_THROWS_AS(read_table(in), ValidationError);
  }

  TEST_CASE("malformed rows report line and column") {
    std::istringstream in(std::string(kHeader) + "x_1,5,true,abc,0,1,1,,,,,false,false,,\n");
    try {
      read_table(in);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 12);
    }
    std::istringstream short_row(std::string(kHeader) + "x_1,5,true\n");
    CHECK_THROWS_AS(read_table(short_row), ParseError);
    std::istringstream bad_json(std::string(kHeader) +
                                "x_1,5,true,3,0,1,1,\"[1,\",,,,false,false,,\n");
    CHECK_THROWS_AS(read_table(bad_json), ParseError);
    std::istringstream no_col("name,crossing_number\nx,3\n");
    CHECK_THROWS_AS(read_table(no_col), ParseError);
    std::istringstream half_mccoy(std::string(kHeader) + "x_1,5,true,3,0,1,1,,,,,false,false,true,\n");
    CHECK_THROWS_AS(read_table(half_mccoy), ParseError);
  }

  TEST_CASE("validate") {
    CHECK(validate(trefoil()).empty());
    KnotRecord r = trefoil();
    r.alexander = SymmetrizedAlex::from_ints({1, 1});  // Delta(1) = 3
    auto v = validate(r);
    CHECK(std::count(v.begin(), v.end(), "alexander_at_one") == 1);
    r = trefoil();
    r.determinant = 5;
    v = validate(r);
    CHECK(std::count(v.begin(), v.end(), "determinant_mismatch") == 1);
    r = trefoil();
    r.signature = 1;
    CHECK(validate(r) == std::vector<std::string>{"signature_odd"});
    r = trefoil();
    r.conway_coeffs = std::vector<Integer>{2, 1};
    v = validate(r);
    CHECK(std::count(v.begin(), v.end(), "conway_constant") == 1);
    r = trefoil();
    r.unknotting = {2, 1};
    CHECK(validate(r) == std::vector<std::string>{"unknotting_bounds"});
  }

  TEST_CASE("save and load round trip") {
    auto path = std::filesystem::temp_directory_path() / "adjlab_roundtrip.csv";
    save_table(path, le12());
    auto again = load_table(path);
    CHECK(again == le12());
    std::filesystem::remove(path);
  }

  TEST_CASE("empty and comment-only tables") {
    std::istringstream empty("");
    CHECK(read_table(empty).empty());
    std::istringstream header_only(std::string("# a comment\n") + kHeader);
    CHECK(read_table(header_only).empty());
  }

  TEST_CASE("knot name order") {
    CHECK(knot_name_less("3_1", "10_1"));
    CHECK(knot_name_less("11a_367", "11n_1"));
    CHECK(knot_name_less("12n_9", "12n_10"));
    CHECK_FALSE(knot_name_less("12n_10", "12n_9"));
  }
}
