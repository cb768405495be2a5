#include <doctest.h>

#include "kmq/errors.hpp"
#include "kmq/io.hpp"

using namespace kmq;

TEST_CASE("weight grammar") {
  auto a1 = build_affine_data("A1", false);
  CHECK(parse_weight(a1, "L0") == AffineWeight(1, {0}, 0));
  CHECK(parse_weight(a1, "L0+2d-a1") == AffineWeight(1, {-2}, 2));
  CHECK(parse_weight(a1, " 2*L1 - d ") == AffineWeight(2, {2}, -1));
  CHECK(parse_weight(a1, "-a0") == AffineWeight(0, {2}, -1));
  CHECK(parse_weight(a1, "0") == a1.zero());
  CHECK(parse_weight(a1, "(2; 1; -3)") == AffineWeight(2, {1}, -3));
  CHECK(parse_weight(a1, to_string(AffineWeight(3, {-1}, 4))) == AffineWeight(3, {-1}, 4));
  for (const char* bad : {"", "L", "L2", "x1", "L0 L1", "L0++L1", "2", "(1;0)", "(1; 0,1; 0)", "L0+"})
    CHECK_THROWS_AS(parse_weight(a1, bad), InvalidInput);

  auto sl3 = build_finite_data("A2");
  CHECK(parse_weight(sl3, "L1+L2-a1") == AffineWeight(0, {-1, 2}, 0));
  CHECK_THROWS_AS(parse_weight(sl3, "L0"), InvalidInput);
  CHECK_THROWS_AS(parse_weight(sl3, "L1+d"), InvalidInput);
}

TEST_CASE("json round trips") {
  AffineWeight w(2, {1, -1}, -3);
  CHECK(weight_from_json(to_json(w)) == w);
  QPolynomial p{0, 1, 3, 1, 1};
  CHECK(to_json(p).dump() == "[0,1,3,1,1]");
  CHECK(qpoly_from_json(to_json(p)) == p);
  QPolynomial big(std::vector<mpz_class>{mpz_class("123456789012345678901234567890"), 1});
  CHECK(qpoly_from_json(Json::parse(to_json(big).dump())) == big);
  CHECK(to_json(QPolynomial()).dump() == "[]");
}

TEST_CASE("cartan data dump") {
  auto j = to_json(build_affine_data("G2", true));
  CHECK(j["cartan"].size() == 3);
  CHECK(j["twist"] == 3);
  CHECK(j["affine"] == true);
  auto a2 = to_json(build_affine_data("A2", false));
  CHECK(a2["cartan"].dump() == "[[2,-1,-1],[-1,2,-1],[-1,-1,2]]");
  CHECK(a2["marks"].dump() == "[1,1,1]");
  CHECK(a2["dual_coxeter"] == 3);
}

TEST_CASE("slice dump") {
  auto sl2 = build_finite_data("A1");
  auto slice = construct_slice(sl2, AffineWeight(0, {2}, 0), 0);
  auto j = to_json(slice);
  CHECK(j["spaces"].size() == 3);
  CHECK(j["spaces"][0]["dim"] == 1);
  CHECK(j["spaces"][0]["f"]["1"].size() == 1);
  CHECK(j["spaces"][0]["f"]["1"][0].size() == 1);
  CHECK(j["spaces"][0]["f"]["1"][0][0].is_string());
}

TEST_CASE("compact rendering") {
  CHECK(join(std::vector<Int>{1, -2, 3}) == "1;-2;3");
  CHECK(join(QPolynomial{0, 0, 1}) == "0;0;1");
  CHECK(join(QPolynomial()) == "0");
  CHECK(compact(AffineWeight(2, {0, 1}, -1)) == "2;0;1;-1");
}
