#include "doctest.h"

#include "cluster_crystal/json_io.hpp"

using namespace cluster_crystal;

TEST_CASE("words") {
  CHECK(parse_word("1,2,1") == std::vector<int>{1, 2, 1});
  CHECK(parse_word("").empty());
  CHECK_THROWS_AS(parse_word("1,,2"), UsageError);
  CHECK_THROWS_AS(parse_word("1,x"), UsageError);
}

TEST_CASE("seed round trip keeps history and hash") {
  const SeedPtr s = make_seed(CartanMatrix::parse("A3"), {1, 2, 1, 3, 2, 1});
  const Seed m = s->mutate(1).mutate(2);
  const Json j = seed_to_json(m);
  CHECK(j["history"] == Json::array({1, 2}));
  const SeedPtr back = seed_from_json(j);
  CHECK(*back == m);
  CHECK(back->content_hash() == m.content_hash());

  Json tampered = j;
  tampered["B"][0][1] = "5";
  CHECK_THROWS_AS(seed_from_json(tampered), UsageError);
  tampered = j;
  tampered["hash"] = "0000";
  CHECK_THROWS_AS(seed_from_json(tampered), UsageError);
}

TEST_CASE("non-finite-type Cartan matrices are stored explicitly") {
  const CartanMatrix a = CartanMatrix::from_entries({{2, -1}, {-3, 2}});
  const Json j = cartan_to_json(a);
  CHECK(cartan_from_json(j) == a);
  CHECK(cartan_from_json(Json("A2")) == CartanMatrix::parse("A2"));
}

TEST_CASE("point round trips") {
  const SeedPtr s = make_seed(CartanMatrix::parse("A2"), {1, 2, 1});
  const APoint a(s, {ratio(1, 2), Rational(3), ratio(-5, 4), Rational(7), ratio(2, 9)});
  CHECK(a_point_from_json(point_to_json(a)) == a);
  const XPoint x(s, a.coords());
  CHECK(x_point_from_json(point_to_json(x)) == x);
  const TropPoint t(s, {1, -2, 3, 0, 20});
  CHECK(trop_point_from_json(point_to_json(t)) == t);

  Json missing = point_to_json(a);
  missing["coords"].erase("3");
  CHECK_THROWS_AS(a_point_from_json(missing), UsageError);
  Json zero = point_to_json(a);
  zero["coords"]["1"] = "0";
  CHECK_THROWS_AS(a_point_from_json(zero), DomainError);
}

TEST_CASE("matrices") {
  RationalMatrix m(2, 2);
  m(0, 0) = ratio(1, 3);
  m(1, 1) = -2;
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([["1","2"],["3"]])")), UsageError);
}
