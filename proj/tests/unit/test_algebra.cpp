#include "doctest.h"

#include "cluster_crystal/cartan.hpp"
#include "cluster_crystal/expr.hpp"
#include "cluster_crystal/semifield.hpp"

using namespace cluster_crystal;

TEST_CASE("rationals parse and print in lowest terms") {
  CHECK(format_rational(parse_rational("6/4")) == "3/2");
  CHECK(format_rational(parse_rational("-5")) == "-5");
  CHECK(power(ratio(2, 3), -2) == ratio(9, 4));
  CHECK(to_integer(Rational(7)) == 7);
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("expressions evaluate over both semifields") {
  const Expr x = Expr::variable(0);
  const Expr y = Expr::variable(1);
  const Expr e = (x + y) / x;
  CHECK(expr_eval<PositiveRationals>(e, {{0, Rational(1)}, {1, Rational(2)}}) == 3);
  CHECK(expr_eval<TropicalIntegers>(e, {{0, 0}, {1, 5}}) == 5);
  CHECK(expr_eval<TropicalIntegers>(Expr::constant(2), {}) == 0);
  CHECK(expr_eval<TropicalIntegers>(pow(x, -3), {{0, 4}}) == -12);
}

TEST_CASE("compiled programs agree with direct evaluation") {
  const Expr x = Expr::variable(0);
  const Expr y = Expr::variable(1);
  const Expr shared = x + y;
  const Program program({shared * shared, shared / (x * y)});
  const auto out = program.run<PositiveRationals>({ratio(1, 2), Rational(3)});
  CHECK(out[0] == ratio(49, 4));
  CHECK(out[1] == ratio(7, 3));
  CHECK_THROWS_AS(program.run<PositiveRationals>({Rational(1)}), DomainError);
}

TEST_CASE("tropical arithmetic reports overflow instead of wrapping") {
  CHECK_THROWS_AS(TropicalIntegers::mul(INT64_MAX, 1), DomainError);
  CHECK_THROWS_AS(TropicalIntegers::pow(INT64_MAX / 2, 3), DomainError);
}

TEST_CASE("Cartan matrices and symmetrizers") {
  CHECK(CartanMatrix::from_entries({{2}}).symmetrizer() == std::vector<int>{1});
  CHECK(CartanMatrix::parse("A2").symmetrizer() == std::vector<int>{1, 1});
  CHECK(CartanMatrix::from_entries({{2, -1}, {-3, 2}}).symmetrizer() == std::vector<int>{3, 1});
  CHECK_THROWS(CartanMatrix::from_entries({{2, -1}, {0, 2}}));
  CHECK_THROWS(CartanMatrix::parse("Q3"));
}

TEST_CASE("reduced words") {
  const auto a2 = CartanMatrix::parse("A2");
  CHECK(check_reduced(a2, {1, 2, 1}));
  CHECK_FALSE(check_reduced(a2, {1, 1}));
  CHECK(check_reduced(CartanMatrix::parse("A4"), {1, 2, 3, 4, 1, 2, 3, 1, 2, 1}));
  CHECK(longest_word_type_a(4) == std::vector<int>{1, 2, 3, 4, 1, 2, 3, 1, 2, 1});
  CHECK(check_reduced(CartanMatrix::parse("G2"), {1, 2, 1, 2, 1, 2}));
  CHECK_FALSE(check_reduced(CartanMatrix::parse("G2"), {1, 2, 1, 2, 1, 2, 1}));
}
