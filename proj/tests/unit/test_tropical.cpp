#include <algorithm>
#include <sstream>

#include "doctest.h"

#include "cluster_crystal/tropical.hpp"

using namespace cluster_crystal;

namespace {

SeedPtr a1() { return make_seed(CartanMatrix::parse("A1"), {1}); }

}  // namespace

TEST_CASE("rank one tropical crystals") {
  const SeedPtr s = a1();
  const TropPoint b(s, {4, -3});
  const TropicalCrystal x(Structure::X, s);
  const TropicalCrystal a(Structure::A, s);
  for (std::int64_t n : {-2, 0, 1, 5}) {
    CHECK(x.act(1, n, b).coords() == std::vector<std::int64_t>{4 + n, -3 + n});
    CHECK(a.act(1, n, b).coords() == std::vector<std::int64_t>{4, -3 + n});
  }
  CHECK(x.wt(1, b) == 1);
  CHECK(x.epsilon(1, b) == 3);
  CHECK(a.wt(1, b) == -6);
  CHECK(a.epsilon(1, b) == 7);
  CHECK(a.epsilon(1, a.e(1, b)) == a.epsilon(1, b) - 1);
}

TEST_CASE("tropical mutation") {
  const SeedPtr s = make_seed(CartanMatrix::parse("A2"), {1, 2, 1});
  const TropPoint b(s, {3, -1, 2, 0, 4});
  const TropPoint xa = trop_mutate(Structure::X, 1, b);
  CHECK(xa[1] == -2);
  CHECK(trop_mutate(Structure::X, 1, xa).coords() == b.coords());
  const TropPoint aa = trop_mutate(Structure::A, 1, b);
  CHECK(aa[1] == std::max<std::int64_t>(3 + 4, -1 + 0) - 2);
  CHECK(trop_mutate(Structure::A, 1, aa).coords() == b.coords());
}

TEST_CASE("transported operators on a mutated chart") {
  const SeedPtr s = make_seed(CartanMatrix::parse("A2"), {1, 2, 1});
  for (Structure structure : {Structure::A, Structure::X}) {
    const TropicalCrystal fresh(structure, s);
    const TropicalCrystal moved(structure, s, {1});
    for (const TropPoint& b : box_points(s, 1)) {
      const TropPoint m = trop_mutate(structure, 1, b);
      for (int j : {1, 2}) {
        CHECK(moved.e(j, m).coords() == trop_mutate(structure, 1, fresh.e(j, b)).coords());
        CHECK(moved.wt(j, m) == fresh.wt(j, b));
        CHECK(moved.epsilon(j, m) == fresh.epsilon(j, b));
      }
    }
  }
}

TEST_CASE("tropicalizing a composite equals composing the tropicalizations") {
  const SeedPtr s = make_seed(CartanMatrix::parse("A2"), {1, 2, 1});
  const std::size_t n = s->size();
  const std::vector<Expr> vars = slot_variables(n);
  const Expr c = Expr::variable(static_cast<int>(n));
  for (int j : {1, 2}) {
    const Program x_composite(x_mutation_formula(*s, 1, x_action_formula(*s, j, vars, c)));
    const Program a_composite(a_mutation_formula(*s, 1, a_action_formula(*s, j, vars, c)));
    const TropicalCrystal xt(Structure::X, s);
    const TropicalCrystal at(Structure::A, s);
    for (const TropPoint& b : random_box_points(s, 20, 100, static_cast<std::uint64_t>(j))) {
      for (std::int64_t m : {-2, 1, 3}) {
        std::vector<std::int64_t> in = b.coords();
        in.push_back(m);
        CHECK(x_composite.run<TropicalIntegers>(in) == trop_mutate(Structure::X, 1, xt.act(j, m, b)).coords());
        CHECK(a_composite.run<TropicalIntegers>(in) == trop_mutate(Structure::A, 1, at.act(j, m, b)).coords());
      }
    }
  }
}

TEST_CASE("charts move rational points back and forth") {
  const SeedPtr s = make_seed(CartanMatrix::parse("A3"), {1, 2, 1, 3, 2, 1});
  std::vector<Rational> v;
  for (std::size_t k = 0; k < s->size(); ++k) v.push_back(ratio(static_cast<long>(k % 4 + 1), static_cast<long>(k % 3 + 2)));
  const APoint a(s, v);
  const XPoint x(s, v);
  for (const auto& path : mutation_sequences(*s, 3)) {
    const Chart chart(s, path);
    const APoint ma = chart.from_fresh(a);
    const XPoint mx = chart.from_fresh(x);
    CHECK(*ma.seed_ptr() == *chart.seed());
    CHECK(chart.to_fresh(ma) == a);
    CHECK(chart.to_fresh(mx) == x);
    const TropPoint b(s, {3, -1, 2, 0, 4, -5, 1, 2, -2});
    CHECK(chart.to_fresh(Structure::A, chart.from_fresh(Structure::A, b)) == b);
    CHECK(chart.to_fresh(Structure::X, chart.from_fresh(Structure::X, b)) == b);
  }
}

TEST_CASE("axiom and gluing checks") {
  const SeedPtr s = make_seed(CartanMatrix::parse("A2"), {1, 2, 1});
  const TropicalCrystal x(Structure::X, s);
  const CrystalReport report = crystal_check(x, box_points(s, 2), {1, 2});
  CHECK(report.passed());
  CHECK(report.points == 3125);
  CHECK(crystal_check(x, {}, {1, 2}).passed());
  const TropicalCrystal moved(Structure::X, s, {1});
  CHECK(glued_check(x, moved, random_box_points(s, 20, 200, 3), {1, 2}).passed());
  CHECK(glued_check(x, moved, {}, {1, 2}).passed());
}

TEST_CASE("sampling helpers") {
  const SeedPtr s = a1();
  CHECK(box_points(s, 0).size() == 1);
  CHECK(box_points(s, 2).size() == 25);
  CHECK_THROWS_AS(box_points(s, 100, 10), DomainError);
  const auto p = random_box_points(s, 20, 50, 7);
  CHECK(p.size() == 50);
  CHECK(p == random_box_points(s, 20, 50, 7));
  for (const TropPoint& b : p) {
    for (std::int64_t v : b.coords()) CHECK(std::abs(v) <= 20);
  }
  const auto seqs = mutation_sequences(*make_seed(CartanMatrix::parse("A3"), {1, 2, 1, 3, 2, 1}), 2);
  CHECK(seqs.front().empty());
  for (const auto& q : seqs) {
    for (std::size_t t = 1; t < q.size(); ++t) CHECK(q[t] != q[t - 1]);
  }
}

TEST_CASE("crystal graph in rank one") {
  const SeedPtr s = a1();
  const TropicalCrystal a(Structure::A, s);
  const std::string dot = emit_dot(a, 1, {1});
  CHECK(dot.rfind("digraph", 0) == 0);
  std::size_t vertices = 0;
  std::istringstream lines(dot);
  for (std::string line; std::getline(lines, line);) {
    if (line.find("->") == std::string::npos && line.find("\";") != std::string::npos) ++vertices;
  }
  CHECK(vertices == 9);
  // f_1 lowers a_1 by one, so each column of the 3x3 box carries two edges.
  std::size_t edges = 0;
  for (std::size_t at = dot.find("->"); at != std::string::npos; at = dot.find("->", at + 2)) ++edges;
  CHECK(edges == 6);
  const std::string single = emit_dot(a, 0, {1});
  CHECK(single.find("->") == std::string::npos);
}
