#include "doctest.h"

#include "cluster_crystal/crystal.hpp"
#include "cluster_crystal/typea_oracle.hpp"

using namespace cluster_crystal;
using namespace cluster_crystal::typea;

namespace {

RationalMatrix mat(std::initializer_list<std::initializer_list<Rational>> rows) {
  RationalMatrix m(rows.size(), rows.begin()->size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (const Rational& v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

}  // namespace

TEST_CASE("embedding of the X-torus of SL2") {
  const SeedPtr s = make_seed(CartanMatrix::parse("A1"), {1});
  const Rational xm1 = ratio(3, 2), x1 = 5;
  const RationalMatrix g = embed_x(XPoint(s, {xm1, x1}));
  CHECK(g == mat({{xm1 * x1, 0}, {x1, 1}}));
  const CrystalData d = eps_gamma_phi_matrix(1, g);
  CHECK(d.phi == xm1);
  CHECK(d.epsilon == 1 / x1);
  CHECK(d.gamma == xm1 * x1);
  const GaussDecomposition ldu = gauss_decompose(g);
  CHECK(ldu.diagonal(0, 0) / ldu.diagonal(1, 1) == xm1 * x1);

  const RationalMatrix scaled = mat({{3 * xm1 * x1, 0}, {3 * x1, 3}});
  const CrystalData ds = eps_gamma_phi_matrix(1, scaled);
  CHECK(ds.epsilon == d.epsilon);
  CHECK(ds.gamma == d.gamma);
}

TEST_CASE("all-ones X point embeds as a product of y_i(1)") {
  const SeedPtr s = make_seed(CartanMatrix::parse("A2"), {1, 2, 1});
  const RationalMatrix g = embed_x(XPoint(s, std::vector<Rational>(5, Rational(1))));
  RationalMatrix expected = RationalMatrix::identity(3);
  for (int i : s->word()) expected = expected * y_matrix(3, i, Rational(1));
  CHECK(g == expected);
}

TEST_CASE("generalized minors") {
  const Rational a = ratio(2, 3), c = 7;
  const RationalMatrix g = mat({{a, 0}, {c, 1 / a}});
  CHECK(generalized_minor({1}, {}, 1, g) == c);
  CHECK(generalized_minor({}, {}, 1, g) == a);
  const RationalMatrix h = mat({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}});
  CHECK(generalized_minor({}, {}, 2, h) == -3);
}

TEST_CASE("twist of SL2") {
  const Rational am1 = ratio(2, 3), a1 = 5;
  const RationalMatrix g = mat({{am1, 0}, {a1, 1 / am1}});
  CHECK(twist({1}, g) == mat({{a1, 0}, {1 / am1, 1 / a1}}));
  CHECK(twist_inverse({1}, twist({1}, g)) == g);
  const SeedPtr s = make_seed(CartanMatrix::parse("A1"), {1});
  const APoint a = minors_a(s, g);
  CHECK(a[-1] == am1);
  CHECK(a[1] == a1);
}

TEST_CASE("twist round trip on random cells") {
  const std::vector<int> word{1, 2, 3, 1, 2, 1};
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const CellSample cell = random_cell_matrix(3, word, seed);
    CHECK(determinant(cell.matrix) == 1);
    CHECK(twist_inverse(word, twist(word, cell.matrix)) == cell.matrix);
    CHECK(tcoords_matrix(word, cell.coords) == cell.matrix);
  }
  CHECK(random_cell_matrix(2, {1, 2, 1}, 9).matrix == random_cell_matrix(2, {1, 2, 1}, 9).matrix);
}

TEST_CASE("action on matrices") {
  const RationalMatrix g = random_cell_matrix(2, {1, 2, 1}, 4).matrix;
  CHECK(act_e_matrix(1, Rational(1), g) == g);
  const Rational c = ratio(5, 3);
  const RationalMatrix h = act_e_matrix(1, c, g);
  CHECK(eps_gamma_phi_matrix(1, h).gamma == c * c * eps_gamma_phi_matrix(1, g).gamma);
  CHECK(eps_gamma_phi_matrix(2, h).gamma == eps_gamma_phi_matrix(2, g).gamma / c);
  CHECK(eps_gamma_phi_matrix(1, h).epsilon == eps_gamma_phi_matrix(1, g).epsilon / c);
  CHECK(act_e_matrix(1, 1 / c, h) == g);
}

TEST_CASE("proportionality") {
  const RationalMatrix a = mat({{1, 2}, {3, 4}});
  CHECK(proportionality(a * mat({{3, 0}, {0, 3}}), a) == Rational(3));
  CHECK_FALSE(proportionality(a, mat({{1, 2}, {3, 5}})).has_value());
}

TEST_CASE("cell coordinates and X coordinates") {
  const SeedPtr s = make_seed(CartanMatrix::parse("A2"), {1, 2, 1});
  const XPoint x(s, {ratio(2, 3), Rational(5), ratio(1, 4), Rational(3), ratio(7, 2)});
  const auto t = x_to_tcoords(*s, x);
  const auto back = tcoords_to_x(*s, t);
  for (SeedIndex k = 1; k <= 3; ++k) CHECK(back[k - 1] == x[k]);
  const TCoords tc{{Rational(2), ratio(1, 3), ratio(3, 2)}, t};
  CHECK(act_e_on_tcoords(*s, 1, Rational(1), tc) == tc);
  CHECK(epsilon_tcoords(*s, 1, tc) == eps_gamma_phi_matrix(1, tcoords_matrix(s->word(), tc)).epsilon);
}
