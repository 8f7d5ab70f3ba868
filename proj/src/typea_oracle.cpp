#include "cluster_crystal/typea_oracle.hpp"

#include <random>

namespace cluster_crystal::typea {

namespace {

void require_letter(std::size_t size, int i) {
  if (i < 1 || static_cast<std::size_t>(i) >= size) {
    throw DomainError("invalid_letter", "letter " + std::to_string(i) + " does not fit a matrix of size " + std::to_string(size));
  }
}

std::vector<int> iota(int from, int to) {
  std::vector<int> out;
  for (int i = from; i <= to; ++i) out.push_back(i);
  return out;
}

[[noreturn]] void vanishing(const std::string& what) {
  throw DomainError("outside_domain", what + " vanishes at this matrix");
}

std::size_t matrix_size(const Seed& seed) {
  if (!seed.cartan().is_type_a()) throw DomainError("not_type_a", "the matrix realization covers type A only");
  return static_cast<std::size_t>(seed.rank() + 1);
}

// Exact solution of an overdetermined but consistent system.
std::vector<Rational> solve_consistent(RationalMatrix a, std::vector<Rational> b) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    for (std::size_t k = 0; k < cols; ++k) std::swap(a(p, k), a(r, k));
    std::swap(b[p], b[r]);
    for (std::size_t q = 0; q < rows; ++q) {
      if (q == r || a(q, c) == 0) continue;
      const Rational f = a(q, c) / a(r, c);
      for (std::size_t k = 0; k < cols; ++k) a(q, k) -= f * a(r, k);
      b[q] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (pivot_col.size() != cols) throw DomainError("singular_system", "linear system has no unique solution");
  for (std::size_t q = r; q < rows; ++q) {
    if (b[q] != 0) throw DomainError("singular_system", "linear system is inconsistent");
  }
  std::vector<Rational> x(cols);
  for (std::size_t q = 0; q < r; ++q) x[pivot_col[q]] = b[q] / a(q, pivot_col[q]);
  return x;
}

}  // namespace

RationalMatrix y_matrix(std::size_t size, int i, const Rational& t) {
  require_letter(size, i);
  RationalMatrix m = RationalMatrix::identity(size);
  m(static_cast<std::size_t>(i), static_cast<std::size_t>(i - 1)) = t;
  return m;
}

RationalMatrix x_matrix(std::size_t size, int i, const Rational& t) {
  require_letter(size, i);
  RationalMatrix m = RationalMatrix::identity(size);
  m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i)) = t;
  return m;
}

RationalMatrix coweight_matrix(std::size_t size, int i, const Rational& t) {
  require_letter(size, i);
  RationalMatrix m = RationalMatrix::identity(size);
  for (int a = 0; a < i; ++a) m(static_cast<std::size_t>(a), static_cast<std::size_t>(a)) = t;
  return m;
}

RationalMatrix coroot_matrix(std::size_t size, int i, const Rational& t) {
  require_letter(size, i);
  if (t == 0) throw DomainError("division_by_zero", "coroot parameter must be nonzero");
  RationalMatrix m = RationalMatrix::identity(size);
  m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i - 1)) = t;
  m(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = 1 / t;
  return m;
}

RationalMatrix weyl_lift(std::size_t size, const std::vector<int>& word) {
  RationalMatrix m = RationalMatrix::identity(size);
  for (int i : word) m = m * x_matrix(size, i, -1) * y_matrix(size, i, 1) * x_matrix(size, i, -1);
  return m;
}

RationalMatrix weyl_lift_inverse(std::size_t size, const std::vector<int>& word) {
  RationalMatrix m = RationalMatrix::identity(size);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    m = m * x_matrix(size, *it, 1) * y_matrix(size, *it, -1) * x_matrix(size, *it, 1);
  }
  return m;
}

Rational generalized_minor(const std::vector<int>& w_left, const std::vector<int>& w_right, int i,
                           const RationalMatrix& g) {
  const RationalMatrix conj = weyl_lift_inverse(g.rows(), w_left) * g * weyl_lift(g.rows(), w_right);
  return leading_minor(conj, i);
}

GaussDecomposition gauss_decompose(const RationalMatrix& g) {
  const int n = static_cast<int>(g.rows());
  std::vector<Rational> lead(static_cast<std::size_t>(n + 1));
  lead[0] = 1;
  for (int i = 1; i <= n; ++i) {
    lead[i] = leading_minor(g, i);
    if (lead[i] == 0) vanishing("a leading principal minor");
  }
  GaussDecomposition out{RationalMatrix::identity(g.rows()), RationalMatrix(g.rows(), g.rows(), Rational(0)),
                         RationalMatrix::identity(g.rows())};
  for (int j = 1; j <= n; ++j) {
    out.diagonal(j - 1, j - 1) = lead[j] / lead[j - 1];
    std::vector<int> head = iota(1, j - 1);
    for (int i = j + 1; i <= n; ++i) {
      std::vector<int> with_i = head;
      with_i.push_back(i);
      out.lower(i - 1, j - 1) = minor(g, with_i, iota(1, j)) / lead[j];
      out.upper(j - 1, i - 1) = minor(g, iota(1, j), with_i) / lead[j];
    }
  }
  return out;
}

RationalMatrix embed_x(const XPoint& x) {
  const Seed& seed = x.seed();
  const std::size_t size = matrix_size(seed);
  RationalMatrix m = RationalMatrix::identity(size);
  for (int i = seed.rank(); i >= 1; --i) m = m * coweight_matrix(size, i, x[-i]);
  for (SeedIndex k = 1; k <= seed.length(); ++k) {
    const int letter = seed.word()[k - 1];
    m = m * y_matrix(size, letter, 1) * coweight_matrix(size, letter, x[k]);
  }
  return m;
}

RationalMatrix tcoords_matrix(const std::vector<int>& word, const TCoords& tc) {
  const std::size_t size = tc.h.size();
  if (tc.t.size() != word.size()) throw DomainError("shape_mismatch", "one t-coordinate per letter is required");
  RationalMatrix m(size, size, Rational(0));
  for (std::size_t a = 0; a < size; ++a) m(a, a) = tc.h[a];
  for (std::size_t k = 0; k < word.size(); ++k) {
    m = m * y_matrix(size, word[k], tc.t[k]) * coroot_matrix(size, word[k], 1 / tc.t[k]);
  }
  return m;
}

CellSample random_cell_matrix(int rank, const std::vector<int>& word, std::uint64_t rng_seed) {
  std::mt19937_64 rng(rng_seed);
  // Modular reduction keeps the stream identical across standard libraries.
  const auto draw = [&] { return ratio(static_cast<long>(1 + rng() % 9), static_cast<long>(1 + rng() % 9)); };
  TCoords tc;
  Rational product(1);
  for (int a = 0; a < rank; ++a) {
    tc.h.push_back(draw());
    product *= tc.h.back();
  }
  tc.h.push_back(1 / product);
  for (std::size_t k = 0; k < word.size(); ++k) tc.t.push_back(draw());
  return CellSample{tcoords_matrix(word, tc), tc};
}

CrystalData eps_gamma_phi_matrix(int j, const RationalMatrix& g) {
  const int size = static_cast<int>(g.rows());
  require_letter(g.rows(), j);
  const Rational lead_j = leading_minor(g, j);
  std::vector<int> rows = iota(1, j - 1);
  rows.push_back(j + 1);
  const Rational shifted = minor(g, rows, iota(1, j));
  const Rational lower = leading_minor(g, j - 1);
  const Rational upper = leading_minor(g, std::min(j + 1, size));
  if (shifted == 0) vanishing("the minor in the denominator of phi");
  if (lead_j == 0 || lower == 0 || upper == 0) vanishing("a leading principal minor");
  CrystalData out;
  out.phi = lead_j / shifted;
  out.gamma = lead_j * lead_j / (lower * upper);
  out.epsilon = out.phi / out.gamma;
  return out;
}

RationalMatrix act_e_matrix(int j, const Rational& c, const RationalMatrix& g) {
  if (c == 0) throw DomainError("invalid_argument", "the crystal parameter c must be nonzero");
  const CrystalData data = eps_gamma_phi_matrix(j, g);
  const std::size_t size = g.rows();
  return x_matrix(size, j, (c - 1) * data.phi) * g * x_matrix(size, j, (1 / c - 1) * data.epsilon);
}

RationalMatrix twist(const std::vector<int>& word, const RationalMatrix& g) {
  const GaussDecomposition ldu = gauss_decompose(weyl_lift_inverse(g.rows(), word) * g);
  return (ldu.diagonal * ldu.upper).transpose();
}

RationalMatrix twist_inverse(const std::vector<int>& word, const RationalMatrix& h) {
  const std::size_t size = h.rows();
  const RationalMatrix k = h.transpose();
  const RationalMatrix u = weyl_lift(size, word);

  // u_bar is a signed permutation matrix; column c has its entry in row pi[c].
  std::vector<std::size_t> pi(size);
  for (std::size_t c = 0; c < size; ++c)
    for (std::size_t r = 0; r < size; ++r)
      if (u(r, c) != 0) pi[c] = r;

  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  for (std::size_t c = 0; c < size; ++c)
    for (std::size_t d = 0; d < c; ++d)
      if (pi[c] < pi[d]) unknowns.emplace_back(c, d);

  // Strict upper triangle of u (I + sum L_cd E_cd) K must vanish.
  std::size_t equations = size * (size - 1) / 2;
  RationalMatrix system(equations, unknowns.size(), Rational(0));
  std::vector<Rational> rhs;
  std::size_t row = 0;
  const RationalMatrix uk = u * k;
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = a + 1; b < size; ++b, ++row) {
      for (std::size_t q = 0; q < unknowns.size(); ++q) {
        const auto [c, d] = unknowns[q];
        system(row, q) = u(a, c) * k(d, b);
      }
      rhs.push_back(-uk(a, b));
    }
  }
  RationalMatrix lower = RationalMatrix::identity(size);
  if (!unknowns.empty()) {
    const std::vector<Rational> sol = solve_consistent(std::move(system), std::move(rhs));
    for (std::size_t q = 0; q < unknowns.size(); ++q) lower(unknowns[q].first, unknowns[q].second) = sol[q];
  } else {
    for (const Rational& v : rhs) {
      if (v != 0) throw DomainError("singular_system", "matrix is outside the image of the twist");
    }
  }
  return u * lower * k;
}

APoint minors_a(const SeedPtr& seed, const RationalMatrix& g) {
  matrix_size(*seed);
  std::vector<Rational> coords;
  for (SeedIndex k : seed->indices()) {
    const int letter = seed->combinatorics().letter(k);
    const std::vector<int> prefix = k < 0 ? std::vector<int>{} : std::vector<int>(seed->word().begin(), seed->word().begin() + k);
    coords.push_back(generalized_minor(prefix, {}, letter, g));
  }
  return APoint(seed, std::move(coords));
}

std::optional<Rational> proportionality(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
  std::optional<Rational> lambda;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const bool az = a(r, c) == 0, bz = b(r, c) == 0;
      if (az && bz) continue;
      if (az != bz) return std::nullopt;
      const Rational q = a(r, c) / b(r, c);
      if (!lambda) {
        lambda = q;
      } else if (*lambda != q) {
        return std::nullopt;
      }
    }
  }
  return lambda;
}

TCoords act_e_on_tcoords(const Seed& seed, int j, const Rational& c, const TCoords& tc) {
  const std::vector<int>& word = seed.word();
  const int n = seed.length();
  const CartanMatrix& a = seed.cartan();
  if (c == 0) throw DomainError("invalid_argument", "the crystal parameter c must be nonzero");
  // T_m = t_m prod_{q<m} t_q^{a_{i_q, j}} for each occurrence m of j.
  std::vector<std::optional<Rational>> T(static_cast<std::size_t>(n));
  for (int m = 1; m <= n; ++m) {
    if (word[m - 1] != j) continue;
    Rational v = tc.t[m - 1];
    for (int q = 1; q < m; ++q) v *= power(tc.t[q - 1], a(word[q - 1], j));
    T[m - 1] = v;
  }
  TCoords out = tc;
  for (int k = 1; k <= n; ++k) {
    Rational num(0), den(0);
    for (int m = 1; m <= n; ++m) {
      if (!T[m - 1]) continue;
      num += (m < k ? c : Rational(1)) * *T[m - 1];
      den += (m <= k ? c : Rational(1)) * *T[m - 1];
    }
    if (den == 0) vanishing("a denominator of the t-coordinate action");
    out.t[k - 1] = tc.t[k - 1] * num / den;
  }
  return out;
}

Rational epsilon_tcoords(const Seed& seed, int j, const TCoords& tc) {
  const std::vector<int>& word = seed.word();
  const int n = seed.length();
  Rational total(0);
  for (int m = 1; m <= n; ++m) {
    if (word[m - 1] != j) continue;
    Rational v = tc.t[m - 1];
    for (int q = m + 1; q <= n; ++q) v *= power(tc.t[q - 1], seed.cartan()(word[q - 1], j));
    total += 1 / v;
  }
  if (total == 0) vanishing("the epsilon sum");
  return 1 / total;
}

std::vector<Rational> x_to_tcoords(const Seed& seed, const XPoint& x) {
  const std::vector<int>& word = seed.word();
  const int n = seed.length();
  const CartanMatrix& a = seed.cartan();
  std::vector<Rational> t(static_cast<std::size_t>(n));
  for (int s = n; s >= 1; --s) {
    Rational prod_x(1), num(1);
    for (int k = s; k <= n; ++k)
      if (word[k - 1] == word[s - 1]) prod_x *= x[k];
    for (int k = s + 1; k <= n; ++k) num *= power(t[k - 1], -a(word[k - 1], word[s - 1]));
    t[s - 1] = num / prod_x;
  }
  return t;
}

std::vector<Rational> tcoords_to_x(const Seed& seed, const std::vector<Rational>& t) {
  const std::vector<int>& word = seed.word();
  const int n = seed.length();
  const CartanMatrix& a = seed.cartan();
  std::vector<Rational> z(static_cast<std::size_t>(n + 1), Rational(1));
  for (int s = 1; s <= n; ++s) {
    Rational num(1);
    for (int k = s + 1; k <= n; ++k) num *= power(t[k - 1], -a(word[k - 1], word[s - 1]));
    z[s - 1] = num / t[s - 1];
  }
  std::vector<Rational> x(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    const SeedIndex kp = seed.combinatorics().next(k);
    x[k - 1] = z[k - 1] / (kp <= n ? z[kp - 1] : Rational(1));
  }
  return x;
}

}  // namespace cluster_crystal::typea
