#include "cluster_crystal/cartan.hpp"

#include <cctype>
#include <numeric>
#include <optional>

#include "cluster_crystal/errors.hpp"
#include "cluster_crystal/matrix.hpp"
#include "cluster_crystal/rational.hpp"

namespace cluster_crystal {

namespace {

std::vector<int> minimal_symmetrizer(const std::vector<std::vector<int>>& a) {
  const std::size_t r = a.size();
  // Propagate ratios d_j / d_i = a_ij / a_ji along nonzero entries, one
  // connected component at a time, then clear denominators.
  std::vector<std::optional<Rational>> d(r);
  for (std::size_t root = 0; root < r; ++root) {
    if (d[root]) continue;
    d[root] = Rational(1);
    std::vector<std::size_t> stack{root}, component{root};
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < r; ++j) {
        if (j == i || a[i][j] == 0) continue;
        const Rational dj = *d[i] * ratio(a[i][j], a[j][i]);
        if (!d[j]) {
          d[j] = dj;
          stack.push_back(j);
          component.push_back(j);
        } else if (*d[j] != dj) {
          throw DomainError("not_symmetrizable", "Cartan matrix admits no symmetrizer");
        }
      }
    }
    mpz_class lcm_den = 1;
    for (std::size_t i : component) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d[i]->get_den_mpz_t());
    mpz_class g = 0;
    for (std::size_t i : component) {
      d[i] = *d[i] * lcm_den;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d[i]->get_num_mpz_t());
    }
    for (std::size_t i : component) d[i] = *d[i] / g;
  }
  std::vector<int> out;
  for (const auto& v : d) out.push_back(static_cast<int>(to_integer(*v)));
  return out;
}

}  // namespace

CartanMatrix CartanMatrix::from_entries(std::vector<std::vector<int>> entries) {
  const std::size_t r = entries.size();
  if (r == 0) throw DomainError("not_gcm", "Cartan matrix must have positive rank");
  for (const auto& row : entries) {
    if (row.size() != r) throw DomainError("not_gcm", "Cartan matrix must be square");
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (entries[i][i] != 2) throw DomainError("not_gcm", "diagonal entries must equal 2");
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      if (entries[i][j] > 0) throw DomainError("not_gcm", "off-diagonal entries must be non-positive");
      if ((entries[i][j] == 0) != (entries[j][i] == 0)) {
        throw DomainError("not_gcm", "a_ij = 0 must imply a_ji = 0");
      }
    }
  }
  RationalMatrix m(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) m(i, j) = entries[i][j];
  if (determinant(m) == 0) {
    throw DomainError("not_full_rank", "only Cartan matrices of full rank are supported");
  }
  CartanMatrix out;
  out.symmetrizer_ = minimal_symmetrizer(entries);
  out.entries_ = std::move(entries);
  return out;
}

CartanMatrix CartanMatrix::finite_type(char family, int rank) {
  family = static_cast<char>(std::toupper(static_cast<unsigned char>(family)));
  const auto bad = [&] {
    return DomainError("invalid_cartan", std::string("unsupported Cartan type ") + family + std::to_string(rank));
  };
  if (rank < 1) throw bad();
  std::vector<std::vector<int>> a(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) {
    a[i][i] = 2;
    if (i + 1 < rank) a[i][i + 1] = a[i + 1][i] = -1;
  }
  switch (family) {
    case 'A':
      break;
    case 'B':
      if (rank < 2) throw bad();
      a[rank - 1][rank - 2] = -2;
      break;
    case 'C':
      if (rank < 2) throw bad();
      a[rank - 2][rank - 1] = -2;
      break;
    case 'D':
      if (rank < 4) throw bad();
      a[rank - 2][rank - 1] = a[rank - 1][rank - 2] = 0;
      a[rank - 3][rank - 1] = a[rank - 1][rank - 3] = -1;
      break;
    case 'G':
      if (rank != 2) throw bad();
      a[0][1] = -3;
      break;
    default:
      throw bad();
  }
  CartanMatrix out = from_entries(std::move(a));
  out.label_ = std::string(1, family) + std::to_string(rank);
  return out;
}

CartanMatrix CartanMatrix::parse(std::string_view name) {
  if (name.size() < 2) throw UsageError("invalid_cartan", "expected a Cartan type such as A4");
  int rank = 0;
  for (char ch : name.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(ch)) || rank > 1000) {
      throw UsageError("invalid_cartan", "expected a Cartan type such as A4, got " + std::string(name));
    }
    rank = rank * 10 + (ch - '0');
  }
  return finite_type(name.front(), rank);
}

bool CartanMatrix::is_type_a() const { return *this == finite_type('A', rank()); }

std::vector<long> reflect_root(const CartanMatrix& a, int i, std::vector<long> beta) {
  long pairing = 0;
  for (int k = 1; k <= a.rank(); ++k) pairing += beta[k - 1] * a(i, k);
  beta[i - 1] -= pairing;
  return beta;
}

void check_letters(const CartanMatrix& a, const std::vector<int>& word) {
  for (int letter : word) {
    if (letter < 1 || letter > a.rank()) {
      throw DomainError("invalid_letter", "letter " + std::to_string(letter) + " outside 1.." + std::to_string(a.rank()));
    }
  }
}

bool check_reduced(const CartanMatrix& a, const std::vector<int>& word) {
  check_letters(a, word);
  for (std::size_t k = 0; k < word.size(); ++k) {
    std::vector<long> beta(a.rank(), 0);
    beta[word[k] - 1] = 1;
    for (std::size_t q = k; q-- > 0;) beta = reflect_root(a, word[q], std::move(beta));
    for (long c : beta) {
      if (c < 0) return false;
    }
  }
  return true;
}

std::vector<int> longest_word_type_a(int rank) {
  std::vector<int> word;
  for (int m = 1; m <= rank; ++m)
    for (int d = 1; d <= rank - m + 1; ++d) word.push_back(d);
  return word;
}

}  // namespace cluster_crystal
