#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cluster_crystal/crystal.hpp"
#include "cluster_crystal/seed.hpp"
#include "cluster_crystal/tori.hpp"

namespace cluster_crystal::verify {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t trials = 0;
  std::string detail;  // first failure, or a short note
};

/// Deterministic source of sample data for the cross-checks.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  Rational positive();         // p/q with 1 <= p, q <= 9
  Rational nonzero();          // positive() with a random sign
  Rational crystal_parameter();  // one of 2, 1/3, 5/7
  APoint a_point(const SeedPtr& seed);
  XPoint x_point(const SeedPtr& seed);
  std::uint64_t next() { return rng_(); }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// A random reduced word of a finite-type Cartan matrix that uses every
/// letter: a prefix of a randomly grown reduced word of the longest element.
std::vector<int> random_reduced_word(const CartanMatrix& a, std::mt19937_64& rng);

/// One reduced word for every element of the symmetric group S_{rank+1}.
std::vector<std::vector<int>> weyl_group_words_type_a(int rank);

/// The 14 x 14 matrix B~ for SL_5 and the word (1,2,3,4,1,2,3,1,2,1), written out by hand,
/// rows and columns in the order -4..-1, 1..10.
const std::vector<std::vector<long>>& sl5_expected_b_tilde();

CheckResult check_sl5_b_tilde();
/// embed_x(e_j^c X) is proportional to e_j^c(embed_x(X)).
CheckResult check_x_action_oracle(const SeedPtr& seed, int trials, std::uint64_t rng_seed);
/// The A-side action equals minors(twist^{-1}(e_j^c(twist(g)))) at A = minors(g).
CheckResult check_a_action_oracle(const SeedPtr& seed, int trials, std::uint64_t rng_seed);
/// Type-A closed form against the general A-side formula on the longest word.
CheckResult check_type_a_closed_form(int rank, int trials, std::uint64_t rng_seed);
/// The worked SL_5 formulas for j = 1.
CheckResult check_sl5_worked_formulas(int trials, std::uint64_t rng_seed);
/// Ensemble map intertwines the actions and pulls back gamma and epsilon.
CheckResult check_ensemble_diagrams(const SeedPtr& seed, int trials, std::uint64_t rng_seed);
/// gamma covariance, epsilon scaling and invariance, and e^{c1} e^{c2} = e^{c1 c2}.
CheckResult check_geometric_axioms(Structure structure, const SeedPtr& seed, int trials, std::uint64_t rng_seed);
/// e_i(t) = e_i'(t) for the two reduced words of s1 s2 s1, on both tori and on matrices.
CheckResult check_verma_a2(int trials, std::uint64_t rng_seed);
/// twist_inverse(twist(g)) = g and Delta_{w,e}(twist(g)) = Delta_{u,w}(g) for every w.
CheckResult check_twist(const SeedPtr& seed, int trials, std::uint64_t rng_seed);
/// Pullback of the minors D_{J,{1..s}} under e_j^c.
CheckResult check_minor_pullback(int rank, int trials, std::uint64_t rng_seed);
/// act_e_on_tcoords against act_e_matrix, the epsilon formula, the X-action
/// in cell coordinates, and the X <-> t round trips.
CheckResult check_tcoords(const SeedPtr& seed, int trials, std::uint64_t rng_seed);
/// P_{s,d} = t_{d,s+d}/t_{d+1,s+d} and the minor expression of the closed form.
CheckResult check_closed_form_minors(int rank, int trials, std::uint64_t rng_seed);

/// Every check that applies to the seed's Cartan matrix and word.
std::vector<CheckResult> oracle_verify(const SeedPtr& seed, int trials, std::uint64_t rng_seed);

}  // namespace cluster_crystal::verify
