#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cluster_crystal/matrix.hpp"
#include "cluster_crystal/tori.hpp"

namespace cluster_crystal::typea {

// Matrix realization of SL_{r+1} (GL representatives for PGL).  Letters
// and matrix indices are 1-based, matching the formulas.

RationalMatrix y_matrix(std::size_t size, int i, const Rational& t);  // I + t E_{i+1,i}
RationalMatrix x_matrix(std::size_t size, int i, const Rational& t);  // I + t E_{i,i+1}
RationalMatrix coweight_matrix(std::size_t size, int i, const Rational& t);  // diag(t x i, 1, ...)
RationalMatrix coroot_matrix(std::size_t size, int i, const Rational& t);    // t at i, 1/t at i+1

/// s_bar_{i_1} ... s_bar_{i_n} with s_bar_i = x_i(-1) y_i(1) x_i(-1).
RationalMatrix weyl_lift(std::size_t size, const std::vector<int>& word);
RationalMatrix weyl_lift_inverse(std::size_t size, const std::vector<int>& word);

/// Leading i x i minor of w_left_bar^{-1} g w_right_bar.
Rational generalized_minor(const std::vector<int>& w_left, const std::vector<int>& w_right, int i,
                           const RationalMatrix& g);

struct GaussDecomposition {
  RationalMatrix lower;     // unitriangular
  RationalMatrix diagonal;
  RationalMatrix upper;     // unitriangular
};

/// LDU decomposition from leading minors; DomainError("outside_domain") when
/// a leading principal minor vanishes.
GaussDecomposition gauss_decompose(const RationalMatrix& g);

/// Product of coweight factors and y_i(1) along the word.
RationalMatrix embed_x(const XPoint& x);

/// Coordinates of diag(h) y_{i_1}(t_1) a_{i_1}(1/t_1) ... y_{i_n}(t_n) a_{i_n}(1/t_n),
/// where a_i is the simple coroot.
struct TCoords {
  std::vector<Rational> h;  // r+1 diagonal entries
  std::vector<Rational> t;  // t_1..t_n at positions 0..n-1
  friend bool operator==(const TCoords&, const TCoords&) = default;
};

RationalMatrix tcoords_matrix(const std::vector<int>& word, const TCoords& tc);

struct CellSample {
  RationalMatrix matrix;  // determinant 1
  TCoords coords;
};

/// Deterministic random element of the cell: random positive t_k and a
/// random positive diagonal of determinant 1.
CellSample random_cell_matrix(int rank, const std::vector<int>& word, std::uint64_t rng_seed);

struct CrystalData {
  Rational epsilon;
  Rational gamma;
  Rational phi;
};

CrystalData eps_gamma_phi_matrix(int j, const RationalMatrix& g);

/// x_j((c-1) phi_j(g)) g x_j((1/c - 1) eps_j(g)).
RationalMatrix act_e_matrix(int j, const Rational& c, const RationalMatrix& g);

/// Transpose of [u_bar^{-1} g]_0 [u_bar^{-1} g]_+.
RationalMatrix twist(const std::vector<int>& word, const RationalMatrix& g);

/// Inverse of twist: with K = h^T, finds the lower unitriangular L inside
/// N- and u_bar^{-1} N u_bar such that u_bar L K is lower triangular.
RationalMatrix twist_inverse(const std::vector<int>& word, const RationalMatrix& h);

/// A_k = generalized minor of (prefix of length k, e) at the letter of k.
APoint minors_a(const SeedPtr& seed, const RationalMatrix& g);

/// The scalar lambda with a = lambda b, if any.
std::optional<Rational> proportionality(const RationalMatrix& a, const RationalMatrix& b);

// Cell coordinates for a general Cartan matrix (the seed supplies the word).
TCoords act_e_on_tcoords(const Seed& seed, int j, const Rational& c, const TCoords& tc);
Rational epsilon_tcoords(const Seed& seed, int j, const TCoords& tc);

/// Positive-index X-coordinates to cell coordinates t_1..t_n and back.
std::vector<Rational> x_to_tcoords(const Seed& seed, const XPoint& x);
std::vector<Rational> tcoords_to_x(const Seed& seed, const std::vector<Rational>& t);

}  // namespace cluster_crystal::typea
