#pragma once

#include <map>
#include <string>
#include <vector>

#include "cluster_crystal/expr.hpp"
#include "cluster_crystal/tori.hpp"

namespace cluster_crystal {

/// Which torus carries the geometric crystal: the cluster A-torus (through
/// the twist) or the cluster X-torus.
enum class Structure { A, X };

std::string to_string(Structure s);
Structure parse_structure(const std::string& text);

// X-side formulas on a fresh seed.  `x` holds one input expression per slot.
std::vector<Expr> x_action_formula(const Seed& seed, int j, const std::vector<Expr>& x, const Expr& c);
Expr x_gamma_formula(const Seed& seed, int j, const std::vector<Expr>& x);
Expr x_epsilon_formula(const Seed& seed, int j, const std::vector<Expr>& x);

/// A minor of B~ with rows and columns taken in the listed order.
struct BTildeMinor {
  std::vector<SeedIndex> rows;
  std::vector<SeedIndex> cols;
  long value = 1;
};

BTildeMinor b_tilde_minor(const Seed& seed, std::vector<SeedIndex> rows, std::vector<SeedIndex> cols);

/// Every minor the A-side action for letter j uses: for each k, the
/// c-exponent minor followed by the ratio-exponent minors for t = k+1..n.
std::vector<BTildeMinor> a_action_minors(const Seed& seed, int j);

// A-side formulas on a fresh seed: the twisted action computed through the
// ensemble map and the X-side action.
std::vector<Expr> a_action_formula(const Seed& seed, int j, const std::vector<Expr>& a, const Expr& c);
/// Type-A closed form on the word (1..r, 1..r-1, ..., 1).  Frozen
/// coordinates are taken from a_action_formula.
std::vector<Expr> a_action_type_a_formula(const Seed& seed, int j, const std::vector<Expr>& a, const Expr& c);
Expr a_gamma_formula(const Seed& seed, int j, const std::vector<Expr>& a);
Expr a_epsilon_formula(const Seed& seed, int j, const std::vector<Expr>& a);

/// Position of A_{m,d} (m-th cycle, d-th letter) in the type-A longest word.
SeedIndex type_a_position(int rank, int m, int d);

/// The compiled crystal data of one structure on one fresh seed.  Action
/// programs read the coordinates from slots 0..N-1 and c from slot N.
class CrystalFormulas {
 public:
  CrystalFormulas(Structure structure, SeedPtr fresh, bool type_a_closed_form = false);

  Structure structure() const { return structure_; }
  const SeedPtr& seed() const { return seed_; }
  const std::vector<int>& letters() const { return letters_; }
  bool has_letter(int j) const;
  std::size_t c_slot() const { return seed_->size(); }

  const std::vector<Expr>& action_exprs(int j) const { return entry(j).action; }
  const Expr& gamma_expr(int j) const { return entry(j).gamma; }
  const Expr& epsilon_expr(int j) const { return entry(j).epsilon; }
  const Program& action_program(int j) const { return entry(j).action_program; }
  const Program& gamma_program(int j) const { return entry(j).gamma_program; }
  const Program& epsilon_program(int j) const { return entry(j).epsilon_program; }

 private:
  struct Entry {
    std::vector<Expr> action;
    Expr gamma = Expr::one();
    Expr epsilon = Expr::one();
    Program action_program, gamma_program, epsilon_program;
  };
  const Entry& entry(int j) const;

  Structure structure_;
  SeedPtr seed_;
  std::vector<int> letters_;
  std::map<int, Entry> entries_;
};

/// Geometric crystal on the A- or X-torus of a fresh seed, evaluated over
/// exact rationals.
template <class Tag>
class GeometricCrystal {
 public:
  using PointType = Point<Tag, Rational>;

  explicit GeometricCrystal(SeedPtr fresh, bool type_a_closed_form = false)
      : formulas_(std::is_same_v<Tag, ATag> ? Structure::A : Structure::X, std::move(fresh), type_a_closed_form) {}

  const CrystalFormulas& formulas() const { return formulas_; }
  const SeedPtr& seed() const { return formulas_.seed(); }

  PointType act(int j, const Rational& c, const PointType& p) const;
  Rational gamma(int j, const PointType& p) const;
  Rational epsilon(int j, const PointType& p) const;
  Rational phi(int j, const PointType& p) const { return epsilon(j, p) * gamma(j, p); }

 private:
  void require_chart(const PointType& p) const;
  CrystalFormulas formulas_;
};

using XCrystal = GeometricCrystal<XTag>;
using ACrystal = GeometricCrystal<ATag>;

extern template class GeometricCrystal<XTag>;
extern template class GeometricCrystal<ATag>;

// One-shot spellings; they compile the formulas on every call.
XPoint act_ex(int j, const Rational& c, const XPoint& x);
Rational gamma_x(int j, const XPoint& x);
Rational epsilon_x(int j, const XPoint& x);
Rational phi_x(int j, const XPoint& x);
APoint act_ea(int j, const Rational& c, const APoint& a);
APoint act_ea_type_a(int j, const Rational& c, const APoint& a);
Rational gamma_a(int j, const APoint& a);
Rational epsilon_a(int j, const APoint& a);

}  // namespace cluster_crystal
