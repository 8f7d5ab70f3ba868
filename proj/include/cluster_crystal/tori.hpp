#pragma once

#include <cstdint>
#include <map>
#include <type_traits>
#include <utility>
#include <vector>

#include "cluster_crystal/expr.hpp"
#include "cluster_crystal/seed.hpp"
#include "cluster_crystal/semifield.hpp"

namespace cluster_crystal {

struct ATag {};
struct XTag {};
struct TropTag {};

/// Coordinates on a torus chart, stored in the seed's slot order.
template <class Tag, class V>
class Point {
 public:
  using value_type = V;

  Point(SeedPtr seed, std::vector<V> coords) : seed_(std::move(seed)), coords_(std::move(coords)) {
    if (!seed_) throw DomainError("invalid_argument", "point without a seed");
    if (coords_.size() != seed_->size()) {
      throw DomainError("shape_mismatch", "point has " + std::to_string(coords_.size()) + " coordinates, seed has " +
                                              std::to_string(seed_->size()) + " indices");
    }
    if constexpr (std::is_same_v<V, Rational>) {
      for (const V& v : coords_) {
        if (v == 0) throw DomainError("chart_boundary", "torus coordinates must be nonzero");
      }
    }
  }

  /// Builds a point from an index-keyed map that must bind every index.
  static Point from_map(SeedPtr seed, const std::map<SeedIndex, V>& values) {
    std::vector<V> coords;
    for (SeedIndex k : seed->indices()) {
      auto it = values.find(k);
      if (it == values.end()) throw DomainError("missing_binding", "no coordinate for index " + std::to_string(k));
      coords.push_back(it->second);
    }
    if (values.size() != coords.size()) throw DomainError("invalid_index", "coordinate for an index not in the seed");
    return Point(std::move(seed), std::move(coords));
  }

  const Seed& seed() const { return *seed_; }
  const SeedPtr& seed_ptr() const { return seed_; }
  const V& operator[](SeedIndex k) const { return coords_[seed_->slot(k)]; }
  const std::vector<V>& coords() const { return coords_; }

  friend bool operator==(const Point& a, const Point& b) {
    return (a.seed_ == b.seed_ || *a.seed_ == *b.seed_) && a.coords_ == b.coords_;
  }

 private:
  SeedPtr seed_;
  std::vector<V> coords_;
};

using APoint = Point<ATag, Rational>;
using XPoint = Point<XTag, Rational>;
using TropPoint = Point<TropTag, std::int64_t>;

/// Expressions in the variables v_s (s = slot of the source seed) giving the
/// coordinates of the image point, slot by slot.
std::vector<Expr> a_mutation_exprs(const Seed& seed, SeedIndex k);
std::vector<Expr> x_mutation_exprs(const Seed& seed, SeedIndex k);
std::vector<Expr> ensemble_exprs(const Seed& seed);

/// Generic forms that take arbitrary input expressions per slot.
std::vector<Expr> a_mutation_formula(const Seed& seed, SeedIndex k, const std::vector<Expr>& a);
std::vector<Expr> x_mutation_formula(const Seed& seed, SeedIndex k, const std::vector<Expr>& x);
std::vector<Expr> ensemble_formula(const Seed& seed, const std::vector<Expr>& a);

std::vector<Expr> slot_variables(std::size_t count);

/// Evaluates a compiled map classically; vanishing denominators or outputs
/// are reported as DomainError("chart_boundary").
std::vector<Rational> run_on_torus(const Program& program, const std::vector<Rational>& inputs);

/// Mutation at k between a seed and its mutant, compiled once for both the
/// A- and X-sides.
class MutationMap {
 public:
  MutationMap(SeedPtr source, SeedIndex k);

  const SeedPtr& source() const { return source_; }
  const SeedPtr& target() const { return target_; }
  SeedIndex index() const { return k_; }
  const std::vector<Expr>& a_exprs() const { return a_exprs_; }
  const std::vector<Expr>& x_exprs() const { return x_exprs_; }
  const Program& a_program() const { return a_program_; }
  const Program& x_program() const { return x_program_; }

  APoint apply(const APoint& p) const;
  XPoint apply(const XPoint& p) const;

 private:
  SeedPtr source_;
  SeedPtr target_;
  SeedIndex k_;
  std::vector<Expr> a_exprs_, x_exprs_;
  Program a_program_, x_program_;
};

APoint mutate_a_point(const APoint& a, SeedIndex k);
XPoint mutate_x_point(const XPoint& x, SeedIndex k);
XPoint ensemble_point(const APoint& a);

}  // namespace cluster_crystal
