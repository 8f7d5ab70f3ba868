#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cluster_crystal/crystal.hpp"
#include "cluster_crystal/tori.hpp"

namespace cluster_crystal {

/// Tropical mutation of a Z^T point through the same DAGs as the classical map.
TropPoint trop_mutate(Structure structure, const MutationMap& map, const TropPoint& b);
TropPoint trop_mutate(Structure structure, SeedIndex k, const TropPoint& b);

/// A chart reached from a fresh seed by an explicit mutation sequence.  It
/// owns the compiled mutation maps along the path, so moving points between
/// the fresh chart and this one is cheap.
class Chart {
 public:
  Chart(SeedPtr fresh, std::vector<SeedIndex> mutations);

  const SeedPtr& fresh() const { return fresh_; }
  const SeedPtr& seed() const { return seeds_.back(); }
  const std::vector<SeedIndex>& mutations() const { return mutations_; }

  TropPoint from_fresh(Structure structure, const TropPoint& b) const;
  TropPoint to_fresh(Structure structure, const TropPoint& b) const;
  APoint from_fresh(const APoint& p) const;
  APoint to_fresh(const APoint& p) const;
  XPoint from_fresh(const XPoint& p) const;
  XPoint to_fresh(const XPoint& p) const;

 private:
  SeedPtr fresh_;
  std::vector<SeedIndex> mutations_;
  std::vector<SeedPtr> seeds_;             // seeds_[0] = fresh
  std::vector<MutationMap> forward_;       // seeds_[t] -> seeds_[t+1]
  std::vector<MutationMap> backward_;      // seeds_[t+1] -> seeds_[t]
};

/// Every mutation sequence of length <= depth over unfrozen indices with no
/// immediate repetition (which would undo the previous step).
std::vector<std::vector<SeedIndex>> mutation_sequences(const Seed& fresh, int depth);

/// The Kashiwara data of one structure on one chart.  On the fresh chart the
/// closed-form DAGs are evaluated tropically; on any other chart the
/// operators are transported by tropical mutation.
class TropicalCrystal {
 public:
  TropicalCrystal(Structure structure, SeedPtr fresh, std::vector<SeedIndex> chart = {});
  TropicalCrystal(std::shared_ptr<const CrystalFormulas> formulas, std::vector<SeedIndex> chart = {});

  Structure structure() const { return formulas_->structure(); }
  const CartanMatrix& cartan() const { return formulas_->seed()->cartan(); }
  const std::vector<int>& letters() const { return formulas_->letters(); }
  const Chart& chart() const { return chart_; }
  const SeedPtr& seed() const { return chart_.seed(); }

  /// e_j^n; e_j is n = 1 and f_j is n = -1.
  TropPoint act(int j, std::int64_t n, const TropPoint& b) const;
  TropPoint e(int j, const TropPoint& b) const { return act(j, 1, b); }
  TropPoint f(int j, const TropPoint& b) const { return act(j, -1, b); }
  std::int64_t wt(int j, const TropPoint& b) const;
  std::int64_t epsilon(int j, const TropPoint& b) const;
  std::int64_t phi(int j, const TropPoint& b) const { return epsilon(j, b) + wt(j, b); }

 private:
  TropPoint to_fresh(const TropPoint& b) const;
  std::shared_ptr<const CrystalFormulas> formulas_;
  Chart chart_;
};

struct WtEpsPhi {
  std::int64_t wt;
  std::int64_t epsilon;
  std::int64_t phi;
};

// One-shot operations on the fresh chart of the point's seed
// (or, for a mutated seed, transported along its history).
TropPoint trop_act(Structure structure, int j, std::int64_t n, const TropPoint& b);
WtEpsPhi trop_wt_eps_phi(Structure structure, int j, const TropPoint& b);

/// Rebuilds the fresh seed of any seed by discarding its mutation history.
SeedPtr fresh_seed_of(const Seed& seed);

struct AxiomTally {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::optional<std::string> first_counterexample;
};

struct CrystalReport {
  std::vector<AxiomTally> axioms;
  std::size_t points = 0;
  bool passed() const;
  std::string summary() const;
};

/// Checks the crystal axioms at every sample point for every pair of letters.
/// Axiom (2) is checked as wt_j(e_i b) = wt_j(b) + a_ij, the orientation the
/// geometric covariance gamma_j(e_i^c x) = c^{a_ij} gamma_j(x) tropicalizes to
/// (for symmetric Cartan matrices both orientations agree).
CrystalReport crystal_check(const TropicalCrystal& crystal, const std::vector<TropPoint>& sample,
                            const std::vector<int>& letters);

/// Checks that the mutation path of `target` intertwines the Kashiwara data
/// of `source` (a crystal on the fresh chart or on a prefix chart) with that
/// of `target` at every sample point of the source chart.
CrystalReport glued_check(const TropicalCrystal& source, const TropicalCrystal& target,
                          const std::vector<TropPoint>& sample, const std::vector<int>& letters);

/// All points of [-radius, radius]^|I| on the crystal's chart.  Throws
/// DomainError("too_large") above `limit` points.
std::vector<TropPoint> box_points(const SeedPtr& seed, std::int64_t radius, std::size_t limit = 2000000);

/// `count` uniform random points of the box, deterministic under rng_seed.
std::vector<TropPoint> random_box_points(const SeedPtr& seed, std::int64_t radius, std::size_t count,
                                         std::uint64_t rng_seed);

/// Graphviz digraph: vertices are the points of the box, with an edge
/// b -> f_i(b) labelled i whenever the target stays in the box.
std::string emit_dot(const TropicalCrystal& crystal, std::int64_t radius, const std::vector<int>& letters);

}  // namespace cluster_crystal
