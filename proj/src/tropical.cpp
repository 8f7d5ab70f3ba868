#include "cluster_crystal/tropical.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <thread>

#include "cluster_crystal/semifield.hpp"

namespace cluster_crystal {

TropPoint trop_mutate(Structure structure, const MutationMap& map, const TropPoint& b) {
  const Program& program = structure == Structure::A ? map.a_program() : map.x_program();
  return TropPoint(map.target(), program.run<TropicalIntegers>(b.coords()));
}

TropPoint trop_mutate(Structure structure, SeedIndex k, const TropPoint& b) {
  return trop_mutate(structure, MutationMap(b.seed_ptr(), k), b);
}

Chart::Chart(SeedPtr fresh, std::vector<SeedIndex> mutations) : fresh_(std::move(fresh)), mutations_(std::move(mutations)) {
  if (!fresh_->is_fresh()) throw DomainError("not_fresh", "charts are rooted at a fresh seed");
  seeds_.push_back(fresh_);
  for (SeedIndex k : mutations_) {
    forward_.emplace_back(seeds_.back(), k);
    seeds_.push_back(forward_.back().target());
    backward_.emplace_back(seeds_.back(), k);
  }
}

namespace {

template <class P, class Apply>
P walk_forward(const std::vector<MutationMap>& maps, P p, Apply apply) {
  for (const MutationMap& m : maps) p = apply(m, p);
  return p;
}

// Mutating back at k lands on a seed with the same B whose history ends in
// (k, k); each step is re-seated on the stored seed of the chart so the result
// compares equal to seeds_[t].
template <class P, class Apply>
P walk_backward(const std::vector<MutationMap>& maps, const std::vector<SeedPtr>& seeds, P p, Apply apply) {
  for (std::size_t t = maps.size(); t-- > 0;) p = P(seeds[t], apply(maps[t], p).coords());
  return p;
}

}  // namespace

TropPoint Chart::from_fresh(Structure s, const TropPoint& b) const {
  return walk_forward(forward_, b, [s](const MutationMap& m, const TropPoint& p) { return trop_mutate(s, m, p); });
}
TropPoint Chart::to_fresh(Structure s, const TropPoint& b) const {
  return walk_backward(backward_, seeds_, b, [s](const MutationMap& m, const TropPoint& p) { return trop_mutate(s, m, p); });
}
APoint Chart::from_fresh(const APoint& p) const {
  return walk_forward(forward_, p, [](const MutationMap& m, const APoint& q) { return m.apply(q); });
}
APoint Chart::to_fresh(const APoint& p) const {
  return walk_backward(backward_, seeds_, p, [](const MutationMap& m, const APoint& q) { return m.apply(q); });
}
XPoint Chart::from_fresh(const XPoint& p) const {
  return walk_forward(forward_, p, [](const MutationMap& m, const XPoint& q) { return m.apply(q); });
}
XPoint Chart::to_fresh(const XPoint& p) const {
  return walk_backward(backward_, seeds_, p, [](const MutationMap& m, const XPoint& q) { return m.apply(q); });
}

std::vector<std::vector<SeedIndex>> mutation_sequences(const Seed& fresh, int depth) {
  std::vector<std::vector<SeedIndex>> out{{}};
  const std::vector<SeedIndex> movable = fresh.unfrozen();
  std::size_t begin = 0;
  for (int level = 0; level < depth; ++level) {
    const std::size_t end = out.size();
    for (std::size_t q = begin; q < end; ++q) {
      for (SeedIndex k : movable) {
        if (!out[q].empty() && out[q].back() == k) continue;
        std::vector<SeedIndex> next = out[q];
        next.push_back(k);
        out.push_back(std::move(next));
      }
    }
    begin = end;
  }
  return out;
}

TropicalCrystal::TropicalCrystal(Structure structure, SeedPtr fresh, std::vector<SeedIndex> chart)
    : TropicalCrystal(std::make_shared<const CrystalFormulas>(structure, std::move(fresh)), std::move(chart)) {}

TropicalCrystal::TropicalCrystal(std::shared_ptr<const CrystalFormulas> formulas, std::vector<SeedIndex> chart)
    : formulas_(std::move(formulas)), chart_(formulas_->seed(), std::move(chart)) {}

TropPoint TropicalCrystal::to_fresh(const TropPoint& b) const {
  if (b.seed_ptr() != chart_.seed() && !(b.seed() == *chart_.seed())) {
    throw DomainError("seed_mismatch", "point does not live on this crystal's chart");
  }
  return chart_.to_fresh(structure(), b);
}

TropPoint TropicalCrystal::act(int j, std::int64_t n, const TropPoint& b) const {
  std::vector<std::int64_t> inputs = to_fresh(b).coords();
  inputs.push_back(n);
  TropPoint image(chart_.fresh(), formulas_->action_program(j).run<TropicalIntegers>(inputs));
  return chart_.from_fresh(structure(), image);
}

std::int64_t TropicalCrystal::wt(int j, const TropPoint& b) const {
  return formulas_->gamma_program(j).run<TropicalIntegers>(to_fresh(b).coords()).front();
}

std::int64_t TropicalCrystal::epsilon(int j, const TropPoint& b) const {
  return formulas_->epsilon_program(j).run<TropicalIntegers>(to_fresh(b).coords()).front();
}

SeedPtr fresh_seed_of(const Seed& seed) { return make_seed(seed.cartan(), seed.word()); }

namespace {
TropicalCrystal crystal_for_point(Structure structure, const TropPoint& b) {
  return TropicalCrystal(structure, fresh_seed_of(b.seed()), b.seed().history());
}
}  // namespace

TropPoint trop_act(Structure structure, int j, std::int64_t n, const TropPoint& b) {
  const TropicalCrystal crystal = crystal_for_point(structure, b);
  return crystal.act(j, n, TropPoint(crystal.seed(), b.coords()));
}

WtEpsPhi trop_wt_eps_phi(Structure structure, int j, const TropPoint& b) {
  const TropicalCrystal crystal = crystal_for_point(structure, b);
  const TropPoint local(crystal.seed(), b.coords());
  const std::int64_t wt = crystal.wt(j, local), eps = crystal.epsilon(j, local);
  return WtEpsPhi{wt, eps, wt + eps};
}

bool CrystalReport::passed() const {
  return std::all_of(axioms.begin(), axioms.end(), [](const AxiomTally& t) { return t.failed == 0; });
}

std::string CrystalReport::summary() const {
  std::ostringstream os;
  os << points << " points";
  for (const AxiomTally& t : axioms) {
    os << "; " << t.name << ": " << (t.checked - t.failed) << '/' << t.checked;
    if (t.first_counterexample) os << " (first failure " << *t.first_counterexample << ')';
  }
  return os.str();
}

namespace {

std::string describe(const TropPoint& b) {
  std::ostringstream os;
  os << '(';
  for (std::size_t s = 0; s < b.coords().size(); ++s) os << (s ? ", " : "") << b.coords()[s];
  os << ')';
  return os.str();
}

class Tally {
 public:
  explicit Tally(std::vector<std::string> names) {
    for (auto& n : names) report_.axioms.push_back(AxiomTally{std::move(n), 0, 0, std::nullopt});
  }
  void record(std::size_t axiom, bool ok, const std::function<std::string()>& what) {
    AxiomTally& t = report_.axioms[axiom];
    ++t.checked;
    if (!ok) {
      ++t.failed;
      if (!t.first_counterexample) t.first_counterexample = what();
    }
  }
  void merge(const Tally& other) {
    report_.points += other.report_.points;
    for (std::size_t a = 0; a < report_.axioms.size(); ++a) {
      AxiomTally& t = report_.axioms[a];
      const AxiomTally& o = other.report_.axioms[a];
      t.checked += o.checked;
      t.failed += o.failed;
      if (!t.first_counterexample && o.first_counterexample) t.first_counterexample = o.first_counterexample;
    }
  }
  CrystalReport& report() { return report_; }

 private:
  CrystalReport report_;
};

// Splits [0, count) into contiguous chunks, runs `body` on each chunk in its
// own thread with a private tally, and merges the tallies in chunk order so
// the report is deterministic.
Tally parallel_tally(std::size_t count, const std::vector<std::string>& names,
                     const std::function<void(std::size_t, std::size_t, Tally&)>& body) {
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(hw, std::max<std::size_t>(1, count / 64));
  std::vector<Tally> tallies(workers, Tally(names));
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = count * w / workers, hi = count * (w + 1) / workers;
    threads.emplace_back([&, w, lo, hi] {
      try {
        body(lo, hi, tallies[w]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  Tally total(names);
  for (const Tally& t : tallies) total.merge(t);
  return total;
}

}  // namespace

CrystalReport crystal_check(const TropicalCrystal& crystal, const std::vector<TropPoint>& sample,
                            const std::vector<int>& letters) {
  const std::vector<std::string> names{"(1) phi = eps + wt",
                                       "(2) weight shift",
                                       "(3) e raises phi, lowers eps",
                                       "(4) f lowers phi, raises eps",
                                       "(5) f b = b' iff b = e b'",
                                       "(6) phi never -inf"};
  const CartanMatrix& a = crystal.cartan();
  Tally total = parallel_tally(sample.size(), names, [&](std::size_t lo, std::size_t hi, Tally& tally) {
    for (std::size_t q = lo; q < hi; ++q) {
      const TropPoint& b = sample[q];
      ++tally.report().points;
      for (int i : letters) {
        const auto where = [&](const char* extra) {
          return [&b, i, extra] { return describe(b) + " letter " + std::to_string(i) + extra; };
        };
        const TropPoint eb = crystal.e(i, b);
        const TropPoint fb = crystal.f(i, b);
        const std::int64_t eps = crystal.epsilon(i, b), wt = crystal.wt(i, b), phi = crystal.phi(i, b);
        tally.record(0, phi == eps + wt, where(""));
        for (int j : letters) {
          const std::int64_t w = crystal.wt(j, b);
          tally.record(1, crystal.wt(j, eb) == w + a(i, j), where(" (e)"));
          tally.record(1, crystal.wt(j, fb) == w - a(i, j), where(" (f)"));
        }
        tally.record(2, crystal.epsilon(i, eb) == eps - 1 && crystal.phi(i, eb) == phi + 1, where(""));
        tally.record(3, crystal.epsilon(i, fb) == eps + 1 && crystal.phi(i, fb) == phi - 1, where(""));
        tally.record(4, crystal.f(i, eb) == b && crystal.e(i, fb) == b, where(""));
        // Integer points always have finite phi, so e and f are defined
        // everywhere; the check records that both returned points.
        tally.record(5, eb.coords().size() == b.coords().size() && fb.coords().size() == b.coords().size(), where(""));
      }
    }
  });
  return std::move(total.report());
}

CrystalReport glued_check(const TropicalCrystal& source, const TropicalCrystal& target,
                          const std::vector<TropPoint>& sample, const std::vector<int>& letters) {
  const auto& prefix = source.chart().mutations();
  const auto& full = target.chart().mutations();
  if (source.chart().fresh() != target.chart().fresh() && !(*source.chart().fresh() == *target.chart().fresh())) {
    throw DomainError("seed_mismatch", "glued crystals must share a fresh seed");
  }
  if (full.size() < prefix.size() || !std::equal(prefix.begin(), prefix.end(), full.begin())) {
    throw DomainError("invalid_argument", "target chart must extend the source chart's mutation path");
  }
  // The identification is the tropical mutation along the remaining path.
  std::vector<MutationMap> path;
  SeedPtr at = source.seed();
  for (std::size_t t = prefix.size(); t < full.size(); ++t) {
    path.emplace_back(at, full[t]);
    at = path.back().target();
  }
  std::vector<MutationMap> reverse_path;
  for (auto it = path.rbegin(); it != path.rend(); ++it) reverse_path.emplace_back(it->target(), it->index());
  const Structure s = source.structure();
  const auto identify = [&](TropPoint b) {
    for (const MutationMap& m : path) b = trop_mutate(s, m, b);
    return TropPoint(target.seed(), b.coords());
  };
  const std::vector<std::string> names{"m(e b) = e'(m b)", "m(f b) = f'(m b)", "wt, eps, phi preserved",
                                       "m is injective on the sample (round trip)"};
  Tally total = parallel_tally(sample.size(), names, [&](std::size_t lo, std::size_t hi, Tally& tally) {
    for (std::size_t q = lo; q < hi; ++q) {
      const TropPoint& b = sample[q];
      ++tally.report().points;
      const TropPoint mb = identify(b);
      TropPoint back = mb;
      for (const MutationMap& m : reverse_path) back = trop_mutate(s, m, back);
      tally.record(3, back.coords() == b.coords(), [&] { return describe(b); });
      for (int i : letters) {
        const auto where = [&b, i] { return describe(b) + " letter " + std::to_string(i); };
        tally.record(0, identify(source.e(i, b)) == target.e(i, mb), where);
        tally.record(1, identify(source.f(i, b)) == target.f(i, mb), where);
        tally.record(2,
                     source.wt(i, b) == target.wt(i, mb) && source.epsilon(i, b) == target.epsilon(i, mb) &&
                         source.phi(i, b) == target.phi(i, mb),
                     where);
      }
    }
  });
  return std::move(total.report());
}

std::vector<TropPoint> box_points(const SeedPtr& seed, std::int64_t radius, std::size_t limit) {
  if (radius < 0) throw DomainError("invalid_argument", "box radius must be non-negative");
  const std::size_t dim = seed->size();
  const std::size_t side = static_cast<std::size_t>(2 * radius + 1);
  std::size_t total = 1;
  for (std::size_t d = 0; d < dim; ++d) {
    if (total > limit / side) throw DomainError("too_large", "box has more than " + std::to_string(limit) + " points");
    total *= side;
  }
  std::vector<TropPoint> out;
  out.reserve(total);
  std::vector<std::int64_t> coords(dim, -radius);
  for (std::size_t q = 0; q < total; ++q) {
    out.emplace_back(seed, coords);
    for (std::size_t d = dim; d-- > 0;) {
      if (coords[d] < radius) {
        ++coords[d];
        break;
      }
      coords[d] = -radius;
    }
  }
  return out;
}

std::vector<TropPoint> random_box_points(const SeedPtr& seed, std::int64_t radius, std::size_t count,
                                         std::uint64_t rng_seed) {
  std::mt19937_64 rng(rng_seed);
  const auto side = static_cast<std::uint64_t>(2 * radius + 1);
  std::vector<TropPoint> out;
  out.reserve(count);
  for (std::size_t q = 0; q < count; ++q) {
    std::vector<std::int64_t> coords;
    for (std::size_t d = 0; d < seed->size(); ++d) coords.push_back(static_cast<std::int64_t>(rng() % side) - radius);
    out.emplace_back(seed, std::move(coords));
  }
  return out;
}

std::string emit_dot(const TropicalCrystal& crystal, std::int64_t radius, const std::vector<int>& letters) {
  const std::vector<TropPoint> points = box_points(crystal.seed(), radius);
  const auto inside = [radius](const TropPoint& b) {
    return std::all_of(b.coords().begin(), b.coords().end(), [radius](std::int64_t v) { return v >= -radius && v <= radius; });
  };
  std::ostringstream os;
  os << "digraph crystal {\n";
  for (const TropPoint& b : points) os << "  \"" << describe(b) << "\";\n";
  for (const TropPoint& b : points) {
    for (int i : letters) {
      const TropPoint fb = crystal.f(i, b);
      if (inside(fb)) os << "  \"" << describe(b) << "\" -> \"" << describe(fb) << "\" [label=\"" << i << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace cluster_crystal
