// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// Every comparison is exact; the sampling is deterministic.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cluster_crystal/tropical.hpp"
#include "cluster_crystal/verification.hpp"

using namespace cluster_crystal;
using namespace cluster_crystal::verify;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

// Folds a list of check results into one outcome, keeping the first failure.
class Collector {
 public:
  void add(const CheckResult& r) {
    ++checks_;
    trials_ += r.trials;
    if (!r.passed && out_.passed) {
      out_.passed = false;
      out_.detail = r.name + ": " + r.detail;
    }
  }
  void add(const CrystalReport& r, const std::string& context) {
    ++checks_;
    for (const AxiomTally& t : r.axioms) trials_ += t.checked;
    if (!r.passed() && out_.passed) out_ = {false, context + ": " + r.summary()};
  }
  Outcome finish(const std::string& what) {
    if (out_.passed) out_.detail = what + "; " + std::to_string(checks_) + " checks, " + std::to_string(trials_) + " assertions";
    return out_;
  }

 private:
  Outcome out_;
  std::size_t checks_ = 0;
  std::size_t trials_ = 0;
};

SeedPtr type_a(int rank, std::vector<int> word) { return make_seed(CartanMatrix::finite_type('A', rank), std::move(word)); }

SeedPtr longest(int rank) { return type_a(rank, longest_word_type_a(rank)); }

// The longest words for r = 1..max_rank followed by `random_per_rank` random
// reduced words for each r = 2..max_rank.
std::vector<SeedPtr> word_family(int max_rank, int random_per_rank, std::uint64_t rng_seed) {
  std::vector<SeedPtr> out;
  for (int r = 1; r <= max_rank; ++r) out.push_back(longest(r));
  std::mt19937_64 rng(rng_seed);
  for (int r = 2; r <= max_rank; ++r) {
    const CartanMatrix a = CartanMatrix::finite_type('A', r);
    for (int t = 0; t < random_per_rank; ++t) out.push_back(make_seed(a, random_reduced_word(a, rng)));
  }
  return out;
}

Outcome criterion_1() {
  Collector c;
  c.add(check_sl5_b_tilde());
  return c.finish("196 entries of B~ for A4");
}

Outcome criterion_2() {
  Collector c;
  std::uint64_t s = 200;
  std::vector<SeedPtr> seeds;
  for (int r = 1; r <= 4; ++r) seeds.push_back(longest(r));
  std::mt19937_64 rng(21);
  for (int t = 0; t < 20; ++t) {
    const int r = 2 + t % 2;
    const CartanMatrix a = CartanMatrix::finite_type('A', r);
    seeds.push_back(make_seed(a, random_reduced_word(a, rng)));
  }
  for (const SeedPtr& seed : seeds) c.add(check_x_action_oracle(seed, 50, ++s));
  return c.finish(std::to_string(seeds.size()) + " words x 50 points");
}

Outcome criterion_3() {
  Collector c;
  std::uint64_t s = 300;
  const auto seeds = word_family(3, 4, 31);
  for (const SeedPtr& seed : seeds) c.add(check_a_action_oracle(seed, 25, ++s));
  return c.finish(std::to_string(seeds.size()) + " words x 25 cell matrices");
}

Outcome criterion_4() {
  Collector c;
  for (int r = 1; r <= 4; ++r) {
    c.add(check_type_a_closed_form(r, 50, 400 + r));
    c.add(check_closed_form_minors(r, 25, 410 + r));
  }
  c.add(check_sl5_worked_formulas(25, 420));
  return c.finish("r = 1..4 x 50 points, SL5 j = 1 x 25 points");
}

Outcome criterion_5() {
  Collector c;
  std::uint64_t s = 500;
  const auto seeds = word_family(3, 4, 51);
  for (const SeedPtr& seed : seeds) c.add(check_ensemble_diagrams(seed, 50, ++s));
  return c.finish(std::to_string(seeds.size()) + " words x 50 points");
}

Outcome criterion_6() {
  Collector c;
  std::uint64_t s = 600;
  auto seeds = word_family(3, 3, 61);
  // A3 words in which letters 1 and 3 (a_13 = a_31 = 0) both occur.
  seeds.push_back(type_a(3, {1, 3}));
  seeds.push_back(type_a(3, {2, 1, 3, 2}));
  for (const SeedPtr& seed : seeds) {
    c.add(check_geometric_axioms(Structure::X, seed, 50, ++s));
    c.add(check_geometric_axioms(Structure::A, seed, 50, ++s));
  }
  return c.finish(std::to_string(seeds.size()) + " words x 2 structures x 50 points");
}

Outcome criterion_7() {
  Collector c;
  c.add(check_verma_a2(20, 700));
  return c.finish("cells (1,2,1) and (2,1,2) x 20 characters");
}

Outcome criterion_8() {
  Collector c;
  std::uint64_t s = 800;
  const auto seeds = word_family(3, 4, 81);
  for (const SeedPtr& seed : seeds) c.add(check_twist(seed, 25, ++s));
  return c.finish(std::to_string(seeds.size()) + " words x 25 cell matrices");
}

Outcome criterion_9() {
  Collector c;
  for (int r = 1; r <= 3; ++r) c.add(check_minor_pullback(r, 25, 900 + r));
  return c.finish("r = 1..3 x 25 matrices, every row set of size <= r");
}

Outcome criterion_10() {
  Collector c;
  std::uint64_t s = 1000;
  const auto seeds = word_family(3, 4, 101);
  for (const SeedPtr& seed : seeds) c.add(check_tcoords(seed, 25, ++s));
  return c.finish(std::to_string(seeds.size()) + " words x 25 cell points");
}

struct TropicalRun {
  Outcome axioms;
  Outcome glued;
  double axiom_seconds = 0;
  double glued_seconds = 0;
};

template <class F>
auto timed(double& seconds, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  auto out = f();
  seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

TropicalRun criteria_11_12() {
  constexpr std::int64_t radius = 20;
  constexpr std::size_t per_chart = 1000;
  Collector axioms, glued;
  TropicalRun run;
  std::size_t charts = 0;
  std::uint64_t s = 1100;
  const std::vector<SeedPtr> seeds{longest(1), type_a(2, {1, 2, 1}), type_a(3, {1, 2, 1, 3, 2, 1})};
  for (const SeedPtr& fresh : seeds) {
    for (Structure structure : {Structure::A, Structure::X}) {
      const auto formulas = timed(run.axiom_seconds, [&] { return std::make_shared<const CrystalFormulas>(structure, fresh); });
      const TropicalCrystal origin(formulas);
      const auto& letters = origin.letters();
      const auto fresh_sample = random_box_points(fresh, radius, per_chart, ++s);
      for (const auto& path : mutation_sequences(*fresh, 3)) {
        ++charts;
        const TropicalCrystal crystal = timed(run.axiom_seconds, [&] { return TropicalCrystal(formulas, path); });
        const auto sample = random_box_points(crystal.seed(), radius, per_chart, ++s);
        const std::string context = fresh->cartan().label() + " " + to_string(structure) + " chart of length " +
                                    std::to_string(path.size());
        axioms.add(timed(run.axiom_seconds, [&] { return crystal_check(crystal, sample, letters); }), context);
        if (path.empty()) continue;
        glued.add(timed(run.glued_seconds, [&] { return glued_check(origin, crystal, fresh_sample, letters); }), context);
      }
    }
  }
  const std::string what = std::to_string(charts) + " (structure, chart) pairs x " + std::to_string(per_chart) +
                           " points in [-20,20]^|I|";
  run.axioms = axioms.finish(what);
  run.glued = glued.finish(what);
  return run;
}

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;  // 0 when there is no runtime bound
};

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  const std::vector<std::pair<Criterion, std::function<Outcome()>>> plain{
      {{1, "SL5 exchange matrix", 1}, criterion_1},
      {{2, "X-side action vs matrix oracle", 60}, criterion_2},
      {{3, "A-side action vs twisted matrix oracle", 0}, criterion_3},
      {{4, "type-A closed form and SL5 worked formulas", 0}, criterion_4},
      {{5, "ensemble diagrams", 0}, criterion_5},
      {{6, "geometric crystal axioms and group law", 0}, criterion_6},
      {{7, "Verma relation on A2", 0}, criterion_7},
      {{8, "twist minor identity and biregularity", 0}, criterion_8},
      {{9, "minor pullback", 0}, criterion_9},
      {{10, "cell coordinates and coordinate changes", 0}, criterion_10},
  };

  bool all = true;
  const auto report = [&all](const Criterion& c, Outcome o, double seconds) {
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      o.passed = false;
      o.detail = "took " + std::to_string(seconds) + " s, limit " + std::to_string(c.limit_seconds) + " s";
    }
    all = all && o.passed;
    std::printf("%s  #%-2d %-45s %7.2fs  %s\n", o.passed ? "PASS" : "FAIL", c.number, c.title.c_str(), seconds,
                o.detail.c_str());
    std::fflush(stdout);
  };

  for (const auto& [criterion, run] : plain) {
    const auto start = Clock::now();
    Outcome o = run();
    report(criterion, std::move(o), std::chrono::duration<double>(Clock::now() - start).count());
  }

  // Both criteria share one sweep over the charts; each is timed on its own calls.
  TropicalRun t = criteria_11_12();
  report({11, "tropical crystal axioms on all charts", 30}, std::move(t.axioms), t.axiom_seconds);
  report({12, "glued crystal identification", 0}, std::move(t.glued), t.glued_seconds);

  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return all ? 0 : 1;
}
