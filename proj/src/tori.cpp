#include "cluster_crystal/tori.hpp"

namespace cluster_crystal {

std::vector<Expr> slot_variables(std::size_t count) {
  std::vector<Expr> vars;
  vars.reserve(count);
  for (std::size_t s = 0; s < count; ++s) vars.push_back(Expr::variable(static_cast<int>(s)));
  return vars;
}

std::vector<Expr> a_mutation_formula(const Seed& seed, SeedIndex k, const std::vector<Expr>& a) {
  if (seed.is_frozen(k)) throw DomainError("frozen_index", "cannot mutate at frozen index " + std::to_string(k));
  const std::size_t ks = seed.slot(k);
  std::vector<Expr> positive, negative;
  for (std::size_t j = 0; j < seed.size(); ++j) {
    const long b = to_integer(seed.exchange_matrix()(ks, j));
    if (b > 0) positive.push_back(pow(a[j], b));
    if (b < 0) negative.push_back(pow(a[j], -b));
  }
  std::vector<Expr> out = a;
  out[ks] = (Expr::product(std::move(positive)) + Expr::product(std::move(negative))) / a[ks];
  return out;
}

std::vector<Expr> x_mutation_formula(const Seed& seed, SeedIndex k, const std::vector<Expr>& x) {
  if (seed.is_frozen(k)) throw DomainError("frozen_index", "cannot mutate at frozen index " + std::to_string(k));
  const std::size_t ks = seed.slot(k);
  const Expr one_plus = Expr::one() + x[ks];
  std::vector<Expr> out;
  out.reserve(seed.size());
  for (std::size_t i = 0; i < seed.size(); ++i) {
    if (i == ks) {
      out.push_back(Expr::one() / x[ks]);
      continue;
    }
    const long b = to_integer(seed.exchange_matrix()(i, ks));
    out.push_back(Expr::product({x[i], pow(x[ks], b > 0 ? b : 0), pow(one_plus, -b)}));
  }
  return out;
}

std::vector<Expr> ensemble_formula(const Seed& seed, const std::vector<Expr>& a) {
  std::vector<Expr> out;
  out.reserve(seed.size());
  const IntMatrix& bt = seed.b_tilde();
  for (std::size_t i = 0; i < seed.size(); ++i) {
    std::vector<Expr> factors;
    for (std::size_t j = 0; j < seed.size(); ++j) factors.push_back(pow(a[j], bt(i, j)));
    out.push_back(Expr::product(std::move(factors)));
  }
  return out;
}

std::vector<Expr> a_mutation_exprs(const Seed& seed, SeedIndex k) {
  return a_mutation_formula(seed, k, slot_variables(seed.size()));
}
std::vector<Expr> x_mutation_exprs(const Seed& seed, SeedIndex k) {
  return x_mutation_formula(seed, k, slot_variables(seed.size()));
}
std::vector<Expr> ensemble_exprs(const Seed& seed) { return ensemble_formula(seed, slot_variables(seed.size())); }

std::vector<Rational> run_on_torus(const Program& program, const std::vector<Rational>& inputs) {
  std::vector<Rational> out;
  try {
    out = program.run<PositiveRationals>(inputs);
  } catch (const DomainError& e) {
    if (e.kind() == "division_by_zero") throw DomainError("chart_boundary", "point leaves the torus chart: " + std::string(e.what()));
    throw;
  }
  for (const Rational& v : out) {
    if (v == 0) throw DomainError("chart_boundary", "point leaves the torus chart: a coordinate vanishes");
  }
  return out;
}

MutationMap::MutationMap(SeedPtr source, SeedIndex k)
    : source_(std::move(source)),
      target_(std::make_shared<const Seed>(source_->mutate(k))),
      k_(k),
      a_exprs_(a_mutation_exprs(*source_, k)),
      x_exprs_(x_mutation_exprs(*source_, k)),
      a_program_(a_exprs_),
      x_program_(x_exprs_) {}

namespace {
void require_seed(const Seed& have, const Seed& want) {
  if (&have != &want && !(have == want)) throw DomainError("seed_mismatch", "point is not on the source chart of this map");
}
}  // namespace

APoint MutationMap::apply(const APoint& p) const {
  require_seed(p.seed(), *source_);
  return APoint(target_, run_on_torus(a_program_, p.coords()));
}

XPoint MutationMap::apply(const XPoint& p) const {
  require_seed(p.seed(), *source_);
  return XPoint(target_, run_on_torus(x_program_, p.coords()));
}

APoint mutate_a_point(const APoint& a, SeedIndex k) { return MutationMap(a.seed_ptr(), k).apply(a); }
XPoint mutate_x_point(const XPoint& x, SeedIndex k) { return MutationMap(x.seed_ptr(), k).apply(x); }

XPoint ensemble_point(const APoint& a) {
  const Program program(ensemble_exprs(a.seed()));
  return XPoint(a.seed_ptr(), run_on_torus(program, a.coords()));
}

}  // namespace cluster_crystal
