#include "cluster_crystal/crystal.hpp"

#include <algorithm>

#include "cluster_crystal/semifield.hpp"

namespace cluster_crystal {

std::string to_string(Structure s) { return s == Structure::A ? "a" : "x"; }

Structure parse_structure(const std::string& text) {
  if (text == "a" || text == "A") return Structure::A;
  if (text == "x" || text == "X") return Structure::X;
  throw UsageError("invalid_structure", "structure must be 'a' or 'x', got '" + text + "'");
}

namespace {

void require_fresh(const Seed& seed) {
  if (!seed.is_fresh()) {
    throw DomainError("not_fresh", "closed-form crystal formulas live on the fresh chart of a word");
  }
}

const std::vector<SeedIndex>& occurrences_or_throw(const Seed& seed, int j) {
  if (j < 1 || j > seed.rank()) throw DomainError("invalid_letter", "letter " + std::to_string(j) + " out of range");
  const auto& occ = seed.combinatorics().occurrences(j);
  if (occ.empty()) throw DomainError("letter_absent", "letter " + std::to_string(j) + " does not occur in the word");
  return occ;
}

const Expr& at(const Seed& seed, const std::vector<Expr>& v, SeedIndex k) { return v[seed.slot(k)]; }

// Per positive index k, the action multiplies X_k by ratio^exponent.
struct XFactors {
  std::vector<Expr> ratio;  // indexed by k-1
  std::vector<long> exponent;
};

XFactors x_factors(const Seed& seed, int j, const std::vector<Expr>& x, const Expr& c) {
  const auto& K = occurrences_or_throw(seed, j);
  const int l = static_cast<int>(K.size());
  const int n = seed.length();

  // S[m] = X_{K_m} ... X_{K_{l-1}} for m = 1..l (S[l] = 1).
  std::vector<Expr> S(static_cast<std::size_t>(l + 1), Expr::one());
  for (int m = l - 1; m >= 1; --m) S[m] = at(seed, x, K[m - 1]) * S[m + 1];

  // N(q) = c (S_1 + ... + S_min(q,l)) + (S_{q+1} + ... + S_l), q = 0..l+1.
  std::vector<Expr> N;
  for (int q = 0; q <= l + 1; ++q) {
    std::vector<Expr> low, high;
    for (int m = 1; m <= std::min(q, l); ++m) low.push_back(S[m]);
    for (int m = q + 1; m <= l; ++m) high.push_back(S[m]);
    if (low.empty()) {
      N.push_back(Expr::sum(high));
    } else if (high.empty()) {
      N.push_back(c * Expr::sum(low));
    } else {
      N.push_back(c * Expr::sum(low) + Expr::sum(high));
    }
  }

  XFactors f{std::vector<Expr>(static_cast<std::size_t>(n), Expr::one()), std::vector<long>(static_cast<std::size_t>(n), 0)};
  for (int p = 1; p <= l; ++p) {
    f.ratio[K[p - 1] - 1] = N[p + 1] / N[p - 1];
    f.exponent[K[p - 1] - 1] = 1;
  }
  const IndexCombinatorics& ic = seed.combinatorics();
  for (SeedIndex k = 1; k <= n; ++k) {
    if (ic.letter(k) == j) continue;
    const SeedIndex kp = ic.next(k);
    int gamma = 0, s = 0;
    for (int m = 1; m <= l; ++m) {
      if (K[m - 1] > k && K[m - 1] < kp) {
        if (s == 0) gamma = m;
        ++s;
      }
    }
    if (s == 0) continue;
    f.ratio[k - 1] = N[gamma + s - 1] / N[gamma - 1];
    f.exponent[k - 1] = seed.cartan()(j, ic.letter(k));
  }
  return f;
}

}  // namespace

std::vector<Expr> x_action_formula(const Seed& seed, int j, const std::vector<Expr>& x, const Expr& c) {
  require_fresh(seed);
  const XFactors f = x_factors(seed, j, x, c);
  const IndexCombinatorics& ic = seed.combinatorics();
  std::vector<Expr> out = x;
  for (SeedIndex k = 1; k <= seed.length(); ++k) {
    out[seed.slot(k)] = at(seed, x, k) * pow(f.ratio[k - 1], f.exponent[k - 1]);
  }
  for (int i = 1; i <= seed.rank(); ++i) {
    // X'_{-i} = X_{-i} c^{a_ji} prod_{i_s = i} X_s / X'_s.
    std::vector<Expr> factors{at(seed, x, -i), pow(c, seed.cartan()(j, i))};
    for (SeedIndex s : ic.occurrences(i)) factors.push_back(pow(f.ratio[s - 1], -f.exponent[s - 1]));
    out[seed.slot(-i)] = Expr::product(std::move(factors));
  }
  return out;
}

Expr x_gamma_formula(const Seed& seed, int j, const std::vector<Expr>& x) {
  require_fresh(seed);
  std::vector<Expr> factors{at(seed, x, -j)};
  for (SeedIndex k : seed.combinatorics().occurrences(j)) factors.push_back(at(seed, x, k));
  return Expr::product(std::move(factors));
}

Expr x_epsilon_formula(const Seed& seed, int j, const std::vector<Expr>& x) {
  require_fresh(seed);
  const auto& K = occurrences_or_throw(seed, j);
  // Terms X_{K_{p+1}} ... X_{K_l}, p = 0..l-1, built as shared suffixes.
  std::vector<Expr> terms;
  Expr suffix = Expr::one();
  for (std::size_t p = K.size(); p-- > 0;) {
    suffix = at(seed, x, K[p]) * suffix;
    terms.push_back(suffix);
  }
  return Expr::one() / Expr::sum(std::move(terms));
}

BTildeMinor b_tilde_minor(const Seed& seed, std::vector<SeedIndex> rows, std::vector<SeedIndex> cols) {
  if (rows.size() != cols.size()) throw DomainError("shape_mismatch", "B~ minor needs a square index selection");
  RationalMatrix sub(rows.size(), cols.size());
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b) sub(a, b) = seed.b_tilde(rows[a], cols[b]);
  const long value = to_integer(determinant(std::move(sub)));
  return BTildeMinor{std::move(rows), std::move(cols), value};
}

namespace {

BTildeMinor c_exponent_minor(const Seed& seed, int j, SeedIndex k) {
  const IndexCombinatorics& ic = seed.combinatorics();
  const int n = seed.length();
  std::vector<SeedIndex> rows, cols;
  for (SeedIndex t = k; t <= n; ++t) rows.push_back(t);
  for (SeedIndex t = k + 1; t <= n; ++t) cols.push_back(ic.prev(t));
  cols.push_back(*ic.last_occurrence(j));
  return b_tilde_minor(seed, std::move(rows), std::move(cols));
}

// Rows k..t-1, columns (k+1)^-, ..., t^-.
BTildeMinor ratio_exponent_minor(const Seed& seed, SeedIndex k, SeedIndex t) {
  const IndexCombinatorics& ic = seed.combinatorics();
  std::vector<SeedIndex> rows, cols;
  for (SeedIndex q = k; q < t; ++q) rows.push_back(q);
  for (SeedIndex q = k + 1; q <= t; ++q) cols.push_back(ic.prev(q));
  return b_tilde_minor(seed, std::move(rows), std::move(cols));
}

}  // namespace

std::vector<BTildeMinor> a_action_minors(const Seed& seed, int j) {
  require_fresh(seed);
  occurrences_or_throw(seed, j);
  std::vector<BTildeMinor> out;
  for (SeedIndex k = 1; k <= seed.length(); ++k) {
    out.push_back(c_exponent_minor(seed, j, k));
    for (SeedIndex t = k + 1; t <= seed.length(); ++t) out.push_back(ratio_exponent_minor(seed, k, t));
  }
  return out;
}

std::vector<Expr> a_action_formula(const Seed& seed, int j, const std::vector<Expr>& a, const Expr& c) {
  require_fresh(seed);
  occurrences_or_throw(seed, j);
  const IndexCombinatorics& ic = seed.combinatorics();
  const int n = seed.length();
  const std::vector<Expr> P = ensemble_formula(seed, a);
  const std::vector<Expr> Xbar = x_action_formula(seed, j, P, c);

  std::vector<std::optional<Expr>> out(seed.size());
  const auto assign = [&](SeedIndex k, Expr value) {
    auto& cell = out[seed.slot(k)];
    if (cell) throw DomainError("internal", "A-side action assigns index " + std::to_string(k) + " twice");
    cell = std::move(value);
  };

  for (SeedIndex k = 1; k <= n; ++k) {
    std::vector<Expr> factors{at(seed, a, ic.prev(k)), pow(c, c_exponent_minor(seed, j, k).value)};
    for (SeedIndex t = k + 1; t <= n; ++t) {
      const long e = ratio_exponent_minor(seed, k, t).value;
      if (e != 0) factors.push_back(pow(at(seed, P, t) / at(seed, Xbar, t), e));
    }
    // The t = k term has the empty minor as exponent.
    factors.push_back(at(seed, P, k) / at(seed, Xbar, k));
    assign(ic.prev(k), Expr::product(std::move(factors)));
  }
  for (int letter = 1; letter <= seed.rank(); ++letter) {
    if (auto kmax = ic.last_occurrence(letter)) {
      assign(*kmax, letter == j ? at(seed, a, *kmax) * c : at(seed, a, *kmax));
    } else {
      assign(-letter, at(seed, a, -letter));
    }
  }
  std::vector<Expr> result;
  result.reserve(out.size());
  for (std::size_t s = 0; s < out.size(); ++s) {
    if (!out[s]) throw DomainError("internal", "A-side action leaves index " + std::to_string(seed.index_at(s)) + " unassigned");
    result.push_back(std::move(*out[s]));
  }
  return result;
}

SeedIndex type_a_position(int rank, int m, int d) {
  if (m < 1 || d < 1 || m + d > rank + 1) throw DomainError("invalid_index", "no position (m, d) in the longest word");
  SeedIndex k = 0;
  for (int q = 1; q < m; ++q) k += rank - q + 1;
  return k + d;
}

std::vector<Expr> a_action_type_a_formula(const Seed& seed, int j, const std::vector<Expr>& a, const Expr& c) {
  const int r = seed.rank();
  if (!seed.cartan().is_type_a() || seed.word() != longest_word_type_a(r)) {
    throw DomainError("wrong_word", "the closed form needs type A and the word (1..r, 1..r-1, ..., 1)");
  }
  std::vector<Expr> out = a_action_formula(seed, j, a, c);
  const std::vector<Expr> P = ensemble_formula(seed, a);
  for (SeedIndex k = 1; k <= seed.length(); ++k) out[seed.slot(k)] = at(seed, a, k);

  const int d = j;
  // Q_s = P_{s,d} ... P_{r-d,d} for s <= r-d, and Q_{r-d+1} = 1.
  std::vector<Expr> Q(static_cast<std::size_t>(r - d + 2), Expr::one());
  for (int s = r - d; s >= 1; --s) Q[s] = at(seed, P, type_a_position(r, s, d)) * Q[s + 1];
  std::vector<Expr> all(Q.begin() + 1, Q.end());
  const Expr denominator = Expr::sum(all);
  for (int m = 1; m <= r - d + 1; ++m) {
    std::vector<Expr> low(Q.begin() + 1, Q.begin() + m + 1), high(Q.begin() + m + 1, Q.end());
    Expr numerator = high.empty() ? c * Expr::sum(low) : c * Expr::sum(low) + Expr::sum(high);
    const SeedIndex k = type_a_position(r, m, d);
    out[seed.slot(k)] = at(seed, a, k) * (numerator / denominator);
  }
  return out;
}

Expr a_gamma_formula(const Seed& seed, int j, const std::vector<Expr>& a) {
  return x_gamma_formula(seed, j, ensemble_formula(seed, a));
}

Expr a_epsilon_formula(const Seed& seed, int j, const std::vector<Expr>& a) {
  return x_epsilon_formula(seed, j, ensemble_formula(seed, a));
}

CrystalFormulas::CrystalFormulas(Structure structure, SeedPtr fresh, bool type_a_closed_form)
    : structure_(structure), seed_(std::move(fresh)) {
  const Seed& seed = *seed_;
  require_fresh(seed);
  if (type_a_closed_form && structure != Structure::A) {
    throw DomainError("invalid_argument", "the type-A closed form exists for the A-side only");
  }
  const std::vector<Expr> vars = slot_variables(seed.size());
  const Expr c = Expr::variable(static_cast<int>(seed.size()));
  for (int j = 1; j <= seed.rank(); ++j) {
    if (seed.combinatorics().occurrences(j).empty()) continue;
    letters_.push_back(j);
    Entry e;
    if (structure == Structure::X) {
      e.action = x_action_formula(seed, j, vars, c);
      e.gamma = x_gamma_formula(seed, j, vars);
      e.epsilon = x_epsilon_formula(seed, j, vars);
    } else {
      e.action = type_a_closed_form ? a_action_type_a_formula(seed, j, vars, c) : a_action_formula(seed, j, vars, c);
      e.gamma = a_gamma_formula(seed, j, vars);
      e.epsilon = a_epsilon_formula(seed, j, vars);
    }
    e.action_program = Program(e.action);
    e.gamma_program = Program({e.gamma});
    e.epsilon_program = Program({e.epsilon});
    entries_.emplace(j, std::move(e));
  }
}

bool CrystalFormulas::has_letter(int j) const { return entries_.count(j) != 0; }

const CrystalFormulas::Entry& CrystalFormulas::entry(int j) const {
  auto it = entries_.find(j);
  if (it == entries_.end()) {
    throw DomainError("letter_absent", "letter " + std::to_string(j) + " does not occur in the word");
  }
  return it->second;
}

template <class Tag>
void GeometricCrystal<Tag>::require_chart(const PointType& p) const {
  if (p.seed_ptr() != seed() && !(p.seed() == *seed())) {
    throw DomainError("seed_mismatch", "point does not live on this crystal's chart");
  }
}

template <class Tag>
typename GeometricCrystal<Tag>::PointType GeometricCrystal<Tag>::act(int j, const Rational& c, const PointType& p) const {
  require_chart(p);
  if (c == 0) throw DomainError("invalid_argument", "the crystal parameter c must be nonzero");
  std::vector<Rational> inputs = p.coords();
  inputs.push_back(c);
  try {
    return PointType(p.seed_ptr(), run_on_torus(formulas_.action_program(j), inputs));
  } catch (const DomainError& e) {
    if (e.kind() == "chart_boundary") throw DomainError("outside_domain", "point outside dom(e_j): " + std::string(e.what()));
    throw;
  }
}

template <class Tag>
Rational GeometricCrystal<Tag>::gamma(int j, const PointType& p) const {
  require_chart(p);
  return formulas_.gamma_program(j).template run<PositiveRationals>(p.coords()).front();
}

template <class Tag>
Rational GeometricCrystal<Tag>::epsilon(int j, const PointType& p) const {
  require_chart(p);
  try {
    return formulas_.epsilon_program(j).template run<PositiveRationals>(p.coords()).front();
  } catch (const DomainError& e) {
    if (e.kind() == "division_by_zero") throw DomainError("outside_domain", "epsilon undefined at this point");
    throw;
  }
}

template class GeometricCrystal<XTag>;
template class GeometricCrystal<ATag>;

XPoint act_ex(int j, const Rational& c, const XPoint& x) { return XCrystal(x.seed_ptr()).act(j, c, x); }
Rational gamma_x(int j, const XPoint& x) { return XCrystal(x.seed_ptr()).gamma(j, x); }
Rational epsilon_x(int j, const XPoint& x) { return XCrystal(x.seed_ptr()).epsilon(j, x); }
Rational phi_x(int j, const XPoint& x) { return XCrystal(x.seed_ptr()).phi(j, x); }
APoint act_ea(int j, const Rational& c, const APoint& a) { return ACrystal(a.seed_ptr()).act(j, c, a); }
APoint act_ea_type_a(int j, const Rational& c, const APoint& a) { return ACrystal(a.seed_ptr(), true).act(j, c, a); }
Rational gamma_a(int j, const APoint& a) { return ACrystal(a.seed_ptr()).gamma(j, a); }
Rational epsilon_a(int j, const APoint& a) { return ACrystal(a.seed_ptr()).epsilon(j, a); }

}  // namespace cluster_crystal
