#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cluster_crystal/cartan.hpp"
#include "cluster_crystal/matrix.hpp"
#include "cluster_crystal/rational.hpp"

namespace cluster_crystal {

/// Index in {-r..-1} u {1..n}; never 0.  Negative indices are frozen and
/// carry the letter -k.
using SeedIndex = int;

/// Occurrence bookkeeping of a word: k+ (next occurrence of the same letter,
/// n+1 if none), k- (previous one, -i_k for a first occurrence), and the
/// occurrence lists per letter.
class IndexCombinatorics {
 public:
  IndexCombinatorics() = default;
  IndexCombinatorics(int rank, std::vector<int> word);

  int rank() const { return rank_; }
  int length() const { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const { return word_; }

  int letter(SeedIndex k) const { return k < 0 ? -k : word_[static_cast<std::size_t>(k - 1)]; }
  SeedIndex next(SeedIndex k) const;
  /// k- for positive k.  Always defined for positive k.
  SeedIndex prev(SeedIndex k) const;
  const std::vector<SeedIndex>& occurrences(int letter) const { return occurrences_[letter - 1]; }
  /// j_max; nullopt when the letter does not occur.
  std::optional<SeedIndex> last_occurrence(int letter) const;
  bool fresh_frozen(SeedIndex k) const { return k < 0 || next(k) > length(); }

 private:
  int rank_ = 0;
  std::vector<int> word_;
  std::vector<std::vector<SeedIndex>> occurrences_;
};

/// A seed (I, I0, B, d) attached to a reduced word, possibly after a
/// sequence of mutations.  Matrices are stored over "slots": slot s holds
/// index -r+s for s < r and index s-r+1 otherwise.  The frozen block M is
/// computed once on the fresh seed and carried through mutations.
class Seed {
 public:
  static Seed from_word(CartanMatrix cartan, std::vector<int> word);

  const CartanMatrix& cartan() const { return cartan_; }
  const std::vector<int>& word() const { return combinatorics_.word(); }
  const IndexCombinatorics& combinatorics() const { return combinatorics_; }
  int rank() const { return cartan_.rank(); }
  int length() const { return combinatorics_.length(); }
  std::size_t size() const { return static_cast<std::size_t>(rank() + length()); }

  std::size_t slot(SeedIndex k) const;
  SeedIndex index_at(std::size_t slot) const;
  std::vector<SeedIndex> indices() const;
  bool contains(SeedIndex k) const;

  bool is_frozen(SeedIndex k) const;
  std::vector<SeedIndex> frozen() const;
  std::vector<SeedIndex> unfrozen() const;
  int d(SeedIndex k) const { return cartan_.symmetrizer(combinatorics_.letter(k)); }

  const Rational& b(SeedIndex j, SeedIndex k) const { return exchange_(slot(j), slot(k)); }
  const RationalMatrix& exchange_matrix() const { return exchange_; }
  const RationalMatrix& frozen_block() const { return frozen_block_; }
  /// B + M, which is integral (checked on construction).
  const IntMatrix& b_tilde() const { return b_tilde_; }
  long b_tilde(SeedIndex j, SeedIndex k) const { return b_tilde_(slot(j), slot(k)); }

  const std::vector<SeedIndex>& history() const { return history_; }
  bool is_fresh() const { return history_.empty(); }

  /// Mutation at an unfrozen index.  I, I0, d and M are kept.
  Seed mutate(SeedIndex k) const;

  /// Stable hex digest of cartan, word, exchange matrix and history.
  std::string content_hash() const;

  /// Same cartan, word, B and history.
  friend bool operator==(const Seed& a, const Seed& b);

 private:
  Seed() = default;
  void refresh_b_tilde();

  CartanMatrix cartan_;
  IndexCombinatorics combinatorics_;
  RationalMatrix exchange_;
  RationalMatrix frozen_block_;
  IntMatrix b_tilde_;
  std::vector<SeedIndex> history_;
};

using SeedPtr = std::shared_ptr<const Seed>;

inline SeedPtr make_seed(CartanMatrix cartan, std::vector<int> word) {
  return std::make_shared<const Seed>(Seed::from_word(std::move(cartan), std::move(word)));
}

/// Free-function spellings of the seed operations.
inline Seed seed_from_word(CartanMatrix cartan, std::vector<int> word) {
  return Seed::from_word(std::move(cartan), std::move(word));
}
inline RationalMatrix m_matrix(const Seed& seed) { return seed.frozen_block(); }
inline Seed mutate_seed(const Seed& seed, SeedIndex k) { return seed.mutate(k); }

}  // namespace cluster_crystal
