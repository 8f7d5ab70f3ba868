#include "cluster_crystal/seed.hpp"

#include <cstdint>
#include <cstdio>
#include <sstream>

#include "cluster_crystal/errors.hpp"

namespace cluster_crystal {

IndexCombinatorics::IndexCombinatorics(int rank, std::vector<int> word)
    : rank_(rank), word_(std::move(word)), occurrences_(static_cast<std::size_t>(rank)) {
  for (std::size_t k = 0; k < word_.size(); ++k) {
    occurrences_[static_cast<std::size_t>(word_[k] - 1)].push_back(static_cast<SeedIndex>(k + 1));
  }
}

SeedIndex IndexCombinatorics::next(SeedIndex k) const {
  const auto& occ = occurrences(letter(k));
  for (SeedIndex l : occ) {
    if (l > k) return l;
  }
  return length() + 1;
}

SeedIndex IndexCombinatorics::prev(SeedIndex k) const {
  SeedIndex best = -letter(k);
  for (SeedIndex l : occurrences(letter(k))) {
    if (l < k) best = l;
  }
  return best;
}

std::optional<SeedIndex> IndexCombinatorics::last_occurrence(int letter) const {
  const auto& occ = occurrences(letter);
  if (occ.empty()) return std::nullopt;
  return occ.back();
}

Seed Seed::from_word(CartanMatrix cartan, std::vector<int> word) {
  if (!check_reduced(cartan, word)) throw DomainError("non_reduced_word", "word is not reduced");
  Seed s;
  s.cartan_ = std::move(cartan);
  s.combinatorics_ = IndexCombinatorics(s.cartan_.rank(), std::move(word));
  const IndexCombinatorics& ic = s.combinatorics_;
  const int n = ic.length();
  const std::size_t size = s.size();
  s.exchange_ = RationalMatrix(size, size, Rational(0));
  s.frozen_block_ = RationalMatrix(size, size, Rational(0));

  for (std::size_t js = 0; js < size; ++js) {
    const SeedIndex j = s.index_at(js);
    const SeedIndex jp = ic.next(j);
    for (std::size_t ks = 0; ks < size; ++ks) {
      const SeedIndex k = s.index_at(ks);
      const SeedIndex kp = ic.next(k);
      const int bracket = -int(j == kp) + int(jp == k) - int(k < j && j < kp && j > 0) +
                          int(k < jp && jp < kp && jp <= n) + int(j < k && k < jp && k > 0) -
                          int(j < kp && kp < jp && kp <= n);
      const int a = s.cartan_(ic.letter(k), ic.letter(j));
      if (bracket != 0) s.exchange_(js, ks) = ratio(a * bracket, 2);
      const int m = int(jp > n && kp > n) + int(j < 0 && k < 0);
      if (m != 0) s.frozen_block_(js, ks) = ratio(a * m, 2);
    }
  }
  s.refresh_b_tilde();
  return s;
}

void Seed::refresh_b_tilde() {
  const std::size_t size = this->size();
  b_tilde_ = IntMatrix(size, size, 0);
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) {
      const Rational v = exchange_(r, c) + frozen_block_(r, c);
      if (v.get_den() != 1) {
        throw DomainError("internal", "B + M is not integral at (" + std::to_string(index_at(r)) + ", " +
                                          std::to_string(index_at(c)) + ")");
      }
      b_tilde_(r, c) = to_integer(v);
    }
  }
}

std::size_t Seed::slot(SeedIndex k) const {
  if (!contains(k)) throw DomainError("invalid_index", "index " + std::to_string(k) + " is not in the seed");
  return static_cast<std::size_t>(k < 0 ? k + rank() : k + rank() - 1);
}

SeedIndex Seed::index_at(std::size_t slot) const {
  const int s = static_cast<int>(slot);
  return s < rank() ? s - rank() : s - rank() + 1;
}

std::vector<SeedIndex> Seed::indices() const {
  std::vector<SeedIndex> out;
  for (std::size_t s = 0; s < size(); ++s) out.push_back(index_at(s));
  return out;
}

bool Seed::contains(SeedIndex k) const { return (k < 0 && k >= -rank()) || (k > 0 && k <= length()); }

bool Seed::is_frozen(SeedIndex k) const {
  if (!contains(k)) throw DomainError("invalid_index", "index " + std::to_string(k) + " is not in the seed");
  return combinatorics_.fresh_frozen(k);
}

std::vector<SeedIndex> Seed::frozen() const {
  std::vector<SeedIndex> out;
  for (SeedIndex k : indices())
    if (is_frozen(k)) out.push_back(k);
  return out;
}

std::vector<SeedIndex> Seed::unfrozen() const {
  std::vector<SeedIndex> out;
  for (SeedIndex k : indices())
    if (!is_frozen(k)) out.push_back(k);
  return out;
}

Seed Seed::mutate(SeedIndex k) const {
  if (is_frozen(k)) throw DomainError("frozen_index", "cannot mutate at frozen index " + std::to_string(k));
  Seed out = *this;
  const std::size_t ks = slot(k);
  const std::size_t size = this->size();
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      if (i == ks || j == ks) {
        out.exchange_(i, j) = -exchange_(i, j);
      } else {
        const Rational& bik = exchange_(i, ks);
        const Rational& bkj = exchange_(ks, j);
        out.exchange_(i, j) = exchange_(i, j) + (abs(bik) * bkj + bik * abs(bkj)) / 2;
      }
    }
  }
  out.history_.push_back(k);
  out.refresh_b_tilde();
  return out;
}

std::string Seed::content_hash() const {
  std::ostringstream canon;
  for (const auto& row : cartan_.entries()) {
    for (int v : row) canon << v << ',';
    canon << ';';
  }
  canon << '|';
  for (int l : word()) canon << l << ',';
  canon << '|';
  for (std::size_t r = 0; r < size(); ++r)
    for (std::size_t c = 0; c < size(); ++c) canon << format_rational(exchange_(r, c)) << ',';
  canon << '|';
  for (SeedIndex h : history_) canon << h << ',';
  // 64-bit FNV-1a: a short, platform-independent digest for naming charts.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : canon.str()) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

bool operator==(const Seed& a, const Seed& b) {
  return a.cartan_ == b.cartan_ && a.word() == b.word() && a.exchange_ == b.exchange_ && a.history_ == b.history_;
}

}  // namespace cluster_crystal
