#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cluster_crystal {

/// A symmetrizable generalized Cartan matrix of full rank, with its minimal
/// positive integer symmetrizer (d_i a_ij = d_j a_ji).  Letters are 1-based.
class CartanMatrix {
 public:
  /// Validates the GCM conditions, full rank and symmetrizability.
  static CartanMatrix from_entries(std::vector<std::vector<int>> entries);

  /// Finite types A_r, B_r (r >= 2), C_r (r >= 2), D_r (r >= 4), G_2, with
  /// a_ij = <alpha_i^vee, alpha_j>.
  static CartanMatrix finite_type(char family, int rank);

  /// Parses names such as "A4" or "G2".
  static CartanMatrix parse(std::string_view name);

  int rank() const { return static_cast<int>(entries_.size()); }
  int operator()(int i, int j) const { return entries_[i - 1][j - 1]; }
  int symmetrizer(int i) const { return symmetrizer_[i - 1]; }
  const std::vector<int>& symmetrizer() const { return symmetrizer_; }
  const std::vector<std::vector<int>>& entries() const { return entries_; }

  /// "A4" style label when built from a finite type, empty otherwise.
  const std::string& label() const { return label_; }
  bool is_type_a() const;

  friend bool operator==(const CartanMatrix& a, const CartanMatrix& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<std::vector<int>> entries_;
  std::vector<int> symmetrizer_;
  std::string label_;
};

/// Simple reflection on root coordinates: s_i(beta) = beta - beta(alpha_i^vee) alpha_i.
std::vector<long> reflect_root(const CartanMatrix& a, int i, std::vector<long> beta);

/// Root-ascent test: the word is reduced iff every s_{i_1}...s_{i_{k-1}}(alpha_{i_k})
/// is a positive root.
bool check_reduced(const CartanMatrix& a, const std::vector<int>& word);

/// Throws DomainError("invalid_letter") for letters outside 1..rank.
void check_letters(const CartanMatrix& a, const std::vector<int>& word);

/// The type-A reduced word (1..r, 1..r-1, ..., 1, 2, 1) for the longest element.
std::vector<int> longest_word_type_a(int rank);

}  // namespace cluster_crystal
