#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace bioflag {

/// Element of S_n in one-line notation, values 1..n.
class Permutation {
 public:
  explicit Permutation(std::vector<unsigned> one_line);
  static Permutation identity(unsigned n);
  /// Comma-separated one-line notation, e.g. "4,8,6,2,7,3,1,5".
  static Permutation parse(const std::string& text);

  unsigned n() const { return static_cast<unsigned>(w_.size()); }
  /// w(i) for 1 <= i <= n.
  unsigned operator()(unsigned i) const { return w_[i - 1]; }
  const std::vector<unsigned>& one_line() const { return w_; }

  /// Number of inversions.
  unsigned length() const;
  /// Right multiplication by s_i: swaps positions i and i+1.
  Permutation times_s(unsigned i) const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<unsigned> w_;
};

/// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(unsigned n);
Permutation longest_element(unsigned n);

/// d[p][q] = #{i <= p : w(i) <= q} for 0 <= p, q <= n; row and column 0 are zero.
using RankMatrix = std::vector<std::vector<unsigned>>;
RankMatrix rank_matrix(const Permutation& w);

/// For each row p the column where row p minus row p-1 first becomes 1.
std::vector<unsigned> jump_points(const Permutation& w);

/// u <= w in the Bruhat order, i.e. d^u >= d^w entrywise.
bool bruhat_leq(const Permutation& u, const Permutation& w);

/// Reduced word as letters d_1..d_l, split into blocks t_1..t_{n-1}:
/// block t occupies letters [bounds[t-1], bounds[t]) with bounds[0] = 0.
struct ReducedWord {
  unsigned n = 0;
  std::vector<unsigned> letters;
  std::vector<std::size_t> block_bounds;

  std::size_t size() const { return letters.size(); }
  std::vector<unsigned> block(std::size_t t) const;
};

/// e * s_{d_1} * ... * s_{d_l}.
Permutation word_product(unsigned n, const std::vector<unsigned>& letters);

ReducedWord bubblesort_word(const Permutation& w);

/// p(i) for i = 1..n-1 (stored at index i-1): the 1-based index of the last
/// occurrence of s_i, or nullopt when s_i does not occur.
std::vector<std::optional<std::size_t>> last_occurrence_indices(const ReducedWord& word);

/// The cumulative count sum_{j > i} #{k < j : w(k) > w(j)}, for i = 1..n-1.
std::vector<std::size_t> cumulative_transposition_counts(const Permutation& w);

/// Reference to an earlier letter (1-based index) or to a fixed standard space F_dim.
struct BSRef {
  std::optional<std::size_t> index;
  unsigned fixed_dim = 0;

  friend bool operator==(const BSRef&, const BSRef&) = default;
};

struct BSIncidence {
  std::vector<unsigned> d;
  std::vector<BSRef> left;
  std::vector<BSRef> right;
};

BSIncidence bs_incidence(const std::vector<unsigned>& letters);

}  // namespace bioflag
