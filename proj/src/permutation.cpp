#include "bioflag/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bioflag {

Permutation::Permutation(std::vector<unsigned> one_line) : w_(std::move(one_line)) {
  std::vector<bool> seen(w_.size() + 1, false);
  for (unsigned v : w_) {
    if (v < 1 || v > w_.size() || seen[v])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[v] = true;
  }
}

Permutation Permutation::identity(unsigned n) {
  std::vector<unsigned> v(n);
  std::iota(v.begin(), v.end(), 1u);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<unsigned> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long x = 0;
    try {
      x = std::stoul(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad permutation entry '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("bad permutation entry '" + item + "'");
    v.push_back(static_cast<unsigned>(x));
  }
  if (v.empty()) throw std::invalid_argument("empty permutation");
  return Permutation(std::move(v));
}

unsigned Permutation::length() const {
  unsigned inv = 0;
  for (std::size_t i = 0; i < w_.size(); ++i)
    for (std::size_t j = i + 1; j < w_.size(); ++j)
      if (w_[i] > w_[j]) ++inv;
  return inv;
}

Permutation Permutation::times_s(unsigned i) const {
  if (i < 1 || i >= w_.size()) throw std::invalid_argument("transposition index out of range");
  Permutation r = *this;
  std::swap(r.w_[i - 1], r.w_[i]);
  return r;
}

std::string Permutation::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w_[i]);
  }
  return s;
}

std::vector<Permutation> all_permutations(unsigned n) {
  std::vector<unsigned> v(n);
  std::iota(v.begin(), v.end(), 1u);
  std::vector<Permutation> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Permutation longest_element(unsigned n) {
  std::vector<unsigned> v(n);
  for (unsigned i = 0; i < n; ++i) v[i] = n - i;
  return Permutation(std::move(v));
}

RankMatrix rank_matrix(const Permutation& w) {
  const unsigned n = w.n();
  RankMatrix d(n + 1, std::vector<unsigned>(n + 1, 0));
  for (unsigned p = 1; p <= n; ++p)
    for (unsigned q = 1; q <= n; ++q)
      d[p][q] = d[p - 1][q] + (w(p) <= q ? 1 : 0);
  return d;
}

std::vector<unsigned> jump_points(const Permutation& w) {
  const auto d = rank_matrix(w);
  const unsigned n = w.n();
  std::vector<unsigned> out;
  for (unsigned p = 1; p <= n; ++p)
    for (unsigned q = 1; q <= n; ++q)
      if (d[p][q] - d[p - 1][q] == 1) {
        out.push_back(q);
        break;
      }
  return out;
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
  if (u.n() != w.n()) throw std::invalid_argument("bruhat_leq: size mismatch");
  const auto du = rank_matrix(u), dw = rank_matrix(w);
  for (unsigned p = 1; p <= u.n(); ++p)
    for (unsigned q = 1; q <= u.n(); ++q)
      if (du[p][q] < dw[p][q]) return false;
  return true;
}

std::vector<unsigned> ReducedWord::block(std::size_t t) const {
  return {letters.begin() + static_cast<std::ptrdiff_t>(block_bounds[t - 1]),
          letters.begin() + static_cast<std::ptrdiff_t>(block_bounds[t])};
}

Permutation word_product(unsigned n, const std::vector<unsigned>& letters) {
  Permutation p = Permutation::identity(n);
  for (unsigned d : letters) p = p.times_s(d);
  return p;
}

ReducedWord bubblesort_word(const Permutation& w) {
  const unsigned n = w.n();
  ReducedWord word;
  word.n = n;
  word.block_bounds.push_back(0);
  for (unsigned m = n; m >= 2; --m) {
    // Position of w(m) among the values still unplaced, all of which sit in 1..m.
    unsigned s = 1;
    for (unsigned i = 1; i < m; ++i)
      if (w(i) < w(m)) ++s;
    for (unsigned d = s; d < m; ++d) word.letters.push_back(d);
    word.block_bounds.push_back(word.letters.size());
  }
  return word;
}

std::vector<std::optional<std::size_t>> last_occurrence_indices(const ReducedWord& word) {
  std::vector<std::optional<std::size_t>> p(word.n > 0 ? word.n - 1 : 0);
  for (std::size_t j = 0; j < word.letters.size(); ++j) p[word.letters[j] - 1] = j + 1;
  return p;
}

std::vector<std::size_t> cumulative_transposition_counts(const Permutation& w) {
  const unsigned n = w.n();
  std::vector<std::size_t> out(n > 0 ? n - 1 : 0, 0);
  for (unsigned i = 1; i < n; ++i)
    for (unsigned j = i + 1; j <= n; ++j)
      for (unsigned k = 1; k < j; ++k)
        if (w(k) > w(j)) ++out[i - 1];
  return out;
}

BSIncidence bs_incidence(const std::vector<unsigned>& letters) {
  BSIncidence inc;
  inc.d = letters;
  for (std::size_t j = 0; j < letters.size(); ++j) {
    BSRef left{std::nullopt, letters[j] - 1};
    BSRef right{std::nullopt, letters[j] + 1};
    for (std::size_t i = 0; i < j; ++i) {
      if (letters[i] + 1 == letters[j]) left.index = i + 1;
      if (letters[i] == letters[j] + 1) right.index = i + 1;
    }
    inc.left.push_back(left);
    inc.right.push_back(right);
  }
  return inc;
}

}  // namespace bioflag
