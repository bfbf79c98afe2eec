#include "bioflag/bott_samelson.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bioflag/qcount.hpp"

namespace bioflag {

namespace {

std::vector<Subspace> standard_flag(PrimeField f, unsigned n) {
  std::vector<Subspace> F;
  for (unsigned i = 0; i <= n + 1; ++i) F.push_back(standard_F(f, n, std::min(i, n)));
  return F;
}

Json perm_config(const Permutation& w, PrimeField f, std::uint64_t budget) {
  return Json{{"perm", w.one_line()}, {"n", w.n()}, {"field", f.modulus()}, {"budget", budget}};
}

}  // namespace

const Subspace& resolve_ref(const BSRef& ref, const BSPoint& pt, const std::vector<Subspace>& F) {
  return ref.index ? pt[*ref.index - 1] : F[ref.fixed_dim];
}

bool is_bs_point(const BSPoint& pt, const std::vector<unsigned>& letters, unsigned n) {
  if (pt.size() != letters.size()) return false;
  if (pt.empty()) return true;
  const auto F = standard_flag(pt.front().field(), n);
  const auto inc = bs_incidence(letters);
  for (std::size_t j = 0; j < pt.size(); ++j) {
    if (pt[j].dim() != letters[j]) return false;
    if (!pt[j].contains(resolve_ref(inc.left[j], pt, F))) return false;
    if (!resolve_ref(inc.right[j], pt, F).contains(pt[j])) return false;
  }
  return true;
}

std::vector<BSPoint> enumerate_bs(const std::vector<unsigned>& letters, unsigned n, PrimeField f,
                                  std::uint64_t budget) {
  for (unsigned d : letters)
    if (d < 1 || d >= n) throw std::invalid_argument("letter out of range");
  require_budget("Bott-Samelson enumeration",
                 static_cast<double>(ipow(f.modulus() + 1, static_cast<unsigned>(letters.size()))),
                 budget);
  const auto F = standard_flag(f, n);
  const auto inc = bs_incidence(letters);
  std::vector<BSPoint> out;
  BSPoint cur;
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == letters.size()) {
      out.push_back(cur);
      return;
    }
    const Subspace lower = resolve_ref(inc.left[j], cur, F);
    const Subspace upper = resolve_ref(inc.right[j], cur, F);
    for (auto& s : subspaces_between(lower, upper, letters[j])) {
      cur.push_back(std::move(s));
      self(self, j + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

CompleteFlag bs_projection(const BSPoint& pt, const ReducedWord& word, PrimeField f) {
  const unsigned n = word.n;
  const auto p = last_occurrence_indices(word);
  CompleteFlag flag;
  for (unsigned i = 1; i < n; ++i)
    flag.push_back(p[i - 1] ? pt[*p[i - 1] - 1] : standard_F(f, n, i));
  flag.push_back(Subspace::whole(f, n));
  return flag;
}

BSPoint shat_to_bs(const GridPoint& pt, const Permutation& w) {
  const unsigned n = w.n();
  std::vector<unsigned> active(n);
  for (unsigned i = 0; i < n; ++i) active[i] = i + 1;
  BSPoint out;
  for (unsigned m = n; m >= 2; --m) {
    const auto pos = static_cast<std::size_t>(std::find(active.begin(), active.end(), w(m)) - active.begin());
    for (std::size_t t = pos + 1; t < active.size(); ++t) out.push_back(pt.at(m - 1, active[t]));
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(pos));
  }
  return out;
}

EnumReport enumerate_bs_report(const Permutation& w, PrimeField f, std::uint64_t budget) {
  const auto start = Clock::now();
  EnumReport rep;
  rep.command = "bs enumerate";
  rep.config = perm_config(w, f, budget);
  const auto word = bubblesort_word(w);
  const auto pts = enumerate_bs(word.letters, w.n(), f, budget);
  bool valid = true;
  for (const auto& pt : pts) valid = valid && is_bs_point(pt, word.letters, w.n());
  const auto tower = ipow(f.modulus() + 1, w.length());
  rep.counts["bs"] = pts.size();
  rep.counts["tower"] = tower;
  rep.add_check("incidences", valid);
  rep.add_check("tower_count", pts.size() == tower,
                std::to_string(pts.size()) + " vs " + std::to_string(tower));
  rep.data["word"] = word.letters;
  for (std::size_t i = 0; i < pts.size() && i < 4; ++i)
    rep.add_witness("bs_point_" + std::to_string(i), pts[i]);
  rep.wall_time_ms = elapsed_ms(start);
  return rep;
}

EnumReport bbs_iso(const Permutation& w, PrimeField f, std::uint64_t budget) {
  const auto start = Clock::now();
  EnumReport rep;
  rep.command = "bs iso";
  rep.config = perm_config(w, f, budget);
  const unsigned n = w.n();
  const auto word = bubblesort_word(w);
  const auto shat = enumerate_shat(w, f, budget);
  const auto bs = enumerate_bs(word.letters, n, f, budget);
  const std::set<BSPoint> bs_set(bs.begin(), bs.end());

  std::set<BSPoint> image;
  bool lands = true, commutes = true;
  for (const auto& g : shat) {
    auto v = shat_to_bs(g, w);
    if (!is_bs_point(v, word.letters, n) || !bs_set.count(v)) {
      if (lands) rep.add_witness("image_not_in_bs", v);
      lands = false;
      continue;
    }
    if (!(bs_projection(v, word, f) == project_to_flag(g))) {
      if (commutes) rep.add_witness("projection_mismatch", project_to_flag(g));
      commutes = false;
    }
    image.insert(std::move(v));
  }

  const auto last = last_occurrence_indices(word);
  const auto sums = cumulative_transposition_counts(w);
  Json disagreements = Json::array();
  for (unsigned i = 1; i < n; ++i)
    if (!last[i - 1] || *last[i - 1] != sums[i - 1])
      disagreements.push_back(Json{{"i", i},
                                   {"last_occurrence", last[i - 1] ? Json(*last[i - 1]) : Json(nullptr)},
                                   {"cumulative_count", sums[i - 1]}});

  rep.counts["shat"] = shat.size();
  rep.counts["bs"] = bs.size();
  rep.counts["image"] = image.size();
  rep.add_check("lands_in_bs", lands);
  rep.add_check("injective", lands && image.size() == shat.size());
  rep.add_check("surjective", image == bs_set);
  rep.add_check("commutes_with_projections", commutes);
  rep.data["word"] = word.letters;
  Json blocks = Json::array();
  for (std::size_t t = 1; t < word.block_bounds.size(); ++t) blocks.push_back(word.block(t));
  rep.data["blocks"] = blocks;
  rep.data["index_disagreements"] = disagreements;
  rep.wall_time_ms = elapsed_ms(start);
  return rep;
}

EnumReport verify_first_block(const Permutation& w, PrimeField f, std::uint64_t budget) {
  const auto start = Clock::now();
  EnumReport rep;
  rep.command = "bs first-block";
  rep.config = perm_config(w, f, budget);
  const unsigned n = w.n();
  const unsigned a = w(n);
  const unsigned m = n - a;
  const auto word = bubblesort_word(w);
  const auto bs = enumerate_bs(word.letters, n, f, budget);

  std::set<BSPoint> projected;
  for (const auto& pt : bs) projected.emplace(pt.begin(), pt.begin() + m);

  // Every tuple of the right dimensions, filtered by the chain conditions.
  std::vector<std::vector<Subspace>> choices;
  for (unsigned j = 1; j <= m; ++j)
    choices.push_back(enumerate_subspaces(standard_F(f, n, a + j), a + j - 1));
  const Subspace base = standard_F(f, n, a - 1);
  std::set<BSPoint> chains;
  BSPoint cur;
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == m) {
      chains.insert(cur);
      return;
    }
    for (const auto& s : choices[j]) {
      const bool ok = j == 0 ? s.contains(base) : s.contains(cur.back());
      if (!ok) continue;
      cur.push_back(s);
      self(self, j + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);

  const auto expected = ipow(f.modulus() + 1, m);
  rep.counts["block_length"] = m;
  rep.counts["projection"] = projected.size();
  rep.counts["chains"] = chains.size();
  rep.add_check("projection_equals_chains", projected == chains);
  rep.add_check("chain_count", chains.size() == expected,
                std::to_string(chains.size()) + " vs " + std::to_string(expected));
  rep.wall_time_ms = elapsed_ms(start);
  return rep;
}

}  // namespace bioflag
