#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "bioflag/bott_samelson.hpp"
#include "bioflag/building.hpp"
#include "bioflag/embres.hpp"
#include "bioflag/suite.hpp"

namespace bioflag::cli {

namespace {

struct Options {
  std::string perm;
  std::optional<unsigned> n;
  std::optional<unsigned> k;
  std::string beta;
  unsigned field = 2;
  std::uint64_t budget = kDefaultBudget;
  bool json = true;
  bool stable = false;
  std::string out;
};

Json perm_config(const Permutation& w) { return Json{{"perm", w.one_line()}, {"n", w.n()}}; }

Json labels_json(const std::vector<Label>& labels) {
  Json a = Json::array();
  for (const auto& l : labels) a.push_back(Json::array({l.row, l.col}));
  return a;
}

EnumReport rankmatrix_report(const Permutation& w) {
  EnumReport rep;
  rep.command = "rankmatrix";
  rep.config = perm_config(w);
  const auto d = rank_matrix(w);
  Json rows = Json::array();
  for (unsigned p = 1; p <= w.n(); ++p) {
    Json row = Json::array();
    for (unsigned q = 1; q <= w.n(); ++q) row.push_back(d[p][q]);
    rows.push_back(row);
  }
  rep.counts["length"] = w.length();
  rep.add_check("last_row_and_column", d[w.n()][w.n()] == w.n());
  rep.data["rank_matrix"] = rows;
  rep.data["jump_points"] = jump_points(w);
  return rep;
}

EnumReport building_report(const Permutation& w) {
  EnumReport rep;
  rep.command = "building";
  rep.config = perm_config(w);
  const auto b = build_building(w);
  const auto dedup = dedup_rank_matrix(w);
  const auto facts = check_building_facts(w);
  rep.counts["total"] = b.total();
  rep.counts["length"] = w.length();
  rep.add_check("total_is_length_plus_n_minus_1", b.total() == w.length() + w.n() - 1);
  rep.add_check("matches_rank_matrix_dedup", b.counts() == dedup.counts());
  std::string failures;
  for (const auto& f : facts.failures) failures += (failures.empty() ? "" : "; ") + f;
  rep.add_check("building_facts", facts.all(), failures);
  rep.data["per_level"] = b.counts();
  rep.data["raw_counts"] = dedup.raw_counts;
  Json floors = Json::array();
  for (const auto& f : b.floors) floors.push_back(labels_json(f));
  rep.data["floors"] = floors;
  return rep;
}

EnumReport bubblesort_report(const Permutation& w) {
  EnumReport rep;
  rep.command = "bubblesort";
  rep.config = perm_config(w);
  const auto word = bubblesort_word(w);
  rep.counts["length"] = word.size();
  rep.add_check("product_is_w", word_product(w.n(), word.letters) == w);
  rep.add_check("reduced", word.size() == w.length());
  rep.data["word"] = word.letters;
  Json blocks = Json::array();
  for (std::size_t t = 1; t < w.n(); ++t) blocks.push_back(word.block(t));
  rep.data["blocks"] = blocks;
  return rep;
}

Permutation need_perm(const Options& o) {
  if (o.perm.empty()) throw std::invalid_argument("--perm is required");
  return Permutation::parse(o.perm);
}

FrameConfig need_frame(const Options& o) {
  if (!o.n) throw std::invalid_argument("--n is required");
  if (o.beta.empty()) throw std::invalid_argument("--beta is required");
  auto beta = parse_beta(o.beta);
  if (o.k && *o.k != beta.size())
    throw std::invalid_argument("--k does not match the length of --beta");
  return FrameConfig(PrimeField(o.field), *o.n, std::move(beta));
}

void write_summary(const EnumReport& r, std::ostream& out) {
  out << r.command << ": " << (r.pass() ? "PASS" : "FAIL") << "\n";
  for (const auto& [key, value] : r.counts.items()) out << "  " << key << " = " << value.dump() << "\n";
  for (const auto& c : r.checks)
    out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << (c.detail.empty() ? "" : " " + c.detail) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact finite-field checks of bioriented flag constructions", "bioflag"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--perm", o.perm, "permutation in one-line notation, e.g. 2,3,1");
  app.add_option("--n", o.n, "ambient dimension");
  app.add_option("--k", o.k, "Grassmannian dimension (must equal the length of --beta)");
  app.add_option("--beta", o.beta, "multi-index, e.g. 1,3,5");
  app.add_option("--field", o.field, "prime field size")->capture_default_str();
  app.add_option("--budget", o.budget, "maximum enumerated states")->capture_default_str();
  app.add_flag("--json,!--no-json", o.json, "emit the JSON report (default)");
  app.add_flag("--stable", o.stable, "zero the wall-time field for byte comparison");
  app.add_option("--out", o.out, "write the report to FILE instead of standard output");

  std::function<EnumReport()> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  std::function<EnumReport()> fn) {
    auto* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  auto group = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->require_subcommand(1);
    return sub;
  };

  leaf(&app, "rankmatrix", "rank matrix of a permutation", [&] { return rankmatrix_report(need_perm(o)); });
  leaf(&app, "building", "building and apartment counts", [&] { return building_report(need_perm(o)); });
  leaf(&app, "bubblesort", "bubblesort reduced word", [&] { return bubblesort_report(need_perm(o)); });

  auto* biflag = group("biflag", "bioriented flag varieties");
  leaf(biflag, "enumerate", "enumerate grid points", [&] {
    return enumerate_biflag_report(need_perm(o), PrimeField(o.field), o.budget);
  });
  leaf(biflag, "verify", "verify the flag resolution", [&] {
    return verify_flres(need_perm(o), PrimeField(o.field), o.budget);
  });

  auto* bs = group("bs", "Bott-Samelson varieties");
  leaf(bs, "enumerate", "enumerate points for the bubblesort word", [&] {
    return enumerate_bs_report(need_perm(o), PrimeField(o.field), o.budget);
  });
  leaf(bs, "iso", "compare with the bioriented resolution", [&] {
    return bbs_iso(need_perm(o), PrimeField(o.field), o.budget);
  });
  leaf(bs, "first-block", "projection onto the first block", [&] {
    return verify_first_block(need_perm(o), PrimeField(o.field), o.budget);
  });

  auto* grass = group("grass", "Grassmannian graph-sum parametrizations");
  leaf(grass, "verify-phi", "graph sums onto the open set", [&] { return verify_phi(need_frame(o), o.budget); });
  leaf(grass, "verify-phistar", "dual graph sums", [&] { return verify_phi_star(need_frame(o), o.budget); });
  leaf(grass, "verify-transversal", "intersection of the two open sets", [&] {
    return verify_transversal_identity(need_frame(o), o.budget);
  });

  auto* wflag = group("wflag", "constrained flag variety and its resolution");
  leaf(wflag, "enumerate", "point counts", [&] { return enumerate_wflag_report(need_frame(o), o.budget); });
  leaf(wflag, "lift", "lift every point to the resolution", [&] { return lift_report(need_frame(o), o.budget); });
  leaf(wflag, "verify", "resolution properties", [&] { return verify_resolution(need_frame(o), o.budget); });

  auto* embres = group("embres", "embedded resolution");
  leaf(embres, "verify", "chart, cell and special fibre", [&] { return verify_embres(need_frame(o), o.budget); });

  leaf(&app, "suite", "run the acceptance criteria", [&] { return suite_report(run_suite()); });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  EnumReport rep;
  try {
    const auto start = Clock::now();
    rep = action();
    if (rep.command != "suite") rep.wall_time_ms = elapsed_ms(start);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (rep.config.is_object() && !rep.config.contains("budget") && rep.command != "suite")
    rep.config["budget"] = o.budget;

  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) {
      err << "error: cannot write " << o.out << "\n";
      return 2;
    }
  }
  std::ostream& sink = o.out.empty() ? out : file;
  if (o.json) sink << (o.stable ? dump_report_stable(rep) : dump_report(rep));
  else write_summary(rep, sink);
  return rep.pass() ? 0 : 1;
}

}  // namespace bioflag::cli
