#pragma once

#include <chrono>
#include <cstddef>
#include <string>
#include <vector>

#include "bioflag/subspace.hpp"
#include "json.hpp"

namespace bioflag {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start);

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
};

/// Result of one verification run. Everything except wall_time_ms is a pure
/// function of the configuration.
struct EnumReport {
  static constexpr std::size_t kMaxWitnesses = 16;

  std::string command;
  Json config = Json::object();
  Json counts = Json::object();
  std::vector<Check> checks;
  Json witnesses = Json::array();
  Json data = Json::object();
  double wall_time_ms = 0;

  bool pass() const;
  void add_check(std::string name, bool pass, std::string detail = {});
  /// Records a labelled subspace; silently capped at kMaxWitnesses.
  void add_witness(const std::string& label, const Subspace& s);
  void add_witness(const std::string& label, const std::vector<Subspace>& spaces);
  Json to_json() const;
};

Json subspace_json(const Subspace& s);
Json subspaces_json(const std::vector<Subspace>& spaces);

/// Serialized report, two-space indented, trailing newline.
std::string dump_report(const EnumReport& r);
/// Same with the wall-time field zeroed, for byte comparison.
std::string dump_report_stable(const EnumReport& r);

}  // namespace bioflag
