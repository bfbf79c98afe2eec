#include "bioflag/report.hpp"

#include <algorithm>

namespace bioflag {

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool EnumReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void EnumReport::add_check(std::string name, bool pass, std::string detail) {
  checks.push_back({std::move(name), pass, std::move(detail)});
}

void EnumReport::add_witness(const std::string& label, const Subspace& s) {
  if (witnesses.size() >= kMaxWitnesses) return;
  witnesses.push_back(Json{{"label", label}, {"spaces", Json::array({subspace_json(s)})}});
}

void EnumReport::add_witness(const std::string& label, const std::vector<Subspace>& spaces) {
  if (witnesses.size() >= kMaxWitnesses) return;
  witnesses.push_back(Json{{"label", label}, {"spaces", subspaces_json(spaces)}});
}

Json EnumReport::to_json() const {
  Json j;
  j["command"] = command;
  j["config"] = config;
  j["counts"] = counts;
  Json cs = Json::array();
  for (const auto& c : checks) cs.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = cs;
  j["witnesses"] = witnesses;
  j["data"] = data;
  j["pass"] = pass();
  j["wall_time_ms"] = wall_time_ms;
  return j;
}

Json subspace_json(const Subspace& s) {
  return Json{{"dim", s.dim()}, {"ambient", s.ambient_dim()}, {"basis", s.basis().to_ints()}};
}

Json subspaces_json(const std::vector<Subspace>& spaces) {
  Json a = Json::array();
  for (const auto& s : spaces) a.push_back(subspace_json(s));
  return a;
}

std::string dump_report(const EnumReport& r) { return r.to_json().dump(2) + "\n"; }

std::string dump_report_stable(const EnumReport& r) {
  EnumReport copy = r;
  copy.wall_time_ms = 0;
  return dump_report(copy);
}

}  // namespace bioflag
