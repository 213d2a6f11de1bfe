#include "btq/report.hpp"

#include <algorithm>
#include <sstream>

namespace btq::report {

bool RunReport::check(std::string name, const std::string& expected, const std::string& actual) {
  const bool pass = expected == actual;
  assertions.push_back({std::move(name), expected, actual, pass});
  return pass;
}

bool RunReport::check(std::string name, long expected, long actual) {
  return check(std::move(name), std::to_string(expected), std::to_string(actual));
}

bool RunReport::check(std::string name, bool condition) {
  return check(std::move(name), std::string("true"), std::string(condition ? "true" : "false"));
}

bool RunReport::all_pass() const {
  return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.pass; });
}

nlohmann::json RunReport::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& a : assertions) {
    list.push_back({{"name", a.name}, {"expected", a.expected}, {"actual", a.actual}, {"pass", a.pass}});
  }
  nlohmann::json j = {{"version", kSchemaVersion},
                      {"command", command},
                      {"assertions", list},
                      {"pass", all_pass()},
                      {"result", result}};
  if (wall_time_ms) j["wall_time_ms"] = *wall_time_ms;
  return j;
}

std::string RunReport::table() const {
  std::size_t width = 4;
  for (const auto& a : assertions) width = std::max(width, a.name.size());
  std::ostringstream os;
  for (const auto& a : assertions) {
    os << (a.pass ? "PASS  " : "FAIL  ") << a.name << std::string(width - a.name.size() + 2, ' ');
    os << "expected " << a.expected;
    if (!a.pass) os << ", got " << a.actual;
    os << '\n';
  }
  const auto passed = std::count_if(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.pass; });
  os << passed << "/" << assertions.size() << " assertions passed";
  if (wall_time_ms) os << " in " << static_cast<long>(*wall_time_ms) << " ms";
  os << '\n';
  return os.str();
}

}  // namespace btq::report
