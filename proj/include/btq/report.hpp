#pragma once

// Machine-readable results of a CLI run.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace btq::report {

inline constexpr const char* kSchemaVersion = "1";

struct Assertion {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct RunReport {
  std::string command;
  std::vector<Assertion> assertions;
  std::optional<double> wall_time_ms;
  nlohmann::json result;  // command-specific payload
  std::string text;       // human-readable payload printed before the table

  /// Records an assertion comparing the string forms of expected and actual.
  bool check(std::string name, const std::string& expected, const std::string& actual);
  bool check(std::string name, long expected, long actual);
  bool check(std::string name, bool condition);

  bool all_pass() const;
  int exit_code() const { return all_pass() ? 0 : 1; }

  nlohmann::json to_json() const;
  std::string table() const;
};

}  // namespace btq::report
