#pragma once

// The subcommands of the btq command-line tool. Each returns a RunReport;
// run_cli does the argument parsing, printing and exit-code mapping.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "btq/fano.hpp"
#include "btq/report.hpp"

namespace btq::commands {

/// Bad arguments; maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "P1,L2" -> the flag (P1, L2).
fano::Flag parse_flag(const std::string& text);

struct FanoArgs {
  bool verify = false;
  std::optional<std::string> orbits;  // trivial, d8, d16, stabilizer, collineations, full
  std::string flag = "P1,L2";
};
report::RunReport cmd_fano(const FanoArgs& a);

struct BuildingArgs {
  unsigned p = 2;
  unsigned radius = 1;
  std::string format = "json";  // json or dot
  std::size_t fuzz = 0;         // canonical-form fuzz cases
  std::uint64_t seed = 1;
};
report::RunReport cmd_building(const BuildingArgs& a);

struct CentralFiberArgs {
  bool report = false;
  std::string format = "text";  // text or json
};
report::RunReport cmd_central_fiber(const CentralFiberArgs& a);

struct QuotientArgs {
  std::string flag = "P1,L2";
  bool raw_labels = false;  // orbit labels instead of bar names
  std::string format = "text";
};
report::RunReport cmd_quotient(const QuotientArgs& a);

struct Pi1Args {
  std::optional<std::string> input;  // presentation text, or cw text with `complex`
  bool complex = false;
  std::optional<std::string> basepoint;
  std::size_t max_cosets = 100'000;
  bool simplify = false;
};
report::RunReport cmd_pi1(const Pi1Args& a);

struct InvariantsArgs {
  long n = 16;
  long q = 2;
  std::optional<long> descend;
  std::optional<long> pg;
  std::optional<long> irregularity;
};
report::RunReport cmd_invariants(const InvariantsArgs& a);

struct VerifyArgs {
  std::string flag = "P1,L2";
  bool flag_sweep = false;
  std::size_t max_cosets = 100'000;
};
report::RunReport cmd_verify_paper(const VerifyArgs& a);

/// Parses argv, runs the subcommand and prints to out/err. Returns the exit
/// status: 0 all assertions pass, 1 an assertion or computation failed,
/// 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace btq::commands
