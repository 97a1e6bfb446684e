#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wittmod/scalar.hpp"

namespace wittmod::cli {

struct RunConfig {
  std::string command;
  std::string family = "omega";
  std::size_t n = 2;
  std::optional<Scalar> b;
  std::optional<Scalar> a;
  std::optional<CVec> lambda;
  std::optional<CVec> alpha;
  std::optional<int> m;
  std::optional<int> degree_bound;
  int slack = -1;
  std::optional<int> samples;  // default: 200 for check-axioms, 20 for analyze
  std::uint64_t seed = 1;
  int box = 9;
  std::string poly;
  // second module for `iso`
  std::optional<Scalar> b2;
  std::optional<Scalar> a2;
  std::optional<CVec> lambda2;
  std::string module_path;
  std::string output_path;
  bool json = false;
};

/// Bad or inconsistent parameters; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Report {
  nlohmann::ordered_json body;
  /// Every entry of body["checks"] passed.
  bool ok() const;
};

Report cmd_check_axioms(const RunConfig& cfg);
Report cmd_analyze(const RunConfig& cfg);
Report cmd_iso(const RunConfig& cfg);
Report cmd_member(const RunConfig& cfg);
Report cmd_reduce(const RunConfig& cfg);
Report cmd_quotient_dim(const RunConfig& cfg);

/// Dispatches on cfg.command.
Report run(const RunConfig& cfg);

/// Full command-line entry point (args exclude the program name). Returns the
/// process exit code: 0 when every check passed, 1 on a failed or
/// inconclusive check, 2 on usage errors.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wittmod::cli
