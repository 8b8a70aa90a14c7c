#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace jc {

enum ExitCode { kExitOk = 0, kExitInvariant = 1, kExitUsage = 2, kExitBudget = 3 };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string command;
  int n = 0;
  std::optional<std::vector<int>> h, lambda, mu, h1, h2;
  std::vector<int> primes{2};
  int p = 2;
  bool cosets = false;
  int max_free = -1;
  long max_group_order = 1000000;
  std::string format = "md";
  std::string out;
  std::string suite = "all";
  int threads = 1;

  // throws UsageError
  void validate() const;
  // fields present in j override the current values
  void merge_json(const nlohmann::json& j);
};

// Each command writes its report to `out` and returns an ExitCode.
int cmd_table(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);
int cmd_brute(const RunConfig& config, std::ostream& out);
// validates, dispatches, and honours config.out
int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace jc
