// Command implementations behind the m3 binary; kept in the library so the
// golden tests can drive them directly.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace m3 {

struct CliOptions {
  std::string format = "table";  // table | json | csv
  int jobs = 0;                  // 0 = all hardware threads
  std::uint64_t seed = 0;
};

struct ComputeArgs {
  std::string family;             // family name, with params below
  std::vector<long long> params;
  std::string braid_json;         // {"strands":n,"word":[..]}
  std::string diagram_json;       // diagram object or any accepted input object
  std::vector<std::string> invariants;  // empty = full report
  CliOptions opts;
};

int cmd_compute(const ComputeArgs& args, std::ostream& out, std::ostream& err);
int cmd_paper_table(const CliOptions& opts, std::ostream& out, std::ostream& err);
int cmd_sweep_asymptotic(const std::string& family, const std::vector<long long>& params,
                         const std::vector<std::vector<int>>& lambdas, const CliOptions& opts,
                         std::ostream& out, std::ostream& err);
int cmd_oracle_check(int max_crossings, int seeds, const CliOptions& opts, std::ostream& out,
                     std::ostream& err);

// exit codes: 0 ok, 2 parse error, 3 precondition violation, 4 oracle failure
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitOracleFail = 4;

}  // namespace m3
