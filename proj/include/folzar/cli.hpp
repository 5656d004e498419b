#pragma once

#include <string>
#include <vector>

namespace folzar::cli {

struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// Exit codes: 0 success, 1 input error, 2 semantic validation failure,
// 3 theorem/oracle divergence, 4 missing-data refusal.
RunResult run(const std::vector<std::string>& args);

}  // namespace folzar::cli
