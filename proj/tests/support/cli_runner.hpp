#pragma once

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace boxcube::testing {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

/// Runs the CLI with `args` (already shell-quoted), capturing stdout.
inline CliResult run_cli(const std::string& args, const std::filesystem::path& scratch,
                         const std::string& env = "") {
  const auto capture = scratch / "stdout.txt";
  const std::string cmd = env + (env.empty() ? "" : " ") + std::string(BOXCUBE_CLI) + " " + args + " > " +
                          capture.string() + " 2>" + (scratch / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(capture);
  std::ostringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace boxcube::testing
