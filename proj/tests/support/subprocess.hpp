#pragma once

// Minimal subprocess capture for CLI contract tests.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace skeinrep::test {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

inline std::string cli_binary() {
  if (const char* p = std::getenv("SKEINREP_BIN")) return p;
  throw std::runtime_error("SKEINREP_BIN not set; run through ctest");
}

inline RunResult run_cli(const std::string& args) {
  const std::string cmd = cli_binary() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  RunResult res;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
  const int status = pclose(pipe);
  res.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace skeinrep::test
