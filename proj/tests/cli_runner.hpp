#pragma once

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <string>

// Runs the CLI binary (path injected by the build) and captures stdout.
struct CliResult {
  int exit_code = -1;
  double seconds = 0.0;
  std::string out;
};

inline CliResult run_cli(const std::string& args) {
  CliResult res;
  const std::string cmd = std::string(WPL_CLI_PATH) + " " + args;
  const auto t0 = std::chrono::steady_clock::now();
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return res;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) res.out.append(buf, n);
  const int rc = pclose(f);
  res.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  res.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return res;
}
