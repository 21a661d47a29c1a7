// Copyright 2026 The ccmv Authors
// SPDX-License-Identifier: Apache-2.0

// Runs the ccmv binary and captures stdout and the exit code.

#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

struct RunResult {
  int code = -1;
  std::string out;
};

inline RunResult run_ccmv(const std::string& args) {
  RunResult r;
  const std::string cmd = std::string(CCMV_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}
