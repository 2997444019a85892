#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "gradekit/io.hpp"

namespace gradekit::cli {

/// Outcome of one command. Exit codes are a function of the verdict only:
/// 0 for pass/informational, 1 for a failed check (with witnesses), 2 for
/// usage or validation errors.
struct CheckReport {
  std::string command;
  enum class Verdict { pass, fail, informational } verdict = Verdict::informational;
  io::json witnesses = io::json::array();
  io::json details = io::json::object();
  long long timing_ms = 0;
};

int exit_code(const CheckReport& report);

/// Parses and executes one command line (without the program name).
/// All output goes to the given streams; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gradekit::cli
