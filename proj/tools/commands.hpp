#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "sqfree/report.hpp"

namespace sqfree::cli {

struct Options {
  std::string command;
  std::string file;
  std::string format = "text";
  std::string order;   // 1-based rows, lowest priority first
  std::string gammas;  // "1,1,0,1;1,0,1,1"
  std::string betas;
  bool force = false;
  std::string degree;
  std::size_t row = 0;  // 1-based
  bool verify = false;
  bool patterns = false;
  int n = 0;
  std::size_t s = 0;
  std::size_t l = 0;
  std::uint64_t seed = 0;
};

struct Outcome {
  InvariantReport report;
  int exit_code = 0;
};

/// Throws InputError / ConsistencyError; verification mismatches are
/// reported through exit_code 2.
Outcome run_command(const Options& options);

std::string render_text(const InvariantReport& report);

}  // namespace sqfree::cli
