#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "records.hpp"

namespace domfix::cli {

struct RunConfig {
  std::string input = "-";       // file path or "-" for stdin
  long long budget = 100000;     // random fallback search attempts
  int cap = 12;                  // brute-force cross-check cutoff for gamma
  long long limit = 1000000;     // gamma-set enumeration limit
  std::uint64_t seed = 0;
  Format format = Format::JSON;
  int jobs = 1;
};

// Exit codes: 0 clean, 1 at least one theorem violation, 2 input or
// per-line processing errors (and no violations).
int run_gamma(const RunConfig& cfg, std::istream& in, std::ostream& out,
              std::ostream& err);
int run_analyze(const RunConfig& cfg, std::istream& in, std::ostream& out,
                std::ostream& err);
int run_verify(const RunConfig& cfg, std::istream& in, std::ostream& out,
               std::ostream& err);
int run_prism(const RunConfig& cfg, const std::string& cycles,
              std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace domfix::cli
