#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "domfix/adversary.hpp"
#include "domfix/fixer.hpp"

namespace domfix::cli {

enum class Format { JSON, CSV, TEXT };

struct GammaRecord {
  std::string graph6;
  int n = 0;
  int gamma = 0;
  std::vector<int> witness;
};

struct AnalyzeRecord {
  std::string graph6;
  int n = 0;
  int m = 0;
  int gamma = 0;
  bool prism_fixer = false;
  bool truncated = false;
  std::string note;  // empty = none
  std::vector<SymmetricGammaSet> sets;
  std::optional<EvenStructure> structure;
  std::optional<bool> invariants_ok;
  std::optional<bool> intersection_ok;
  std::vector<AnalyzeRecord> components;
};

struct VerifyRecord {
  std::string graph6;
  int n = 0;
  int m = 0;
  WitnessReport report;
};

struct VerifySummary {
  long long total = 0;
  long long violations = 0;
  long long not_found = 0;
  long long errors = 0;
  std::map<std::string, long long> routes;
};

// Column header line for CSV, empty for the other formats.
std::string gamma_header(Format f);
std::string analyze_header(Format f);
std::string verify_header(Format f);

std::string format_gamma(Format f, const GammaRecord& r);
std::string format_analyze(Format f, const AnalyzeRecord& r);
std::string format_verify(Format f, const VerifyRecord& r);
std::string format_verify_summary(Format f, const VerifySummary& s);

}  // namespace domfix::cli
