#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hkts::verify {

struct CaseResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CaseResult> cases;
  bool pass = false;
};

std::vector<std::string> suite_names();  // linearity additivity saks-henstock uct mct riesz

/// Runs one catalog-driven theorem suite ("all" aggregates every suite).
std::vector<SuiteResult> run(const std::string& suite, uint64_t seed);

}  // namespace hkts::verify
