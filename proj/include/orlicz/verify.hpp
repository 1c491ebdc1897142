#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "orlicz/json_io.hpp"

namespace orlicz {

struct CaseRecord {
  std::string invariant;  // module invariant instantiated by the case
  std::string id;
  bool passed = false;
  double slack = 0.0;  // measured margin; negative means violated
  json inputs;         // serialized for replay on failure
};

struct SuiteResult {
  std::string suite;
  size_t run = 0, passed = 0, failed = 0;
  std::vector<CaseRecord> cases;
};

// suite in {norms, conjugacy, witness, slices}; budget 0 picks per-suite defaults
SuiteResult run_suite(const std::string& suite, uint64_t seed, size_t budget);

// expands "all"; deterministic case order
std::vector<SuiteResult> run_verify(const std::string& suite, uint64_t seed, size_t budget);

// deterministic random step functions / unit challengers for suites and tests
StepFunction random_step_function(std::mt19937_64& rng, const Measure& m, double max_value,
                                  int max_levels = 6);
StepFunction random_unit_challenger(const OrliczFunction& f, std::mt19937_64& rng,
                                    const Measure& m, double max_value);

}  // namespace orlicz
