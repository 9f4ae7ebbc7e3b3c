#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cubestrata {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

// The acceptance suite; every check is exact. The seed drives the
// randomized batches (bullet-map heights, hyperdeterminant samples) and is
// echoed in the details for reproducibility.
std::vector<CriterionResult> run_all_criteria(uint64_t seed = 20240915);
CriterionResult run_criterion(int index, uint64_t seed = 20240915);

}  // namespace cubestrata
