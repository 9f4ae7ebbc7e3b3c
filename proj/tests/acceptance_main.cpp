// Acceptance suite: one pass/fail line per criterion, exact checks only.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "cubestrata/verify.hpp"

int main() {
  using clock = std::chrono::steady_clock;
  uint64_t seed = 20240915;
  if (const char* env = std::getenv("CUBESTRATA_SEED")) seed = std::strtoull(env, nullptr, 10);
  bool all = true;
  auto t0 = clock::now();
  for (int i = 1; i <= 12; ++i) {
    auto start = clock::now();
    cubestrata::CriterionResult r = cubestrata::run_criterion(i, seed);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start).count();
    std::printf("%s  [%2d] %s: %s (%lld ms)\n", r.passed ? "PASS" : "FAIL", r.index,
                r.name.c_str(), r.detail.c_str(), static_cast<long long>(ms));
    all &= r.passed;
  }
  auto total = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count();
  std::printf("%s: acceptance suite finished in %lld ms (seed %llu)\n", all ? "PASS" : "FAIL",
              static_cast<long long>(total), static_cast<unsigned long long>(seed));
  return all ? 0 : 1;
}
