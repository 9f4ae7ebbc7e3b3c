#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cubestrata/rational.hpp"

namespace cubestrata {

struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One constraint: coeffs . x  (>= | > | ==)  rhs.
struct LinRow {
  std::vector<Rat> coeffs;
  Rat rhs;
  enum Kind { GE, GT, EQ } kind = GE;
};

struct LinearSystem {
  int nvars = 0;
  std::vector<LinRow> rows;
};

struct FarkasCertificate {
  // multipliers[i] >= 0 applied to the >=/> rows of the expanded system
  // (equalities split into two inequalities). Recombining yields 0 >= c
  // with c > 0, or 0 > c with c >= 0.
  std::vector<std::pair<int, Rat>> multipliers;
  Rat combined_rhs;
  bool combined_strict = false;
};

struct LpResult {
  bool feasible = false;
  std::vector<Rat> witness;                  // set when feasible
  std::optional<FarkasCertificate> refutation;  // set when infeasible
};

// Exact feasibility of a mixed weak/strict rational system by
// Fourier-Motzkin elimination. Strict rows are handled by maximizing an
// auxiliary slack: row.x >= rhs + lambda for every strict row, then
// testing sup lambda > 0.
LpResult lp_feasible(const LinearSystem& sys);

// Re-derives the contradiction from the certificate; used by tests.
bool check_refutation(const LinearSystem& sys, const FarkasCertificate& cert);

}  // namespace cubestrata
