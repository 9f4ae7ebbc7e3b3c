#pragma once

#include <map>

#include "cubestrata/classifier.hpp"
#include "cubestrata/corner_cuts.hpp"
#include "cubestrata/vinberg.hpp"

namespace cubestrata {

struct EvenZeroStratumNotFound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class StratumKind { subdivision_indexed, coefficient };

struct StratumRecord {
  std::string id;
  StratumKind kind = StratumKind::subdivision_indexed;
  Subdivision representative;  // orbit representative (carrier subdivision for
                               // coefficient strata)
  int orbit_size = 0;
  int dimension = 0;
  CoefficientAssignment sample{};  // coefficients realizing the stratum
  DegenerationReport classification;
  std::string description;
};

struct BoundaryAtlas {
  std::vector<StratumRecord> strata;
  // closure_leq[i][j]: stratum i lies in the closure of stratum j
  std::vector<std::vector<bool>> closure_leq;
  std::vector<int> maximal;
  int even_zero_index = -1;
};

const BoundaryAtlas& boundary_atlas();  // memoized

// Dimensions of the maximal boundary strata, sorted descending.
std::vector<int> maximal_components(const BoundaryAtlas& atlas);

struct CrosscheckReport {
  std::map<int, int> strata_by_dim;
  std::map<std::string, int> classes_by_kind;  // "elliptic r<k>" / "parabolic r<k>"
  int strata_total = 0, classes_total = 0;
  bool totals_equal = false;
  bool rank_rule_consistent = false;  // elliptic rank r <-> dim 3-r, parabolic <-> dim 0
  // which dimension rule matches exactly: "3-r", "r" (toroidal), or "none"
  std::string dimension_rule = "none";
  std::vector<std::pair<std::string, std::string>> pairing;
};

CrosscheckReport crosscheck_even(const BoundaryAtlas& atlas, const SubdiagramClassification& cls);
CrosscheckReport crosscheck_odd1(const SubdiagramClassification& cls);

std::string atlas_dot(const BoundaryAtlas& atlas);

}  // namespace cubestrata
