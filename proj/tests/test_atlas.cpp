#include <doctest.h>

#include "cubestrata/atlas.hpp"
#include "cubestrata/json_io.hpp"

using namespace cubestrata;

TEST_CASE("boundary atlas structure") {
  const BoundaryAtlas& a = boundary_atlas();
  REQUIRE(a.even_zero_index >= 0);
  const StratumRecord& even0 = a.strata[a.even_zero_index];
  CHECK(even0.dimension == 0);
  CHECK(even0.classification.cusp == CuspLabel::even);

  int subdivision_strata = 0;
  for (const StratumRecord& r : a.strata) {
    CHECK(r.dimension >= 0);
    CHECK(r.dimension <= 3);
    if (r.kind == StratumKind::subdivision_indexed) {
      ++subdivision_strata;
      CHECK(detect_corner_cuts(r.representative).empty());
      CHECK(r.representative.cells.size() > 1);
      CHECK(modify(r.representative) == r.representative);
      CHECK(stratum_dimension(r.representative) == r.dimension);
    }
  }
  // the six corner-cut-free orbits plus the five hard-coded coefficient strata
  CHECK(subdivision_strata == 6);
  CHECK(a.strata.size() == 11);

  // two-prism and three-pyramid orbits sit at dimension 3
  int dim3 = 0;
  for (const StratumRecord& r : a.strata)
    if (r.kind == StratumKind::subdivision_indexed && r.dimension == 3) ++dim3;
  CHECK(dim3 == 2);

  // closure order is graded: strictly below means strictly smaller dimension
  for (size_t i = 0; i < a.strata.size(); ++i)
    for (size_t j = 0; j < a.strata.size(); ++j)
      if (i != j && a.closure_leq[i][j]) CHECK(a.strata[i].dimension < a.strata[j].dimension);
}

TEST_CASE("maximal components are {3,3,1}") {
  CHECK(maximal_components(boundary_atlas()) == std::vector<int>{3, 3, 1});
}

TEST_CASE("even crosscheck counts agree") {
  GramLattice L = lattice_even();
  VinbergRun run = vinberg_run(L, L.default_v0, 10);
  SubdiagramClassification cls = classify_subdiagrams(coxeter_diagram(L, run.accepted), 4);
  CrosscheckReport rep = crosscheck_even(boundary_atlas(), cls);
  CHECK(rep.totals_equal);
  CHECK(rep.strata_total == 5);
  CHECK(rep.classes_total == 5);
  // toroidal pairing: elliptic rank r <-> dimension r, parabolic <-> divisors
  CHECK(rep.dimension_rule == "r");
  CHECK(rep.strata_by_dim[3] == 2);
  CHECK(rep.strata_by_dim[2] == 2);
  CHECK(rep.strata_by_dim[1] == 1);
  // mutation: dropping a class breaks the equality
  SubdiagramClassification mutated = cls;
  mutated.elliptic.pop_back();
  CHECK_FALSE(crosscheck_even(boundary_atlas(), mutated).totals_equal);
}

TEST_CASE("odd1 crosscheck is dimension-compatible") {
  CrosscheckReport rep = crosscheck_odd1(classify_subdiagrams_odd1(5, 4));
  CHECK(rep.totals_equal);
  CHECK(rep.strata_total == 3);
  CHECK(rep.rank_rule_consistent);
  // the A1 class pairs with the 2-dimensional stratum
  bool a1_to_dim2 = false;
  for (const auto& [cls, stratum] : rep.pairing)
    if (cls == "elliptic A1" && stratum.find("dim 2") != std::string::npos) a1_to_dim2 = true;
  CHECK(a1_to_dim2);
}

TEST_CASE("corner-cut subdivisions are not boundary strata") {
  VertexMask cut = VertexMask((1u << 0) | (1u << 1) | (1u << 2) | (1u << 4));
  Subdivision s;
  s.cells = {cut, VertexMask(0xFF & ~1u)};
  s.sort();
  Subdivision bullet = modify(s);
  CHECK(bullet.cells.size() == 1);  // irreducible pair, hence interior
  const BoundaryAtlas& a = boundary_atlas();
  for (const StratumRecord& r : a.strata)
    CHECK_FALSE(r.representative == canonical_subdivision(s));
}

TEST_CASE("atlas exports") {
  const BoundaryAtlas& a = boundary_atlas();
  std::string dot = atlas_dot(a);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("cusp") != std::string::npos);
  Json j = atlas_to_json(a);
  CHECK(j.at("strata").size() == a.strata.size());
  CHECK(j.at("maximal").size() == 3);
}
