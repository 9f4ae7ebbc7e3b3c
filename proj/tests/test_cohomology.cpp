#include <doctest.h>

#include <algorithm>
#include <random>

#include "cubestrata/cohomology.hpp"

using namespace cubestrata;

namespace {

VertexMask mask_of(std::initializer_list<const char*> labels) {
  VertexMask m = 0;
  for (const char* s : labels)
    m |= VertexMask(1u << coords_vid(s[0] - '0', s[1] - '0', s[2] - '0'));
  return m;
}

Subdivision two_prisms() {
  Subdivision s;
  s.cells = {mask_of({"000", "100", "010", "001", "101", "011"}),
             mask_of({"100", "010", "110", "101", "011", "111"})};
  s.sort();
  return s;
}

Subdivision three_pyramids() {
  Subdivision s;
  s.cells = {mask_of({"000", "100", "010", "110", "111"}),
             mask_of({"000", "010", "001", "011", "111"}),
             mask_of({"000", "100", "001", "101", "111"})};
  s.sort();
  validate_subdivision(s);
  return s;
}

}  // namespace

TEST_CASE("nerve construction") {
  Subdivision trivial;
  trivial.cells = {VertexMask(0xFF)};
  NerveComplex n = build_nerve(trivial);
  CHECK(n.cell_lattices.size() == 1);
  CHECK(n.cell_lattices[0].rows == 4);
  CHECK(n.pairs.empty());

  NerveComplex p = build_nerve(two_prisms());
  REQUIRE(p.pairs.size() == 1);
  CHECK(p.pairs[0].lattice.rows == 3);  // shared rectangle

  NerveComplex t = build_nerve(three_pyramids());
  CHECK(t.pairs.size() == 3);
  REQUIRE(t.triples.size() == 1);
  CHECK(t.triples[0].lattice.rows == 2);  // common diagonal
}

TEST_CASE("h1 is trivial for the basic subdivisions") {
  Subdivision trivial;
  trivial.cells = {VertexMask(0xFF)};
  CHECK(h1_torus(trivial).trivial());
  CHECK(h1_torus(two_prisms()).trivial());
  CHECK(h1_torus(three_pyramids()).trivial());
}

TEST_CASE("h1 is independent of cell ordering") {
  Subdivision s = three_pyramids();
  GenericComplex g = GenericComplex::from_subdivision(s);
  std::mt19937_64 rng(13);
  for (int t = 0; t < 6; ++t) {
    std::shuffle(g.cells.begin(), g.cells.end(), rng);
    CHECK(h1_generic(g).trivial());
  }
}

TEST_CASE("2-dimensional analogue: four unit squares around a vertex") {
  GenericComplex g;
  g.ambient_dim = 2;
  auto square = [](long x, long y) {
    return std::vector<std::vector<long>>{{x, y}, {x + 1, y}, {x, y + 1}, {x + 1, y + 1}};
  };
  g.cells = {square(0, 0), square(-1, 0), square(-1, -1), square(0, -1)};
  AbelianGroupDescriptor h = h1_generic(g);
  CHECK(h.trivial());
}

TEST_CASE("a genuine 1-cycle is detected") {
  // hand-built nerve of a triangle of cells with rank-1 overlaps and no
  // triple intersections: H_1 = Z
  NerveComplex n;
  IntMatrix line(1, 1);
  line.at(0, 0) = 1;
  n.cell_lattices = {line, line, line};
  n.pairs = {{0, 1, line}, {1, 2, line}, {0, 2, line}};
  AbelianGroupDescriptor h = h1_of_nerve(n);
  CHECK(h.rank == 1);
  CHECK_FALSE(h.trivial());
}

TEST_CASE("reduction verdicts") {
  Subdivision cut;
  cut.cells = {mask_of({"000", "100", "010", "001"}), VertexMask(0xFF & ~1u)};
  cut.sort();
  CHECK(reduce_and_verdict(cut) == ReductionVerdict::trivial_by_reduction);
  CHECK(reduce_and_verdict(three_pyramids()) == ReductionVerdict::trivial_by_reduction);
  CHECK(reduce_and_verdict(two_prisms()) == ReductionVerdict::trivial_by_reduction);
}

TEST_CASE("hanging-cell removal preserves h1") {
  Subdivision cut;
  cut.cells = {mask_of({"000", "100", "010", "001"}), VertexMask(0xFF & ~1u)};
  cut.sort();
  GenericComplex whole = GenericComplex::from_subdivision(cut);
  AbelianGroupDescriptor before = h1_generic(whole);
  GenericComplex reduced = whole;
  reduced.cells.erase(reduced.cells.begin());  // drop one cell (the hanging cut)
  if (reduced.cells.size() == 1) {
    CHECK(before.trivial());
    CHECK(h1_generic(reduced).trivial());
  }
}
