#include <doctest.h>

#include <random>

#include "cubestrata/classifier.hpp"
#include "cubestrata/oracles.hpp"

using namespace cubestrata;

namespace {

VertexMask mask_of(std::initializer_list<const char*> labels) {
  VertexMask m = 0;
  for (const char* s : labels)
    m |= VertexMask(1u << coords_vid(s[0] - '0', s[1] - '0', s[2] - '0'));
  return m;
}

CoefficientAssignment coeffs(std::initializer_list<long> v) {
  CoefficientAssignment c;
  int i = 0;
  for (long x : v) c[i++] = x;
  return c;
}

Subdivision two_prisms() {
  Subdivision s;
  s.cells = {mask_of({"000", "100", "010", "001", "101", "011"}),
             mask_of({"100", "010", "110", "101", "011", "111"})};
  s.sort();
  return s;
}

}  // namespace

TEST_CASE("cell types by signature") {
  CHECK(cell_type(mask_of({"000", "100", "010", "011"})) == CellType::a);
  CHECK(cell_type(mask_of({"000", "100", "010", "110", "001"})) == CellType::b);
  CHECK(cell_type(mask_of({"000", "100", "010", "001", "101", "011"})) == CellType::c);
  CHECK(cell_type(VertexMask(0xFF)) == CellType::d);
  // a corner-cut-shaped simplex is still type a
  CHECK(cell_type(mask_of({"000", "100", "010", "001"})) == CellType::a);

  // signatures outside the four canonical ones
  CHECK_THROWS_AS(cell_type(mask_of({"100", "010", "001", "110", "101", "011"})),
                  NotABulletCell);  // octahedron (6,4)
  CHECK_THROWS_AS(cell_type(VertexMask(0xFF & ~1u)), NotABulletCell);  // (7,5)
  CHECK_THROWS_AS(cell_type(mask_of({"000", "110", "101", "011"})), NotABulletCell);  // (4,2)
  CHECK_THROWS_AS(cell_type(mask_of({"000", "100", "010", "001", "111"})),
                  NotABulletCell);  // bipyramid (5,3)
}

TEST_CASE("hyperdeterminant values and properties") {
  CoefficientAssignment ones = coeffs({1, 1, 1, 1, 1, 1, 1, 1});
  CHECK(hyperdeterminant_222(ones) == 0);

  CoefficientAssignment smooth = coeffs({1, 0, 0, 0, 0, 0, 0, -1});
  CHECK(hyperdeterminant_222(smooth) == 1);

  // homogeneity of degree 4
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int t = 0; t < 50; ++t) {
    CoefficientAssignment c;
    for (Vid v = 0; v < 8; ++v) c[v] = d(rng);
    Rat det = hyperdeterminant_222(c);
    CoefficientAssignment c3;
    for (Vid v = 0; v < 8; ++v) c3[v] = 3 * c[v];
    CHECK(hyperdeterminant_222(c3) == 81 * det);
    // |Det| invariant under all 48 index symmetries
    for (const SymQElement& g : symq_elements()) {
      CoefficientAssignment cg;
      for (Vid v = 0; v < 8; ++v) cg[g.apply(v)] = c[v];
      CHECK(abs(hyperdeterminant_222(cg)) == abs(det));
    }
  }
}

TEST_CASE("singularity oracle matches the hyperdeterminant") {
  CHECK(surface_is_singular(coeffs({1, 1, 1, 1, 1, 1, 1, 1})));
  CHECK_FALSE(surface_is_singular(coeffs({1, 0, 0, 0, 0, 0, 0, -1})));
  CHECK(surface_is_singular(coeffs({1, 1, 1, 2, 1, 1, 1, 2})));  // d2 splits
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int t = 0; t < 200; ++t) {
    CoefficientAssignment c;
    for (Vid v = 0; v < 8; ++v) c[v] = d(rng);
    bool any = false;
    for (Vid v = 0; v < 8; ++v) any |= (c[v] != 0);
    if (!any) continue;
    CHECK(surface_is_singular(c) == (hyperdeterminant_222(c) == 0));
  }
}

TEST_CASE("classify_d") {
  DClassification d3 = classify_d(coeffs({1, 1, 1, 1, 1, 1, 1, 1}));
  CHECK(d3.label == DSubtype::d3);
  CHECK(d3.components == 3);
  CHECK_FALSE(d3.triple_point);

  // the smooth hexagon model: d1, every boundary line degenerate
  DClassification hex = classify_d(coeffs({1, 0, 0, 0, 0, 0, 0, -1}));
  CHECK(hex.label == DSubtype::d1);
  CHECK(hex.components == 1);
  CHECK(hex.triple_point);
  CHECK(hex.broken_lines.size() == 6);

  // linear times irreducible bilinear: d2
  DClassification d2 = classify_d(coeffs({1, 1, 1, 2, 1, 1, 1, 2}));
  CHECK(d2.label == DSubtype::d2);
  CHECK(d2.components == 2);

  // singular but irreducible (A_1 at a torus fixed point): d1'
  CoefficientAssignment c = coeffs({0, 0, 0, 1, 0, 1, 1, 1});
  REQUIRE(hyperdeterminant_222(c) == 0);
  DClassification d1p = classify_d(c);
  CHECK(d1p.label == DSubtype::d1_prime);
  CHECK(surface_is_singular(c));

  CoefficientAssignment generic = coeffs({2, 3, 5, 7, 11, 13, 17, 19});
  CHECK(classify_d(generic).label == DSubtype::d1);
  CHECK(classify_d(generic).broken_lines.empty());

  // d3 implies vanishing hyperdeterminant and rank-1 flattenings
  CHECK(hyperdeterminant_222(coeffs({1, 1, 1, 1, 1, 1, 1, 1})) == 0);
}

TEST_CASE("classify_c") {
  CHECK(classify_c({Rat(1), Rat(1), Rat(1)}, {Rat(2), Rat(2), Rat(2)}) == CSubtype::c3);
  CHECK(classify_c({Rat(1), Rat(1), Rat(1)}, {Rat(1), Rat(1), Rat(2)}) == CSubtype::c2);
  CHECK(classify_c({Rat(1), Rat(1), Rat(1)}, {Rat(1), Rat(2), Rat(3)}) == CSubtype::c1);
  CHECK(c_components(CSubtype::c3) == 2);
  CHECK_THROWS_AS(classify_c({Rat(0), Rat(1), Rat(1)}, {Rat(1), Rat(1), Rat(1)}),
                  InvalidCoefficients);
  CHECK_THROWS_AS(classify_c({Rat(1), Rat(1), Rat(0)}, {Rat(1), Rat(1), Rat(0)}),
                  InvalidCoefficients);
}

TEST_CASE("degeneration trichotomy") {
  Subdivision trivial;
  trivial.cells = {VertexMask(0xFF)};

  DegenerationReport generic = classify_degeneration(trivial, coeffs({2, 3, 5, 7, 11, 13, 17, 19}));
  CHECK(generic.components == 1);
  CHECK(generic.dcase == DegenerationCase::I);
  CHECK(generic.cusp == CuspLabel::not_a_cusp);

  DegenerationReport d3 = classify_degeneration(trivial, coeffs({1, 1, 1, 1, 1, 1, 1, 1}));
  CHECK(d3.components == 3);
  CHECK(d3.dcase == DegenerationCase::III);
  CHECK(d3.cusp == CuspLabel::odd2);

  DegenerationReport d2 = classify_degeneration(trivial, coeffs({1, 1, 1, 2, 1, 1, 1, 2}));
  CHECK(d2.components == 2);
  CHECK(d2.dcase == DegenerationCase::II);
  CHECK(d2.cusp == CuspLabel::not_a_cusp);

  DegenerationReport prisms =
      classify_degeneration(two_prisms(), coeffs({2, 3, 5, 7, 11, 13, 17, 19}));
  CHECK(prisms.components == 2);
  CHECK(prisms.dcase == DegenerationCase::II);

  // wall conic degenerates: both prisms become c2, Case III at the odd1 cusp
  CoefficientAssignment wall_ones = coeffs({2, 1, 1, 1, 1, 1, 3, 5});
  DegenerationReport c2c2 = classify_degeneration(two_prisms(), wall_ones);
  CHECK(c2c2.components == 2);
  CHECK(c2c2.dcase == DegenerationCase::III);
  CHECK(c2c2.cusp == CuspLabel::odd1);

  // a merged apex may vanish: 000 carries a corner cut inside the prism
  DegenerationReport apex_zero =
      classify_degeneration(two_prisms(), coeffs({0, 3, 5, 7, 11, 13, 17, 19}));
  CHECK(apex_zero.components >= 2);

  // zero on a wall vertex carries no merged corner cut
  CoefficientAssignment bad = coeffs({2, 3, 5, 7, 0, 13, 17, 19});
  CHECK_THROWS_AS(classify_degeneration(two_prisms(), bad), InvalidCoefficients);
  // two zeros on a cube edge are never legal
  CHECK_THROWS_AS(classify_degeneration(trivial, coeffs({0, 0, 3, 5, 7, 11, 13, 17})),
                  InvalidCoefficients);
}

TEST_CASE("classifiers are Sym(Q)-equivariant") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> d(1, 9);
  Subdivision prisms = two_prisms();
  for (int t = 0; t < 12; ++t) {
    CoefficientAssignment c;
    for (Vid v = 0; v < 8; ++v) c[v] = d(rng);
    DegenerationReport base = classify_degeneration(prisms, c);
    const SymQElement& g = symq_elements()[rng() % 48];
    CoefficientAssignment cg;
    for (Vid v = 0; v < 8; ++v) cg[g.apply(v)] = c[v];
    DegenerationReport moved = classify_degeneration(apply_sym(prisms, g), cg);
    CHECK(moved.components == base.components);
    CHECK(moved.dcase == base.dcase);
    CHECK(moved.cusp == base.cusp);
  }
}
