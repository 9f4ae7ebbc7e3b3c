#include <doctest.h>

#include <random>

#include "cubestrata/corner_cuts.hpp"

using namespace cubestrata;

namespace {

VertexMask mask_of(std::initializer_list<const char*> labels) {
  VertexMask m = 0;
  for (const char* s : labels)
    m |= VertexMask(1u << coords_vid(s[0] - '0', s[1] - '0', s[2] - '0'));
  return m;
}

const VertexMask kCube = 0xFF;

Subdivision trivial_subdivision() {
  Subdivision s;
  s.cells = {kCube};
  return s;
}

Subdivision corner_plus_complement() {
  Subdivision s;
  s.cells = {mask_of({"000", "100", "010", "001"}), VertexMask(0xFF & ~1u)};
  s.sort();
  return s;
}

Subdivision two_prisms() {
  Subdivision s;
  s.cells = {mask_of({"000", "100", "010", "001", "101", "011"}),
             mask_of({"100", "010", "110", "101", "011", "111"})};
  s.sort();
  return s;
}

// two opposite corner cuts with the six-vertex middle cell
Subdivision opposite_cuts() {
  Subdivision s;
  s.cells = {mask_of({"000", "100", "010", "001"}),
             mask_of({"111", "011", "101", "110"}),
             mask_of({"100", "010", "001", "110", "101", "011"})};
  s.sort();
  validate_subdivision(s);
  return s;
}

}  // namespace

TEST_CASE("corner cut detection") {
  CHECK(detect_corner_cuts(trivial_subdivision()).empty());
  CHECK(delta_cartier(trivial_subdivision()));

  CornerCutReport rep = detect_corner_cuts(corner_plus_complement());
  REQUIRE(rep.cuts.size() == 1);
  CHECK(rep.cuts[0].apex == coords_vid(0, 0, 0));
  CHECK(rep.cuts[0].neighbor == VertexMask(0xFF & ~1u));
  CHECK_FALSE(delta_cartier(corner_plus_complement()));

  CHECK(detect_corner_cuts(opposite_cuts()).cuts.size() == 2);
  CHECK(detect_corner_cuts(two_prisms()).empty());
  CHECK(delta_cartier(two_prisms()));
}

TEST_CASE("bullet map on subdivisions") {
  CHECK(modify(corner_plus_complement()) == trivial_subdivision());
  CHECK(modify(two_prisms()) == two_prisms());
  CHECK(modify(opposite_cuts()) == trivial_subdivision());

  for (const Subdivision& s : enumerate_all()) {
    Subdivision m = modify(s);
    CHECK(detect_corner_cuts(m).empty());
    CHECK(modify(m) == m);
    CHECK(m.total_volume() == 6);
    // commutes with the Sym(Q) action
    const SymQElement& g = symq_elements()[(s.cells[0] * 7) % 48];
    CHECK(modify(apply_sym(s, g)) == apply_sym(m, g));
  }
}

TEST_CASE("bullet map is order-independent") {
  std::mt19937_64 rng(17);
  const CellUniverse& u = CellUniverse::get();
  for (const Subdivision& s : enumerate_all()) {
    if (detect_corner_cuts(s).cuts.size() < 2) continue;
    Subdivision expect = modify(s);
    for (int t = 0; t < 4; ++t) {
      Subdivision cur = s;
      while (true) {
        CornerCutReport rep = detect_corner_cuts(cur);
        if (rep.empty()) break;
        const CornerCut& cut = rep.cuts[rng() % rep.cuts.size()];
        VertexMask merged = VertexMask(cut.cell | cut.neighbor);
        REQUIRE(u.valid(merged));
        Subdivision next;
        for (VertexMask m : cur.cells)
          if (m != cut.cell && m != cut.neighbor) next.cells.push_back(m);
        next.cells.push_back(merged);
        next.sort();
        validate_subdivision(next);
        cur = next;
      }
      CHECK(cur == expect);
    }
  }
}

TEST_CASE("height modification") {
  HeightFunction h;
  h.fill(Rat(0));
  h[0] = 1;
  HeightModification hm = modify_heights(h);
  REQUIRE(hm.drops.size() == 1);
  CHECK(hm.drops[0].first == 0);
  CHECK(hm.drops[0].second == 1);
  for (Vid v = 0; v < 8; ++v) CHECK(hm.result[v] == 0);

  h[0] = 2;
  hm = modify_heights(h);
  REQUIRE(hm.drops.size() == 1);
  CHECK(hm.drops[0].second == 2);
  for (Vid v = 0; v < 8; ++v) CHECK(hm.result[v] == 0);

  // corner-cut-free heights are fixed
  HeightFunction flat;
  flat.fill(Rat(0));
  CHECK(modify_heights(flat).drops.empty());

  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int t = 0; t < 100; ++t) {
    HeightFunction hr;
    for (Vid v = 0; v < 8; ++v) hr[v] = d(rng);
    HeightModification m = modify_heights(hr);
    CHECK(from_heights(m.result) == modify(from_heights(hr)));
    for (const auto& [apex, q] : m.drops) CHECK(q > 0);
  }
}
