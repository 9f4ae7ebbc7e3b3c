#include <doctest.h>

#include <map>
#include <random>

#include "cubestrata/subdivision.hpp"

using namespace cubestrata;

namespace {

VertexMask mask_of(std::initializer_list<const char*> labels) {
  VertexMask m = 0;
  for (const char* s : labels)
    m |= VertexMask(1u << coords_vid(s[0] - '0', s[1] - '0', s[2] - '0'));
  return m;
}

HeightFunction zeros() {
  HeightFunction h;
  h.fill(Rat(0));
  return h;
}

const VertexMask kCube = 0xFF;
const VertexMask kOriginCut = mask_of({"000", "100", "010", "001"});
const VertexMask kComplement = VertexMask(0xFF & ~(1u << 0));

Subdivision two_prisms() {
  Subdivision s;
  s.cells = {mask_of({"000", "100", "010", "001", "101", "011"}),
             mask_of({"100", "010", "110", "101", "011", "111"})};
  s.sort();
  return s;
}

}  // namespace

TEST_CASE("from_heights on the spec examples") {
  Subdivision trivial = from_heights(zeros());
  CHECK(trivial.cells == std::vector<VertexMask>{kCube});

  HeightFunction h = zeros();
  h[0] = 1;
  Subdivision s = from_heights(h);
  REQUIRE(s.cells.size() == 2);
  CHECK(s.contains_cell(kOriginCut));
  CHECK(s.contains_cell(kComplement));

  HeightFunction lin;
  for (Vid v = 0; v < 8; ++v) {
    auto p = vid_coords(v);
    lin[v] = p[0] + p[1] + p[2];
  }
  CHECK(from_heights(lin).cells == std::vector<VertexMask>{kCube});
}

TEST_CASE("from_heights is invariant under affine shifts and positive scaling") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int t = 0; t < 40; ++t) {
    HeightFunction h;
    for (Vid v = 0; v < 8; ++v) h[v] = d(rng);
    Subdivision s = from_heights(h);
    int a = d(rng), b = d(rng), c = d(rng), e = d(rng);
    HeightFunction h2;
    for (Vid v = 0; v < 8; ++v) {
      auto p = vid_coords(v);
      h2[v] = Rat(3, 2) * h[v] + a * p[0] + b * p[1] + c * p[2] + e;
    }
    CHECK(from_heights(h2) == s);
  }
}

TEST_CASE("from_heights is Sym(Q)-equivariant") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-3, 3);
  const auto& group = symq_elements();
  for (int t = 0; t < 30; ++t) {
    HeightFunction h;
    for (Vid v = 0; v < 8; ++v) h[v] = d(rng);
    const SymQElement& g = group[t % group.size()];
    HeightFunction hg;
    for (Vid v = 0; v < 8; ++v) hg[g.apply(v)] = h[v];
    CHECK(from_heights(hg) == apply_sym(from_heights(h), g));
  }
}

TEST_CASE("regularity with verified witnesses") {
  Subdivision trivial;
  trivial.cells = {kCube};
  RegularityResult r = is_regular(trivial);
  REQUIRE(r.regular);
  CHECK(from_heights(r.witness) == trivial);

  Subdivision cut;
  cut.cells = {kOriginCut, kComplement};
  cut.sort();
  r = is_regular(cut);
  REQUIRE(r.regular);
  CHECK(from_heights(r.witness) == cut);

  r = is_regular(two_prisms());
  REQUIRE(r.regular);
  CHECK(from_heights(r.witness) == two_prisms());
}

TEST_CASE("enumeration: strategies agree, 74 triangulations, volumes partition 6") {
  const EnumerationBundle& b = enumeration_bundle();
  CHECK(b.strategies_agree);
  CHECK(b.triangulations.size() == 74);
  int from_topdown = 0;
  for (const Subdivision& s : b.top_down) {
    bool tri = true;
    std::vector<int> vols;
    int total = 0;
    for (VertexMask m : s.cells) {
      int v = CellUniverse::get().geom(m).volume;
      vols.push_back(v);
      total += v;
      tri &= (mask_size(m) == 4);
    }
    CHECK(total == 6);
    if (tri) ++from_topdown;
  }
  CHECK(from_topdown == 74);
  // only {Q} has the volume multiset {6}
  int just_cube = 0;
  for (const Subdivision& s : b.top_down)
    if (s.cells.size() == 1) ++just_cube;
  CHECK(just_cube == 1);
}

TEST_CASE("orbit sizes") {
  std::vector<Subdivision> all = enumerate_all();

  Subdivision cut;
  cut.cells = {kOriginCut, kComplement};
  cut.sort();
  Subdivision prisms = two_prisms();
  Subdivision trivial;
  trivial.cells = {kCube};

  std::map<Subdivision, int> orbit_size;
  for (const SubdivisionOrbit& o : orbits(all)) {
    orbit_size[o.representative] = o.size;
    CHECK(48 % o.size == 0);
  }
  CHECK(orbit_size[canonical_subdivision(cut)] == 8);
  CHECK(orbit_size[canonical_subdivision(trivial)] == 1);
  CHECK(orbit_size[canonical_subdivision(prisms)] == 6);
}

TEST_CASE("stratum dimensions") {
  Subdivision trivial;
  trivial.cells = {kCube};
  CHECK(stratum_dimension(trivial) == 4);
  CHECK(stratum_dimension(two_prisms()) == 3);

  const EnumerationBundle& b = enumeration_bundle();
  CHECK(stratum_dimension(b.triangulations.front()) == 0);

  // strictly decreasing along proper refinement
  for (const Subdivision& s : b.top_down) {
    if (s == trivial) continue;
    CHECK(refines(s, trivial));
  }
  int ds = stratum_dimension(two_prisms());
  for (const Subdivision& s : b.top_down)
    if (refines(s, two_prisms()) && !(s == two_prisms()))
      CHECK(stratum_dimension(s) < ds);
}

TEST_CASE("refinement poset: triangulations minimal, trivial maximal") {
  std::vector<Subdivision> all = enumerate_all();
  SubdivisionPoset p = refinement_poset(all);
  REQUIRE(p.maximal.size() == 1);
  CHECK(p.nodes[p.maximal[0]].cells == std::vector<VertexMask>{kCube});
  CHECK(p.minimal.size() == 74);
  for (int i : p.minimal)
    for (VertexMask m : p.nodes[i].cells) CHECK(mask_size(m) == 4);
}

TEST_CASE("covers of the corner-cut subdivision") {
  std::vector<Subdivision> all = enumerate_all();
  Subdivision cut;
  cut.cells = {kOriginCut, kComplement};
  cut.sort();
  // brute-force covering relation: s covered by cut with nothing in between
  int covers = 0;
  for (const Subdivision& s : all) {
    if (s == cut || !refines(s, cut)) continue;
    bool covering = true;
    for (const Subdivision& t : all) {
      if (t == s || t == cut) continue;
      if (refines(s, t) && refines(t, cut)) covering = false;
    }
    if (covering) ++covers;
  }
  CHECK(covers > 0);
  for (const Subdivision& s : all)
    if (refines(s, cut)) CHECK(stratum_dimension(s) <= stratum_dimension(cut));
}

TEST_CASE("invalid subdivisions are rejected") {
  Subdivision bad;
  bad.cells = {kOriginCut};
  CHECK_THROWS_AS(validate_subdivision(bad), InvalidSubdivision);

  // prism plus a pyramid splitting the shared rectangle: not face-to-face
  Subdivision mixed;
  mixed.cells = {mask_of({"000", "100", "010", "001", "101", "011"}),
                 mask_of({"100", "110", "101", "111", "010"}),
                 mask_of({"010", "011", "111", "101"})};
  mixed.sort();
  CHECK_FALSE(is_valid_subdivision(mixed));
}
