#include <doctest.h>

#include <map>
#include <set>

#include "cubestrata/geometry.hpp"

using namespace cubestrata;

namespace {
MarkedCell cell(std::vector<std::array<int, 3>> v) { return MarkedCell(v); }
}  // namespace

TEST_CASE("sym(Q) is a group of order 48 acting by bijections") {
  const auto& g = symq_elements();
  REQUIRE(g.size() == 48);
  std::set<std::array<int, 8>> images;
  for (const SymQElement& s : g) {
    std::array<int, 8> im;
    std::array<bool, 8> hit{};
    for (Vid v = 0; v < 8; ++v) {
      im[v] = s.apply(v);
      hit[im[v]] = true;
    }
    for (bool h : hit) CHECK(h);
    images.insert(im);
  }
  CHECK(images.size() == 48);
  // closure under composition
  for (int i = 0; i < 48; i += 7)
    for (int j = 0; j < 48; j += 5) {
      SymQElement c = g[i].compose(g[j]);
      for (Vid v = 0; v < 8; ++v) CHECK(c.apply(v) == g[j].apply(g[i].apply(v)));
    }
}

TEST_CASE("normalized volumes") {
  CHECK(cell({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}).normalized_volume() == 1);
  CHECK(cell({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0},
              {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}).normalized_volume() == 6);
  CHECK(cell({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}}).normalized_volume() == 2);
  // regular tetrahedron has volume 2, the prism 3
  CHECK(cell({{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}).normalized_volume() == 2);
  CHECK(cell({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}})
            .normalized_volume() == 3);
}

TEST_CASE("degenerate cells are rejected") {
  CHECK_THROWS_AS(cell({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}}), DegenerateCell);
  CHECK_THROWS((void)cell({{0, 0, 2}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
}

TEST_CASE("canonical forms identify Sym(Q) orbits") {
  MarkedCell origin_cut({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  MarkedCell other_cut({{1, 1, 1}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  CHECK(origin_cut.canonical_form().mask() == other_cut.canonical_form().mask());
  CHECK(origin_cut.canonical_form().mask() == origin_cut.mask());  // orbit representative

  MarkedCell cube({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0},
                   {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  CHECK(cube.canonical_form().mask() == cube.mask());

  // the two diagonal cuts of one square face give equivalent prisms
  MarkedCell prism1({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}});
  MarkedCell prism2({{1, 0, 0}, {1, 1, 0}, {0, 1, 0}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}});
  CHECK(prism1.canonical_form().mask() == prism2.canonical_form().mask());

  // idempotent and volume-invariant on every full-dimensional cell
  for (VertexMask m : CellUniverse::get().cells()) {
    MarkedCell c(m);
    CHECK(c.canonical_form().canonical_form().mask() == c.canonical_form().mask());
    CHECK(c.canonical_form().normalized_volume() == c.normalized_volume());
  }
}

TEST_CASE("face lattices") {
  auto faces = cell({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}).face_lattice();
  CHECK(faces[2].size() == 4);
  CHECK(faces[1].size() == 6);
  CHECK(faces[0].size() == 4);

  faces = cell({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0},
                {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}).face_lattice();
  CHECK(faces[2].size() == 6);
  CHECK(faces[1].size() == 12);
  CHECK(faces[0].size() == 8);

  faces = cell({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}}).face_lattice();
  CHECK(faces[2].size() == 5);
}

TEST_CASE("the cell universe has the expected census") {
  const CellUniverse& u = CellUniverse::get();
  std::map<int, int> by_size;
  for (VertexMask m : u.cells()) ++by_size[mask_size(m)];
  CHECK(by_size[4] == 58);  // 70 quadruples minus 12 coplanar ones
  CHECK(by_size[5] == 56);
  CHECK(by_size[6] == 28);
  CHECK(by_size[7] == 8);
  CHECK(by_size[8] == 1);
  int corner_cuts = 0;
  for (VertexMask m : u.cells()) corner_cuts += u.geom(m).is_corner_cut;
  CHECK(corner_cuts == 8);
}
