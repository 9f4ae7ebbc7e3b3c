#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "cubestrata/rational.hpp"

namespace cubestrata {

struct DegenerateCell : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidSubdivision : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cube vertices are indexed 0..7 by v = 4x + 2y + z.
using Vid = int;
using VertexMask = uint8_t;

inline std::array<int, 3> vid_coords(Vid v) { return {(v >> 2) & 1, (v >> 1) & 1, v & 1}; }
inline Vid coords_vid(int x, int y, int z) { return 4 * x + 2 * y + z; }
inline bool mask_has(VertexMask m, Vid v) { return (m >> v) & 1; }
inline int mask_size(VertexMask m) { return __builtin_popcount(m); }

std::vector<Vid> mask_vids(VertexMask m);
std::string mask_label(VertexMask m);  // e.g. "000 100 010"

// Orders masks as lexicographic comparison of ascending vertex-id tuples.
bool cell_less(VertexMask a, VertexMask b);

// An element of Sym(Q) = Z_2 wr S_3 (order 48): coordinate permutation
// followed by per-axis flips x -> 1-x.
struct SymQElement {
  std::array<int, 3> perm;   // new axis i reads old axis perm[i]
  std::array<int, 3> flip;   // applied after the permutation
  Vid apply(Vid v) const;
  VertexMask apply_mask(VertexMask m) const;
  SymQElement compose(const SymQElement& then) const;
};

const std::vector<SymQElement>& symq_elements();  // all 48

// ax + by + cz >= d on the cell; (a,b,c) primitive.
struct Plane {
  long a = 0, b = 0, c = 0, d = 0;
  bool operator==(const Plane& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
  bool operator<(const Plane& o) const {
    return std::array<long, 4>{a, b, c, d} < std::array<long, 4>{o.a, o.b, o.c, o.d};
  }
  long eval(Vid v) const {
    auto p = vid_coords(v);
    return a * p[0] + b * p[1] + c * p[2] - d;
  }
};

struct Facet {
  VertexMask verts = 0;
  Plane plane;                // inward normal
  std::vector<Vid> cycle;     // polygon vertices in cyclic order
};

// Geometry of one full-dimensional cell with vertices among the cube's 8.
struct CellGeom {
  VertexMask mask = 0;
  int volume = 0;  // normalized: 3! * euclidean
  std::vector<Facet> facets;
  std::set<VertexMask> faces;  // all faces by vertex set (incl. full mask, excl. empty)
  std::vector<VertexMask> edges;
  VertexMask canonical = 0;
  bool is_corner_cut = false;
  Vid apex = -1;  // for corner cuts
};

// All 151 full-dimensional vertex subsets of the cube with their geometry
// and the pairwise face-to-face compatibility relation.
class CellUniverse {
 public:
  static const CellUniverse& get();

  const std::vector<VertexMask>& cells() const { return cells_; }
  bool valid(VertexMask m) const { return index_[m] >= 0; }
  const CellGeom& geom(VertexMask m) const;
  // True if the two cells tile: disjoint interiors and intersection equal
  // to a common face (possibly empty) of both.
  bool compatible(VertexMask a, VertexMask b) const;

 private:
  CellUniverse();
  std::vector<VertexMask> cells_;
  std::array<int, 256> index_;
  std::vector<CellGeom> geoms_;
  std::vector<std::vector<bool>> compat_;
};

// Spec-level cell interface.
class MarkedCell {
 public:
  explicit MarkedCell(VertexMask m);
  explicit MarkedCell(const std::vector<std::array<int, 3>>& verts);

  VertexMask mask() const { return mask_; }
  int normalized_volume() const;
  MarkedCell canonical_form() const;
  // faces_by_dim[d] lists the d-faces as vertex sets, d = 0..3.
  std::array<std::vector<VertexMask>, 4> face_lattice() const;
  std::vector<std::array<int, 3>> vertices() const;

 private:
  VertexMask mask_;
};

}  // namespace cubestrata
