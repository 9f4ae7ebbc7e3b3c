#pragma once

#include <functional>
#include <optional>

#include "cubestrata/geometry.hpp"
#include "cubestrata/linear_system.hpp"

namespace cubestrata {

struct NotRegular : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Heights on the 8 cube vertices, indexed by vid.
using HeightFunction = std::array<Rat, 8>;

struct Subdivision {
  std::vector<VertexMask> cells;  // sorted by cell_less

  void sort();
  bool operator==(const Subdivision& o) const { return cells == o.cells; }
  bool operator<(const Subdivision& o) const;
  int total_volume() const;
  bool contains_cell(VertexMask m) const;
};

// Throws InvalidSubdivision unless cells are pairwise face-to-face with
// disjoint interiors and cover the cube.
void validate_subdivision(const Subdivision& s);
bool is_valid_subdivision(const Subdivision& s);

Subdivision apply_sym(const Subdivision& s, const SymQElement& g);
Subdivision canonical_subdivision(const Subdivision& s);

// Projection of the lower hull of the lifted points (v, h(v)).
Subdivision from_heights(const HeightFunction& h);

struct RegularityResult {
  bool regular = false;
  HeightFunction witness;  // valid when regular
};
RegularityResult is_regular(const Subdivision& s);

// 8 - dim{h : h affine on every cell}; the dimension of the secondary
// polytope face indexed by s. Throws NotRegular.
int stratum_dimension(const Subdivision& s);

// s refines t: every cell of s is contained in a cell of t.
bool refines(const Subdivision& s, const Subdivision& t);

struct SubdivisionOrbit {
  Subdivision representative;
  int size = 0;
  std::vector<Subdivision> members;
};
std::vector<SubdivisionOrbit> orbits(const std::vector<Subdivision>& list);

struct SubdivisionPoset {
  std::vector<Subdivision> nodes;
  std::vector<std::vector<bool>> leq;  // leq[i][j]: node i refines node j
  std::vector<int> minimal, maximal;
};
SubdivisionPoset refinement_poset(const std::vector<Subdivision>& list);

// Dual-strategy enumeration of every polyhedral subdivision of (Q, Q cap Z^3).
struct EnumerationBundle {
  std::vector<Subdivision> top_down;    // open-wall backtracking over all cells
  std::vector<Subdivision> bottom_up;   // flip exploration + coarsening closure
  std::vector<Subdivision> triangulations;
  bool strategies_agree = false;
};
const EnumerationBundle& enumeration_bundle();  // memoized
std::vector<Subdivision> enumerate_all();       // the agreed list

// All face-to-face tilings of one cell region by cells satisfying `allow`.
std::vector<std::vector<VertexMask>> tile_region(
    VertexMask region, const std::function<bool(const CellGeom&)>& allow);

}  // namespace cubestrata
