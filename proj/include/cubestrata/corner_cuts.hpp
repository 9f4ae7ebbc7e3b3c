#pragma once

#include "cubestrata/subdivision.hpp"

namespace cubestrata {

struct CornerCut {
  VertexMask cell = 0;
  Vid apex = -1;
  VertexMask neighbor = 0;  // the unique cell sharing the base facet
};

struct CornerCutReport {
  std::vector<CornerCut> cuts;
  bool empty() const { return cuts.empty(); }
};

CornerCutReport detect_corner_cuts(const Subdivision& s);

// The stable-replacement modification: repeatedly merge each corner cut
// into its unique facet-adjacent neighbor until none remains.
Subdivision modify(const Subdivision& s);

// Height-level modification: every apex of a corner cut of from_heights(h)
// is lowered onto the affine span of the neighbor's lifted vertices.
struct HeightModification {
  HeightFunction result;
  std::vector<std::pair<Vid, Rat>> drops;  // (apex, q_m), q_m > 0
};
HeightModification modify_heights(const HeightFunction& h);

// True iff the subdivision has no corner cut (toric boundary Cartier).
bool delta_cartier(const Subdivision& s);

}  // namespace cubestrata
