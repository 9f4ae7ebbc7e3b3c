#include "cubestrata/corner_cuts.hpp"

#include <algorithm>

namespace cubestrata {

CornerCutReport detect_corner_cuts(const Subdivision& s) {
  const CellUniverse& u = CellUniverse::get();
  CornerCutReport rep;
  for (VertexMask m : s.cells) {
    const CellGeom& g = u.geom(m);
    if (!g.is_corner_cut) continue;
    CornerCut cut;
    cut.cell = m;
    cut.apex = g.apex;
    VertexMask base = VertexMask(m & ~(1u << g.apex));
    for (VertexMask other : s.cells) {
      if (other == m) continue;
      if ((other & base) != base) continue;
      for (const Facet& f : u.geom(other).facets)
        if (f.verts == base) {
          cut.neighbor = other;
          break;
        }
      if (cut.neighbor) break;
    }
    if (!cut.neighbor) throw InvalidSubdivision("corner cut without facet neighbor");
    rep.cuts.push_back(cut);
  }
  return rep;
}

Subdivision modify(const Subdivision& s) {
  if (!is_regular(s).regular) throw NotRegular("modify: subdivision not regular");
  Subdivision cur = s;
  while (true) {
    CornerCutReport rep = detect_corner_cuts(cur);
    if (rep.empty()) break;
    const CornerCut& cut = rep.cuts.front();  // canonical cell order
    VertexMask merged = VertexMask(cut.cell | cut.neighbor);
    const CellUniverse& u = CellUniverse::get();
    if (!u.valid(merged) ||
        u.geom(merged).volume != u.geom(cut.cell).volume + u.geom(cut.neighbor).volume)
      throw InvalidSubdivision("corner-cut merge is not convex");
    Subdivision next;
    for (VertexMask m : cur.cells)
      if (m != cut.cell && m != cut.neighbor) next.cells.push_back(m);
    next.cells.push_back(merged);
    next.sort();
    validate_subdivision(next);
    cur = next;
  }
  return cur;
}

HeightModification modify_heights(const HeightFunction& h) {
  Subdivision s = from_heights(h);
  CornerCutReport rep = detect_corner_cuts(s);
  HeightModification out;
  out.result = h;
  for (const CornerCut& cut : rep.cuts) {
    // affine function through the lifted vertices of the neighbor cell
    auto vs = mask_vids(cut.neighbor);
    // find 4 affinely independent vertices and interpolate
    std::vector<std::vector<Rat>> aug;
    Rat value;
    bool done = false;
    for (size_t i = 0; i < vs.size() && !done; ++i)
      for (size_t j = i + 1; j < vs.size() && !done; ++j)
        for (size_t k = j + 1; k < vs.size() && !done; ++k)
          for (size_t l = k + 1; l < vs.size() && !done; ++l) {
            std::array<Vid, 4> q = {vs[i], vs[j], vs[k], vs[l]};
            std::vector<std::vector<Rat>> a(4, std::vector<Rat>(5));
            for (int r = 0; r < 4; ++r) {
              auto p = vid_coords(q[r]);
              a[r] = {Rat(1), Rat(p[0]), Rat(p[1]), Rat(p[2]), h[q[r]]};
            }
            bool singular = false;
            for (int c = 0; c < 4 && !singular; ++c) {
              int piv = -1;
              for (int r = c; r < 4; ++r)
                if (a[r][c] != 0) {
                  piv = r;
                  break;
                }
              if (piv < 0) {
                singular = true;
                break;
              }
              std::swap(a[c], a[piv]);
              for (int r = 0; r < 4; ++r) {
                if (r == c || a[r][c] == 0) continue;
                Rat f = a[r][c] / a[c][c];
                for (int t = c; t <= 4; ++t) a[r][t] -= f * a[c][t];
              }
            }
            if (singular) continue;
            auto pa = vid_coords(cut.apex);
            Rat coef[4];
            for (int c = 0; c < 4; ++c) coef[c] = a[c][4] / a[c][c];
            value = coef[0] + coef[1] * pa[0] + coef[2] * pa[1] + coef[3] * pa[2];
            done = true;
          }
    if (!done) throw DegenerateCell("neighbor cell has no affine basis");
    Rat q_m = h[cut.apex] - value;
    if (!(q_m > 0)) throw std::logic_error("corner-cut drop q_m must be positive");
    out.result[cut.apex] = h[cut.apex] - q_m;
    out.drops.push_back({cut.apex, q_m});
  }
  return out;
}

bool delta_cartier(const Subdivision& s) { return detect_corner_cuts(s).empty(); }

}  // namespace cubestrata
