#include "cubestrata/subdivision.hpp"

#include <algorithm>
#include <map>

#include "cubestrata/int_matrix.hpp"

namespace cubestrata {

void Subdivision::sort() { std::sort(cells.begin(), cells.end(), cell_less); }

bool Subdivision::operator<(const Subdivision& o) const {
  return std::lexicographical_compare(cells.begin(), cells.end(), o.cells.begin(), o.cells.end(),
                                      cell_less);
}

int Subdivision::total_volume() const {
  int v = 0;
  for (VertexMask m : cells) v += CellUniverse::get().geom(m).volume;
  return v;
}

bool Subdivision::contains_cell(VertexMask m) const {
  return std::find(cells.begin(), cells.end(), m) != cells.end();
}

void validate_subdivision(const Subdivision& s) {
  const CellUniverse& u = CellUniverse::get();
  if (s.cells.empty()) throw InvalidSubdivision("no cells");
  for (VertexMask m : s.cells)
    if (!u.valid(m)) throw InvalidSubdivision("invalid cell " + mask_label(m));
  for (size_t i = 0; i < s.cells.size(); ++i)
    for (size_t j = i + 1; j < s.cells.size(); ++j) {
      if (s.cells[i] == s.cells[j]) throw InvalidSubdivision("repeated cell");
      if (!u.compatible(s.cells[i], s.cells[j]))
        throw InvalidSubdivision("cells not face-to-face: " + mask_label(s.cells[i]) + " | " +
                                 mask_label(s.cells[j]));
    }
  if (s.total_volume() != 6) throw InvalidSubdivision("cells do not cover the cube");
}

bool is_valid_subdivision(const Subdivision& s) {
  try {
    validate_subdivision(s);
    return true;
  } catch (const InvalidSubdivision&) {
    return false;
  }
}

Subdivision apply_sym(const Subdivision& s, const SymQElement& g) {
  Subdivision out;
  for (VertexMask m : s.cells) out.cells.push_back(g.apply_mask(m));
  out.sort();
  return out;
}

Subdivision canonical_subdivision(const Subdivision& s) {
  Subdivision best = s;
  Subdivision tmp = s;
  best.sort();
  for (const SymQElement& g : symq_elements()) {
    Subdivision im = apply_sym(tmp, g);
    if (im < best) best = im;
  }
  return best;
}

namespace {

// Barycentric-affine coordinates of vid w in terms of 4 affinely
// independent vids (b0..b3): w = sum l_i b_i with sum l_i = 1.
std::array<Rat, 4> barycentric(const std::array<Vid, 4>& basis, Vid w) {
  std::vector<std::vector<Rat>> aug(4, std::vector<Rat>(5));
  for (int c = 0; c < 4; ++c) {
    auto p = vid_coords(basis[c]);
    aug[0][c] = Rat(p[0]);
    aug[1][c] = Rat(p[1]);
    aug[2][c] = Rat(p[2]);
    aug[3][c] = 1;
  }
  auto pw = vid_coords(w);
  aug[0][4] = Rat(pw[0]);
  aug[1][4] = Rat(pw[1]);
  aug[2][4] = Rat(pw[2]);
  aug[3][4] = 1;
  for (int c = 0; c < 4; ++c) {
    int p = -1;
    for (int r = c; r < 4; ++r)
      if (aug[r][c] != 0) {
        p = r;
        break;
      }
    std::swap(aug[c], aug[p]);
    for (int r = 0; r < 4; ++r) {
      if (r == c || aug[r][c] == 0) continue;
      Rat f = aug[r][c] / aug[c][c];
      for (int k = c; k <= 4; ++k) aug[r][k] -= f * aug[c][k];
    }
  }
  std::array<Rat, 4> out;
  for (int c = 0; c < 4; ++c) out[c] = aug[c][4] / aug[c][c];
  return out;
}

std::array<Vid, 4> affine_basis(VertexMask mask) {
  auto vs = mask_vids(mask);
  for (size_t i = 1; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      for (size_t k = j + 1; k < vs.size(); ++k) {
        auto a = vid_coords(vs[i]), b = vid_coords(vs[j]), c = vid_coords(vs[0]),
             d = vid_coords(vs[k]);
        long m[3][3];
        for (int t = 0; t < 3; ++t) {
          m[0][t] = a[t] - c[t];
          m[1][t] = b[t] - c[t];
          m[2][t] = d[t] - c[t];
        }
        long det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                   m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        if (det != 0) return {vs[0], vs[i], vs[j], vs[k]};
      }
  throw DegenerateCell("no affine basis");
}

// Equality rows expressing "h affine on each cell", over 8 height vars.
std::vector<std::vector<Rat>> affineness_rows(const Subdivision& s) {
  std::vector<std::vector<Rat>> rows;
  for (VertexMask m : s.cells) {
    auto basis = affine_basis(m);
    VertexMask bmask = 0;
    for (Vid b : basis) bmask |= VertexMask(1u << b);
    for (Vid v : mask_vids(m)) {
      if (mask_has(bmask, v)) continue;
      auto l = barycentric(basis, v);
      std::vector<Rat> row(8, Rat(0));
      row[v] = 1;
      for (int i = 0; i < 4; ++i) row[basis[i]] -= l[i];
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace

Subdivision from_heights(const HeightFunction& h) {
  Subdivision out;
  std::set<VertexMask> seen;
  for (int m = 0; m < 256; ++m) {
    if (mask_size(VertexMask(m)) != 4) continue;
    auto vs = mask_vids(VertexMask(m));
    // affine function through the 4 lifted points, if determined
    std::vector<std::vector<Rat>> aug(4, std::vector<Rat>(5));
    for (int r = 0; r < 4; ++r) {
      auto p = vid_coords(vs[r]);
      aug[r] = {Rat(1), Rat(p[0]), Rat(p[1]), Rat(p[2]), h[vs[r]]};
    }
    // solve for (alpha, beta, gamma, delta)
    std::array<Rat, 4> coef;
    {
      bool singular = false;
      for (int c = 0; c < 4 && !singular; ++c) {
        int p = -1;
        for (int r = c; r < 4; ++r)
          if (aug[r][c] != 0) {
            p = r;
            break;
          }
        if (p < 0) {
          singular = true;
          break;
        }
        std::swap(aug[c], aug[p]);
        for (int r = 0; r < 4; ++r) {
          if (r == c || aug[r][c] == 0) continue;
          Rat f = aug[r][c] / aug[c][c];
          for (int k = c; k <= 4; ++k) aug[r][k] -= f * aug[c][k];
        }
      }
      if (singular) continue;  // base points affinely dependent
      for (int c = 0; c < 4; ++c) coef[c] = aug[c][4] / aug[c][c];
    }
    VertexMask contact = 0;
    bool lower = true;
    for (Vid v = 0; v < 8 && lower; ++v) {
      auto p = vid_coords(v);
      Rat lv = coef[0] + coef[1] * p[0] + coef[2] * p[1] + coef[3] * p[2];
      if (lv > h[v])
        lower = false;
      else if (lv == h[v])
        contact |= VertexMask(1u << v);
    }
    if (!lower) continue;
    if (!CellUniverse::get().valid(contact)) continue;  // lower face not full-dim
    if (seen.insert(contact).second) out.cells.push_back(contact);
  }
  out.sort();
  validate_subdivision(out);
  return out;
}

RegularityResult is_regular(const Subdivision& s) {
  validate_subdivision(s);
  LinearSystem sys;
  sys.nvars = 8;
  for (auto& row : affineness_rows(s)) {
    LinRow r;
    r.coeffs = std::move(row);
    r.rhs = 0;
    r.kind = LinRow::EQ;
    sys.rows.push_back(std::move(r));
  }
  // strict convexity across each interior wall
  const CellUniverse& u = CellUniverse::get();
  for (size_t i = 0; i < s.cells.size(); ++i) {
    const CellGeom& gi = u.geom(s.cells[i]);
    for (size_t j = 0; j < s.cells.size(); ++j) {
      if (i == j) continue;
      VertexMask shared = s.cells[i] & s.cells[j];
      bool facet_of_i = false;
      for (const Facet& f : gi.facets) facet_of_i |= (f.verts == shared);
      if (!facet_of_i) continue;
      // h(w) above the affine extension of h on cell i, for one w off the wall
      Vid w = -1;
      for (Vid v : mask_vids(s.cells[j]))
        if (!mask_has(s.cells[i], v)) {
          w = v;
          break;
        }
      auto basis = affine_basis(s.cells[i]);
      auto l = barycentric(basis, w);
      LinRow r;
      r.coeffs.assign(8, Rat(0));
      r.coeffs[w] = 1;
      for (int k = 0; k < 4; ++k) r.coeffs[basis[k]] -= l[k];
      r.rhs = 0;
      r.kind = LinRow::GT;
      sys.rows.push_back(std::move(r));
    }
  }
  LpResult lp = lp_feasible(sys);
  RegularityResult res;
  res.regular = lp.feasible;
  if (lp.feasible) {
    for (int v = 0; v < 8; ++v) res.witness[v] = lp.witness[v];
  }
  return res;
}

int stratum_dimension(const Subdivision& s) {
  if (!is_regular(s).regular) throw NotRegular("stratum_dimension: subdivision not regular");
  return rational_rank(affineness_rows(s));
}

bool refines(const Subdivision& s, const Subdivision& t) {
  const CellUniverse& u = CellUniverse::get();
  for (VertexMask c : s.cells) {
    bool inside_some = false;
    for (VertexMask big : t.cells) {
      const CellGeom& g = u.geom(big);
      bool inside = true;
      for (Vid v : mask_vids(c)) {
        for (const Facet& f : g.facets)
          if (f.plane.eval(v) < 0) {
            inside = false;
            break;
          }
        if (!inside) break;
      }
      if (inside) {
        inside_some = true;
        break;
      }
    }
    if (!inside_some) return false;
  }
  return true;
}

std::vector<SubdivisionOrbit> orbits(const std::vector<Subdivision>& list) {
  std::map<Subdivision, SubdivisionOrbit> by_canon;
  for (const Subdivision& s : list) {
    Subdivision c = canonical_subdivision(s);
    auto& o = by_canon[c];
    if (o.size == 0) o.representative = c;
    ++o.size;
    o.members.push_back(s);
  }
  std::vector<SubdivisionOrbit> out;
  for (auto& [k, v] : by_canon) out.push_back(std::move(v));
  return out;
}

SubdivisionPoset refinement_poset(const std::vector<Subdivision>& list) {
  SubdivisionPoset p;
  p.nodes = list;
  const int n = static_cast<int>(list.size());
  p.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) p.leq[i][j] = refines(list[i], list[j]);
  for (int i = 0; i < n; ++i) {
    bool minimal = true, maximal = true;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      if (p.leq[j][i] && !(list[j] == list[i])) minimal = false;
      if (p.leq[i][j] && !(list[j] == list[i])) maximal = false;
    }
    if (minimal) p.minimal.push_back(i);
    if (maximal) p.maximal.push_back(i);
  }
  return p;
}

}  // namespace cubestrata
