#include "cubestrata/geometry.hpp"

#include <algorithm>
#include <numeric>

#include "cubestrata/linear_system.hpp"

namespace cubestrata {

std::vector<Vid> mask_vids(VertexMask m) {
  std::vector<Vid> out;
  for (Vid v = 0; v < 8; ++v)
    if (mask_has(m, v)) out.push_back(v);
  return out;
}

std::string mask_label(VertexMask m) {
  std::string s;
  for (Vid v : mask_vids(m)) {
    if (!s.empty()) s += ' ';
    auto p = vid_coords(v);
    s += std::to_string(p[0]) + std::to_string(p[1]) + std::to_string(p[2]);
  }
  return s;
}

bool cell_less(VertexMask a, VertexMask b) {
  if (a == b) return false;
  for (Vid v = 0; v < 8; ++v) {
    bool ia = mask_has(a, v), ib = mask_has(b, v);
    if (ia != ib) return ia;  // containing the smaller vid sorts first
  }
  return false;
}

Vid SymQElement::apply(Vid v) const {
  auto p = vid_coords(v);
  int q[3];
  for (int i = 0; i < 3; ++i) q[i] = p[perm[i]] ^ flip[i];
  return coords_vid(q[0], q[1], q[2]);
}

VertexMask SymQElement::apply_mask(VertexMask m) const {
  VertexMask out = 0;
  for (Vid v = 0; v < 8; ++v)
    if (mask_has(m, v)) out |= VertexMask(1u << apply(v));
  return out;
}

SymQElement SymQElement::compose(const SymQElement& then) const {
  // (then o this): apply *this first.
  SymQElement r;
  for (int i = 0; i < 3; ++i) {
    r.perm[i] = perm[then.perm[i]];
    r.flip[i] = flip[then.perm[i]] ^ then.flip[i];
  }
  return r;
}

const std::vector<SymQElement>& symq_elements() {
  static const std::vector<SymQElement> all = [] {
    std::vector<SymQElement> out;
    std::array<int, 3> p = {0, 1, 2};
    std::sort(p.begin(), p.end());
    do {
      for (int f = 0; f < 8; ++f)
        out.push_back(SymQElement{p, {(f >> 2) & 1, (f >> 1) & 1, f & 1}});
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return all;
}

namespace {

std::array<long, 3> sub(Vid a, Vid b) {
  auto pa = vid_coords(a), pb = vid_coords(b);
  return {long(pa[0] - pb[0]), long(pa[1] - pb[1]), long(pa[2] - pb[2])};
}

std::array<long, 3> cross(const std::array<long, 3>& u, const std::array<long, 3>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

long dot(const std::array<long, 3>& u, const std::array<long, 3>& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

long det3(const std::array<long, 3>& a, const std::array<long, 3>& b,
          const std::array<long, 3>& c) {
  return dot(a, cross(b, c));
}

bool full_dimensional(VertexMask m) {
  auto vs = mask_vids(m);
  if (vs.size() < 4) return false;
  for (size_t i = 1; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      for (size_t k = j + 1; k < vs.size(); ++k)
        if (det3(sub(vs[i], vs[0]), sub(vs[j], vs[0]), sub(vs[k], vs[0])) != 0) return true;
  return false;
}

// Orders the vertices of a convex polygon (given by vids on a common plane
// with normal n) into a cycle, exactly.
std::vector<Vid> order_cycle(const std::vector<Vid>& vs, const std::array<long, 3>& n) {
  const long k = static_cast<long>(vs.size());
  std::array<long, 3> c = {0, 0, 0};
  for (Vid v : vs) {
    auto p = vid_coords(v);
    c[0] += p[0], c[1] += p[1], c[2] += p[2];
  }
  auto scaled = [&](Vid v) {
    auto p = vid_coords(v);
    return std::array<long, 3>{k * p[0] - c[0], k * p[1] - c[1], k * p[2] - c[2]};
  };
  std::vector<Vid> out = vs;
  auto ref = scaled(vs[0]);
  auto half = [&](const std::array<long, 3>& u) {
    long s = det3(n, ref, u);
    if (s > 0) return 0;
    if (s < 0) return 1;
    return dot(ref, u) > 0 ? 0 : 1;
  };
  std::sort(out.begin(), out.end(), [&](Vid a, Vid b) {
    auto ua = scaled(a), ub = scaled(b);
    int ha = half(ua), hb = half(ub);
    if (ha != hb) return ha < hb;
    return det3(n, ua, ub) > 0;
  });
  return out;
}

CellGeom build_geom(VertexMask mask) {
  CellGeom g;
  g.mask = mask;
  auto vs = mask_vids(mask);

  // facets: supporting planes through vertex triples
  std::set<Plane> seen;
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      for (size_t k = j + 1; k < vs.size(); ++k) {
        auto n = cross(sub(vs[j], vs[i]), sub(vs[k], vs[i]));
        if (n == std::array<long, 3>{0, 0, 0}) continue;
        long gg = std::gcd(std::gcd(std::abs(n[0]), std::abs(n[1])), std::abs(n[2]));
        for (long& x : n) x /= gg;
        auto pi = vid_coords(vs[i]);
        long d = n[0] * pi[0] + n[1] * pi[1] + n[2] * pi[2];
        Plane pl{n[0], n[1], n[2], d};
        bool pos = false, neg = false;
        for (Vid v : vs) {
          long e = pl.eval(v);
          if (e > 0) pos = true;
          if (e < 0) neg = true;
        }
        if (pos && neg) continue;
        if (neg) {  // flip to inward
          pl = Plane{-pl.a, -pl.b, -pl.c, -pl.d};
        }
        if (!seen.insert(pl).second) continue;
        Facet f;
        f.plane = pl;
        std::vector<Vid> on;
        for (Vid v : vs)
          if (pl.eval(v) == 0) {
            f.verts |= VertexMask(1u << v);
            on.push_back(v);
          }
        f.cycle = order_cycle(on, {pl.a, pl.b, pl.c});
        g.facets.push_back(std::move(f));
      }

  // volume: fan from vs[0] over facets not containing it
  long vol = 0;
  for (const Facet& f : g.facets) {
    if (mask_has(f.verts, vs[0])) continue;
    for (size_t t = 1; t + 1 < f.cycle.size(); ++t)
      vol += std::abs(det3(sub(f.cycle[0], vs[0]), sub(f.cycle[t], vs[0]),
                           sub(f.cycle[t + 1], vs[0])));
  }
  g.volume = static_cast<int>(vol);

  // face lattice as vertex sets
  g.faces.insert(mask);
  for (const Facet& f : g.facets) g.faces.insert(f.verts);
  for (size_t i = 0; i < g.facets.size(); ++i)
    for (size_t j = i + 1; j < g.facets.size(); ++j) {
      VertexMask e = g.facets[i].verts & g.facets[j].verts;
      if (mask_size(e) == 2) {
        if (g.faces.insert(e).second) g.edges.push_back(e);
      }
    }
  for (Vid v : vs) g.faces.insert(VertexMask(1u << v));

  // canonical form over Sym(Q)
  g.canonical = mask;
  for (const SymQElement& s : symq_elements()) {
    VertexMask im = s.apply_mask(mask);
    if (cell_less(im, g.canonical)) g.canonical = im;
  }

  // corner cut: apex plus its three cube neighbours
  for (Vid v = 0; v < 8; ++v) {
    VertexMask cc = VertexMask((1u << v) | (1u << (v ^ 1)) | (1u << (v ^ 2)) | (1u << (v ^ 4)));
    if (mask == cc) {
      g.is_corner_cut = true;
      g.apex = v;
    }
  }
  return g;
}

// Strict/weak membership rows for "point inside cell".
void add_cell_rows(const CellGeom& g, bool strict, LinearSystem* sys) {
  for (const Facet& f : g.facets) {
    LinRow r;
    r.coeffs = {Rat(f.plane.a), Rat(f.plane.b), Rat(f.plane.c)};
    r.rhs = Rat(f.plane.d);
    r.kind = strict ? LinRow::GT : LinRow::GE;
    sys->rows.push_back(std::move(r));
  }
}

}  // namespace

CellUniverse::CellUniverse() {
  index_.fill(-1);
  for (int m = 0; m < 256; ++m) {
    VertexMask mask = VertexMask(m);
    if (mask_size(mask) < 4 || !full_dimensional(mask)) continue;
    index_[mask] = static_cast<int>(cells_.size());
    cells_.push_back(mask);
    geoms_.push_back(build_geom(mask));
  }

  const int n = static_cast<int>(cells_.size());
  compat_.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const CellGeom& A = geoms_[i];
      const CellGeom& B = geoms_[j];

      // interiors must be disjoint; try a facet-plane separation first
      bool separated = false;
      auto separates = [](const CellGeom& from, const CellGeom& other) {
        for (const Facet& f : from.facets) {
          bool all_out = true;
          for (Vid v : mask_vids(other.mask))
            if (f.plane.eval(v) > 0) {
              all_out = false;
              break;
            }
          if (all_out) return true;
        }
        return false;
      };
      if (separates(A, B) || separates(B, A)) separated = true;
      if (!separated) {
        LinearSystem sys;
        sys.nvars = 3;
        add_cell_rows(A, true, &sys);
        add_cell_rows(B, true, &sys);
        if (lp_feasible(sys).feasible) continue;  // interiors overlap
      }

      VertexMask shared = A.mask & B.mask;
      if (shared == 0) {
        // must be fully disjoint, not merely interior-disjoint
        LinearSystem sys;
        sys.nvars = 3;
        add_cell_rows(A, false, &sys);
        add_cell_rows(B, false, &sys);
        if (lp_feasible(sys).feasible) continue;
        compat_[i][j] = compat_[j][i] = true;
        continue;
      }
      if (!A.faces.count(shared) || !B.faces.count(shared)) continue;

      // supporting functional for the shared face on A
      long ha = 0, hb = 0, hc = 0, hd = 0;
      for (const Facet& f : A.facets)
        if ((f.verts & shared) == shared) {
          ha += f.plane.a;
          hb += f.plane.b;
          hc += f.plane.c;
          hd += f.plane.d;
        }
      // quick path: B entirely on the non-positive side
      bool b_below = true;
      for (Vid v : mask_vids(B.mask)) {
        auto p = vid_coords(v);
        if (ha * p[0] + hb * p[1] + hc * p[2] - hd > 0) {
          b_below = false;
          break;
        }
      }
      bool ok = b_below;
      if (!ok) {
        LinearSystem sys;
        sys.nvars = 3;
        add_cell_rows(A, false, &sys);
        add_cell_rows(B, false, &sys);
        LinRow r;
        r.coeffs = {Rat(ha), Rat(hb), Rat(hc)};
        r.rhs = Rat(hd);
        r.kind = LinRow::GT;
        sys.rows.push_back(std::move(r));
        ok = !lp_feasible(sys).feasible;
      }
      if (ok) compat_[i][j] = compat_[j][i] = true;
    }
}

const CellUniverse& CellUniverse::get() {
  static CellUniverse u;
  return u;
}

const CellGeom& CellUniverse::geom(VertexMask m) const {
  int i = index_[m];
  if (i < 0) throw DegenerateCell("not a full-dimensional cell: " + mask_label(m));
  return geoms_[i];
}

bool CellUniverse::compatible(VertexMask a, VertexMask b) const {
  return compat_[index_[a]][index_[b]];
}

MarkedCell::MarkedCell(VertexMask m) : mask_(m) {
  if (!CellUniverse::get().valid(m))
    throw DegenerateCell("cell is not full-dimensional: " + mask_label(m));
}

MarkedCell::MarkedCell(const std::vector<std::array<int, 3>>& verts) : mask_(0) {
  for (const auto& p : verts) {
    for (int c : p)
      if (c != 0 && c != 1) throw std::invalid_argument("vertex outside the unit cube");
    mask_ |= VertexMask(1u << coords_vid(p[0], p[1], p[2]));
  }
  if (!CellUniverse::get().valid(mask_))
    throw DegenerateCell("cell is not full-dimensional: " + mask_label(mask_));
}

int MarkedCell::normalized_volume() const { return CellUniverse::get().geom(mask_).volume; }

MarkedCell MarkedCell::canonical_form() const {
  return MarkedCell(CellUniverse::get().geom(mask_).canonical);
}

std::array<std::vector<VertexMask>, 4> MarkedCell::face_lattice() const {
  const CellGeom& g = CellUniverse::get().geom(mask_);
  std::array<std::vector<VertexMask>, 4> out;
  for (Vid v : mask_vids(mask_)) out[0].push_back(VertexMask(1u << v));
  out[1] = g.edges;
  for (const Facet& f : g.facets) out[2].push_back(f.verts);
  out[3].push_back(mask_);
  return out;
}

std::vector<std::array<int, 3>> MarkedCell::vertices() const {
  std::vector<std::array<int, 3>> out;
  for (Vid v : mask_vids(mask_)) out.push_back(vid_coords(v));
  return out;
}

}  // namespace cubestrata
