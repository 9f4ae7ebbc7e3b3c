#include "cubestrata/classifier.hpp"

#include <algorithm>

#include "cubestrata/corner_cuts.hpp"

namespace cubestrata {

char cell_type_char(CellType t) {
  switch (t) {
    case CellType::a: return 'a';
    case CellType::b: return 'b';
    case CellType::c: return 'c';
    case CellType::d: return 'd';
  }
  return '?';
}

const char* cusp_name(CuspLabel c) {
  switch (c) {
    case CuspLabel::even: return "even";
    case CuspLabel::odd1: return "odd1";
    case CuspLabel::odd2: return "odd2";
    case CuspLabel::not_a_cusp: return "not-a-cusp";
    case CuspLabel::unassigned: return "unassigned";
  }
  return "?";
}

CellType cell_type(VertexMask cell) {
  const CellGeom& g = CellUniverse::get().geom(cell);
  int n = mask_size(cell), v = g.volume;
  if (n == 4 && v == 1) return CellType::a;
  if (n == 5 && v == 2) return CellType::b;
  if (n == 6 && v == 3) return CellType::c;
  if (n == 8 && v == 6) return CellType::d;
  throw NotABulletCell("cell signature (" + std::to_string(n) + "," + std::to_string(v) +
                       ") is not one of the four canonical types: " + mask_label(cell));
}

Rat hyperdeterminant_222(const CoefficientAssignment& q) {
  // vid = 4i + 2j + k
  const Rat &a = q[0], &b = q[1], &c = q[2], &d = q[3], &e = q[4], &f = q[5], &g = q[6],
            &h = q[7];
  Rat det = a * a * h * h + b * b * g * g + c * c * f * f + d * d * e * e;
  det -= 2 * (a * b * g * h + a * c * f * h + a * d * e * h + b * c * f * g + b * d * e * g +
              c * d * e * f);
  det += 4 * (a * d * f * g + b * c * e * h);
  return det;
}

namespace {

// checks whether the 2x4 matrix formed by the two slices along one axis has rank <= 1
bool flattening_rank1(const CoefficientAssignment& c, int axis_bit) {
  std::vector<Vid> lo, hi;
  for (Vid v = 0; v < 8; ++v) ((v & axis_bit) ? hi : lo).push_back(v);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (c[lo[i]] * c[hi[j]] - c[lo[j]] * c[hi[i]] != 0) return false;
  return true;
}

Rat facet_det(const CoefficientAssignment& c, VertexMask facet) {
  // 2x2 determinant of the coefficients on a cube facet, diagonal products
  auto vs = mask_vids(facet);
  Vid v0 = vs[0];
  Vid vdiag = -1;
  for (Vid v : vs)
    if (__builtin_popcount(v ^ v0) == 2) vdiag = v;
  Vid w1 = -1, w2 = -1;
  for (Vid v : vs)
    if (v != v0 && v != vdiag) (w1 < 0 ? w1 : w2) = v;
  return c[v0] * c[vdiag] - c[w1] * c[w2];
}

void check_edge_zeros(const CoefficientAssignment& c) {
  for (Vid v = 0; v < 8; ++v)
    for (int bit : {1, 2, 4}) {
      Vid w = v ^ bit;
      if (w > v && c[v] == 0 && c[w] == 0)
        throw InvalidCoefficients("coefficients vanish on both ends of a cube edge");
    }
}

VertexMask corner_cut_mask(Vid v) {
  return VertexMask((1u << v) | (1u << (v ^ 1)) | (1u << (v ^ 2)) | (1u << (v ^ 4)));
}

const std::array<VertexMask, 6>& cube_facets() {
  static const std::array<VertexMask, 6> f = [] {
    std::array<VertexMask, 6> out{};
    int n = 0;
    for (int bit : {4, 2, 1})
      for (int val : {0, 1}) {
        VertexMask m = 0;
        for (Vid v = 0; v < 8; ++v)
          if (((v & bit) ? 1 : 0) == val) m |= VertexMask(1u << v);
        out[n++] = m;
      }
    return out;
  }();
  return f;
}

}  // namespace

DClassification classify_d(const CoefficientAssignment& c) {
  bool all_zero = true;
  for (Vid v = 0; v < 8; ++v)
    if (c[v] != 0) all_zero = false;
  if (all_zero) throw InvalidCoefficients("identically zero equation");
  DClassification out;
  int rank1 = 0;
  for (int bit : {4, 2, 1})
    if (flattening_rank1(c, bit)) ++rank1;
  if (rank1 == 3) {
    out.label = DSubtype::d3;
    out.components = 3;
  } else if (rank1 == 1) {
    out.label = DSubtype::d2;
    out.components = 2;
  } else if (rank1 == 2) {
    throw std::logic_error("two rank-1 flattenings force the third");
  } else {
    out.label = hyperdeterminant_222(c) != 0 ? DSubtype::d1 : DSubtype::d1_prime;
    out.components = 1;
  }
  for (Vid v = 0; v < 8; ++v)
    if (c[v] == 0) out.triple_point = true;
  for (VertexMask f : cube_facets())
    if (facet_det(c, f) == 0) out.broken_lines.push_back(f);
  return out;
}

CSubtype classify_c(const std::array<Rat, 3>& a, const std::array<Rat, 3>& b) {
  if (a[0] == 0 || a[1] == 0 || b[0] == 0 || b[1] == 0)
    throw InvalidCoefficients("prism wall coefficients must be nonzero");
  if (a[2] == 0 && b[2] == 0)
    throw InvalidCoefficients("at most one of the off-wall coefficients may vanish");
  bool triples_prop = true;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (a[i] * b[j] - a[j] * b[i] != 0) triples_prop = false;
  if (triples_prop) return CSubtype::c3;
  if (a[0] * b[1] - a[1] * b[0] == 0) return CSubtype::c2;
  return CSubtype::c1;
}

int c_components(CSubtype t) { return t == CSubtype::c3 ? 2 : 1; }

void validate_coefficients(const Subdivision& s, const CoefficientAssignment& c) {
  check_edge_zeros(c);
  for (Vid v = 0; v < 8; ++v) {
    if (c[v] != 0) continue;
    // the vertex must carry a merged corner cut inside the cell containing it
    bool legal = false;
    for (VertexMask m : s.cells)
      if (mask_has(m, v)) legal |= ((m & corner_cut_mask(v)) == corner_cut_mask(v));
    if (!legal)
      throw InvalidCoefficients("zero coefficient at a vertex that is not a merged apex");
  }
}

DegenerationReport classify_degeneration(const Subdivision& s, const CoefficientAssignment& c) {
  validate_subdivision(s);
  if (!detect_corner_cuts(s).empty())
    throw InvalidSubdivision("classify_degeneration expects a corner-cut-free subdivision");
  validate_coefficients(s, c);
  const CellUniverse& u = CellUniverse::get();

  DegenerationReport rep;
  bool any_c = false, all_ab = true;
  std::vector<CSubtype> c_subtypes;
  std::optional<DSubtype> d_subtype;

  for (VertexMask m : s.cells) {
    CellReport cr;
    cr.cell = m;
    cr.type = cell_type(m);
    const CellGeom& g = u.geom(m);
    switch (cr.type) {
      case CellType::a: {
        for (Vid v : mask_vids(m))
          if (c[v] == 0) throw InvalidCoefficients("zero coefficient on a simplex cell");
        cr.components = 1;
        break;
      }
      case CellType::b: {
        // base square facet and pyramid apex
        VertexMask base = 0;
        for (const Facet& f : g.facets)
          if (mask_size(f.verts) == 4) base = f.verts;
        Vid apex = mask_vids(VertexMask(m & ~base))[0];
        for (Vid v : mask_vids(m)) {
          if (c[v] == 0) {
            if ((m & corner_cut_mask(v)) != corner_cut_mask(v))
              throw InvalidCoefficients("illegal zero on a pyramid cell");
            cr.triple_point = true;
          }
        }
        cr.conic_reducible = (facet_det(c, base) == 0);
        cr.components = 1;
        (void)apex;
        break;
      }
      case CellType::c: {
        any_c = true;
        all_ab = false;
        // wall = the interior facet shared with another cell of s
        VertexMask wall = 0;
        for (const Facet& f : g.facets) {
          if (mask_size(f.verts) != 4) continue;
          for (VertexMask other : s.cells)
            if (other != m && (other & f.verts) == f.verts) wall = f.verts;
        }
        if (!wall) throw InvalidSubdivision("prism cell without interior wall");
        // triangles: the two 3-vertex facets
        std::array<VertexMask, 2> tri{0, 0};
        int nt = 0;
        for (const Facet& f : g.facets)
          if (mask_size(f.verts) == 3) tri[nt++] = f.verts;
        std::array<Rat, 3> ta, tb;
        std::vector<Vid> wall_a;
        for (Vid v : mask_vids(VertexMask(tri[0] & wall))) wall_a.push_back(v);
        Vid a2 = mask_vids(VertexMask(tri[0] & ~wall))[0];
        Vid b2 = mask_vids(VertexMask(tri[1] & ~wall))[0];
        auto partner = [&](Vid v) {
          for (VertexMask e : g.edges)
            if (mask_has(e, v) && (e & tri[1]))
              return mask_vids(VertexMask(e & tri[1]))[0];
          throw std::logic_error("prism vertex without partner");
        };
        ta = {c[wall_a[0]], c[wall_a[1]], c[a2]};
        tb = {c[partner(wall_a[0])], c[partner(wall_a[1])], c[b2]};
        CSubtype sub = classify_c(ta, tb);
        c_subtypes.push_back(sub);
        cr.components = c_components(sub);
        cr.subtype = sub == CSubtype::c1 ? "c1" : (sub == CSubtype::c2 ? "c2" : "c3");
        break;
      }
      case CellType::d: {
        all_ab = false;
        DClassification dc = classify_d(c);
        d_subtype = dc.label;
        cr.components = dc.components;
        cr.triple_point = dc.triple_point;
        cr.broken_lines = dc.broken_lines;
        switch (dc.label) {
          case DSubtype::d1: cr.subtype = "d1"; break;
          case DSubtype::d1_prime: cr.subtype = "d1'"; break;
          case DSubtype::d2: cr.subtype = "d2"; break;
          case DSubtype::d3: cr.subtype = "d3"; break;
        }
        break;
      }
    }
    rep.components += cr.components;
    rep.cells.push_back(std::move(cr));
  }

  if (rep.components == 1) {
    rep.dcase = DegenerationCase::I;
    rep.cusp = CuspLabel::not_a_cusp;
    return rep;
  }
  if (rep.components == 2) {
    bool irreducible_glue = false;
    if (s.cells.size() == 1) {
      irreducible_glue = true;  // d2: the two pieces meet in an irreducible (1,1)-curve
    } else if (s.cells.size() == 2) {
      VertexMask wall = VertexMask(s.cells[0] & s.cells[1]);
      irreducible_glue = (facet_det(c, wall) != 0);
    }
    if (irreducible_glue) {
      rep.dcase = DegenerationCase::II;
      rep.cusp = CuspLabel::not_a_cusp;
      return rep;
    }
  }
  rep.dcase = DegenerationCase::III;
  if (all_ab) {
    rep.cusp = CuspLabel::even;
  } else if (any_c) {
    bool listed = true;
    for (CSubtype t : c_subtypes)
      if (t == CSubtype::c1) listed = false;
    rep.cusp = listed ? CuspLabel::odd1 : CuspLabel::unassigned;
  } else if (d_subtype && *d_subtype == DSubtype::d3) {
    rep.cusp = CuspLabel::odd2;
  } else {
    rep.cusp = CuspLabel::unassigned;
  }
  return rep;
}

}  // namespace cubestrata
