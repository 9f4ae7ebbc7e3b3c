#include "cubestrata/cohomology.hpp"

#include <algorithm>
#include <map>

namespace cubestrata {

GenericComplex GenericComplex::from_subdivision(const Subdivision& s) {
  GenericComplex c;
  c.ambient_dim = 3;
  for (VertexMask m : s.cells) {
    std::vector<std::vector<long>> pts;
    for (Vid v : mask_vids(m)) {
      auto p = vid_coords(v);
      pts.push_back({p[0], p[1], p[2]});
    }
    c.cells.push_back(std::move(pts));
  }
  return c;
}

namespace {

IntMatrix saturated_lattice(const std::vector<std::vector<long>>& pts, int dim) {
  IntMatrix rows(static_cast<int>(pts.size()), dim + 1);
  for (size_t i = 0; i < pts.size(); ++i) {
    rows.at(static_cast<int>(i), 0) = 1;
    for (int d = 0; d < dim; ++d) rows.at(static_cast<int>(i), d + 1) = pts[i][d];
  }
  return saturate_rowspace(rows);
}

std::vector<std::vector<long>> shared_points(const std::vector<std::vector<long>>& a,
                                             const std::vector<std::vector<long>>& b) {
  std::vector<std::vector<long>> out;
  for (const auto& p : a)
    if (std::find(b.begin(), b.end(), p) != b.end()) out.push_back(p);
  return out;
}

// coordinates of vector v in the lattice with the given basis rows; must be integral
std::vector<Int> coords_in(const IntMatrix& basis_rows, const std::vector<Int>& v) {
  IntMatrix cols = basis_rows.transpose();
  std::vector<Rat> sol;
  if (!solve_rational(cols, v, &sol))
    throw std::logic_error("lattice vector outside enclosing lattice");
  std::vector<Int> out;
  for (const Rat& q : sol) {
    Rat c = q;
    c.canonicalize();
    if (c.get_den() != 1) throw std::logic_error("non-integral lattice coordinates");
    out.push_back(c.get_num());
  }
  return out;
}

}  // namespace

NerveComplex build_nerve(const GenericComplex& c) {
  NerveComplex n;
  const int dim = c.ambient_dim;
  for (const auto& cell : c.cells) n.cell_lattices.push_back(saturated_lattice(cell, dim));
  const int m = static_cast<int>(c.cells.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      auto shared = shared_points(c.cells[i], c.cells[j]);
      if (shared.empty()) continue;
      n.pairs.push_back({i, j, saturated_lattice(shared, dim)});
    }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) {
        auto shared = shared_points(shared_points(c.cells[i], c.cells[j]), c.cells[k]);
        if (shared.empty()) continue;
        n.triples.push_back({i, j, k, saturated_lattice(shared, dim)});
      }
  return n;
}

NerveComplex build_nerve(const Subdivision& s) {
  return build_nerve(GenericComplex::from_subdivision(s));
}

AbelianGroupDescriptor h1_of_nerve(const NerveComplex& n) {
  // block offsets
  std::vector<int> cell_off;
  int c0 = 0;
  for (const IntMatrix& l : n.cell_lattices) {
    cell_off.push_back(c0);
    c0 += l.rows;
  }
  std::vector<int> pair_off;
  int c1 = 0;
  for (const NervePair& p : n.pairs) {
    pair_off.push_back(c1);
    c1 += p.lattice.rows;
  }
  int c2 = 0;
  for (const NerveTriple& t : n.triples) c2 += t.lattice.rows;

  std::map<std::pair<int, int>, int> pair_index;
  for (size_t p = 0; p < n.pairs.size(); ++p)
    pair_index[{n.pairs[p].i, n.pairs[p].j}] = static_cast<int>(p);

  // boundary d1: pair lattice basis vector b -> (b in cell j) - (b in cell i)
  IntMatrix M1(c0, c1);
  for (size_t p = 0; p < n.pairs.size(); ++p) {
    const NervePair& pr = n.pairs[p];
    for (int r = 0; r < pr.lattice.rows; ++r) {
      std::vector<Int> v(pr.lattice.cols);
      for (int c = 0; c < pr.lattice.cols; ++c) v[c] = pr.lattice.at(r, c);
      int col = pair_off[p] + r;
      auto cj = coords_in(n.cell_lattices[pr.j], v);
      for (size_t t = 0; t < cj.size(); ++t) M1.at(cell_off[pr.j] + static_cast<int>(t), col) = cj[t];
      auto ci = coords_in(n.cell_lattices[pr.i], v);
      for (size_t t = 0; t < ci.size(); ++t)
        M1.at(cell_off[pr.i] + static_cast<int>(t), col) -= ci[t];
    }
  }

  // boundary d2: triple basis vector -> (jk) - (ik) + (ij)
  IntMatrix M2(c1, c2);
  int col = 0;
  for (const NerveTriple& tr : n.triples) {
    for (int r = 0; r < tr.lattice.rows; ++r, ++col) {
      std::vector<Int> v(tr.lattice.cols);
      for (int c = 0; c < tr.lattice.cols; ++c) v[c] = tr.lattice.at(r, c);
      struct Term {
        std::pair<int, int> pr;
        int sign;
      };
      Term terms[3] = {{{tr.j, tr.k}, +1}, {{tr.i, tr.k}, -1}, {{tr.i, tr.j}, +1}};
      for (const Term& t : terms) {
        int p = pair_index.at(t.pr);
        auto cs = coords_in(n.pairs[p].lattice, v);
        for (size_t q = 0; q < cs.size(); ++q)
          M2.at(pair_off[p] + static_cast<int>(q), col) += t.sign * cs[q];
      }
    }
  }

  // H1 = ker(M1) / im(M2)
  IntMatrix K = integer_kernel(M1);
  AbelianGroupDescriptor out;
  if (K.cols == 0) {
    return out;  // trivial
  }
  // express columns of M2 in the kernel basis
  IntMatrix Y(K.cols, M2.cols);
  for (int c = 0; c < M2.cols; ++c) {
    std::vector<Int> target(M2.rows);
    for (int r = 0; r < M2.rows; ++r) target[r] = M2.at(r, c);
    std::vector<Rat> sol;
    if (!solve_rational(K, target, &sol))
      throw std::logic_error("boundary image escapes the cycle lattice");
    for (int r = 0; r < K.cols; ++r) {
      Rat q = sol[r];
      q.canonicalize();
      if (q.get_den() != 1) throw std::logic_error("non-integral cycle coordinates");
      Y.at(r, c) = q.get_num();
    }
  }
  SmithResult snf = smith_normal_form(Y);
  out.rank = K.cols - snf.rank;
  for (const Int& d : snf.factors)
    if (d > 1) out.torsion.push_back(d);
  return out;
}

AbelianGroupDescriptor h1_torus(const Subdivision& s) {
  validate_subdivision(s);
  return h1_of_nerve(build_nerve(s));
}

AbelianGroupDescriptor h1_generic(const GenericComplex& c) { return h1_of_nerve(build_nerve(c)); }

ReductionVerdict reduce_and_verdict(const Subdivision& s) {
  validate_subdivision(s);
  const CellUniverse& u = CellUniverse::get();
  std::vector<VertexMask> residue = s.cells;

  auto shared_facets = [&](VertexMask m, const std::vector<VertexMask>& cells) {
    int count = 0;
    const CellGeom& g = u.geom(m);
    for (VertexMask other : cells) {
      if (other == m) continue;
      VertexMask sh = VertexMask(m & other);
      for (const Facet& f : g.facets)
        if (f.verts == sh) ++count;
    }
    return count;
  };

  bool changed = true;
  while (changed && residue.size() > 1) {
    changed = false;
    for (size_t i = 0; i < residue.size(); ++i)
      if (shared_facets(residue[i], residue) == 1) {
        residue.erase(residue.begin() + i);
        changed = true;
        break;
      }
  }
  if (residue.size() == 1) return ReductionVerdict::trivial_by_reduction;

  // cycle around a common codimension-2 face: a common edge shared by all,
  // each cell facet-adjacent to exactly two others, and connected
  VertexMask common = 0xFF;
  for (VertexMask m : residue) common &= m;
  bool has_common_edge = false;
  for (Vid v = 0; v < 8 && !has_common_edge; ++v)
    for (Vid w = v + 1; w < 8 && !has_common_edge; ++w) {
      VertexMask e = VertexMask((1u << v) | (1u << w));
      if ((common & e) != e) continue;
      bool edge_of_all = true;
      for (VertexMask m : residue)
        if (!u.geom(m).faces.count(e)) {
          edge_of_all = false;
          break;
        }
      if (edge_of_all) has_common_edge = true;
    }
  if (!has_common_edge) return ReductionVerdict::inconclusive;

  const int n = static_cast<int>(residue.size());
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      VertexMask sh = VertexMask(residue[i] & residue[j]);
      bool facet = false;
      for (const Facet& f : u.geom(residue[i]).facets) facet |= (f.verts == sh);
      if (facet) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  for (int i = 0; i < n; ++i)
    if (adj[i].size() != 2) return ReductionVerdict::inconclusive;
  std::vector<bool> seen(n, false);
  std::vector<int> stack = {0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x])
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
  }
  return reached == n ? ReductionVerdict::trivial_by_reduction : ReductionVerdict::inconclusive;
}

}  // namespace cubestrata
