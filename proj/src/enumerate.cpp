#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "cubestrata/subdivision.hpp"

namespace cubestrata {

namespace {

Plane canonical_plane(const Plane& p, int* side) {
  long lead = p.a != 0 ? p.a : (p.b != 0 ? p.b : p.c);
  if (lead > 0) {
    *side = +1;
    return p;
  }
  *side = -1;
  return Plane{-p.a, -p.b, -p.c, -p.d};
}

struct WallKey {
  VertexMask verts;
  Plane plane;
  bool operator<(const WallKey& o) const {
    if (verts != o.verts) return cell_less(verts, o.verts);
    return plane < o.plane;
  }
};

// cells having a given facet, indexed by (polygon, canonical plane, side)
struct FacetIndex {
  std::map<WallKey, std::array<std::vector<VertexMask>, 2>> at;  // [side>0], [side<0]

  static const FacetIndex& get() {
    static FacetIndex idx = [] {
      FacetIndex f;
      const CellUniverse& u = CellUniverse::get();
      for (VertexMask m : u.cells())
        for (const Facet& fc : u.geom(m).facets) {
          int side;
          WallKey key{fc.verts, canonical_plane(fc.plane, &side)};
          f.at[key][side > 0 ? 0 : 1].push_back(m);
        }
      return f;
    }();
    return idx;
  }
};

struct Tiler {
  const CellUniverse& u = CellUniverse::get();
  VertexMask region;
  const CellGeom* region_geom;
  std::function<bool(const CellGeom&)> allow;
  std::vector<VertexMask> placed;
  std::map<WallKey, int> open;  // wall -> side still exposed
  std::set<std::vector<VertexMask>> results;

  bool on_region_boundary(const Plane& p) const {
    for (Vid v : mask_vids(region))
      if (p.eval(v) < 0) return false;
    return true;
  }

  bool cell_ok(VertexMask m) const {
    if ((m & ~region) != 0) return false;
    const CellGeom& g = u.geom(m);
    if (!allow(g)) return false;
    for (VertexMask q : placed)
      if (!u.compatible(m, q)) return false;
    return true;
  }

  void toggle_walls(VertexMask m, std::vector<WallKey>* touched) {
    for (const Facet& f : u.geom(m).facets) {
      if (on_region_boundary(f.plane)) continue;
      int side;
      WallKey key{f.verts, canonical_plane(f.plane, &side)};
      auto it = open.find(key);
      if (it == open.end()) {
        open[key] = side;
        touched->push_back(key);
      } else {
        assert(it->second == -side);
        open.erase(it);
        touched->push_back(key);
      }
    }
  }

  void untoggle(const std::vector<WallKey>& touched, VertexMask m) {
    for (const Facet& f : u.geom(m).facets) {
      if (on_region_boundary(f.plane)) continue;
      int side;
      WallKey key{f.verts, canonical_plane(f.plane, &side)};
      auto it = open.find(key);
      if (it == open.end())
        open[key] = -side;  // was matched, reopen the partner side
      else
        open.erase(it);
    }
    (void)touched;
  }

  void place(VertexMask m) {
    placed.push_back(m);
    std::vector<WallKey> touched;
    toggle_walls(m, &touched);
    recurse();
    untoggle(touched, m);
    placed.pop_back();
  }

  void recurse() {
    if (open.empty()) {
      std::vector<VertexMask> cells = placed;
      std::sort(cells.begin(), cells.end(), cell_less);
      results.insert(std::move(cells));
      return;
    }
    auto [key, side] = *open.begin();
    const auto& idx = FacetIndex::get().at;
    auto it = idx.find(key);
    if (it == idx.end()) return;
    // the filler sits on the opposite side of the wall
    const auto& cands = it->second[side > 0 ? 1 : 0];
    for (VertexMask m : cands) {
      if (!cell_ok(m)) continue;
      place(m);
    }
  }

  void run() {
    Vid seed_vid = mask_vids(region)[0];
    for (VertexMask m : u.cells()) {
      if (!mask_has(m, seed_vid)) continue;
      if (!cell_ok(m)) continue;
      place(m);
    }
  }
};

}  // namespace

std::vector<std::vector<VertexMask>> tile_region(
    VertexMask region, const std::function<bool(const CellGeom&)>& allow) {
  Tiler t;
  t.region = region;
  t.region_geom = &CellUniverse::get().geom(region);
  t.allow = allow;
  t.run();
  std::vector<std::vector<VertexMask>> out(t.results.begin(), t.results.end());
  return out;
}

namespace {

std::vector<Subdivision> strategy_top_down() {
  auto tilings = tile_region(0xFF, [](const CellGeom&) { return true; });
  std::vector<Subdivision> out;
  for (auto& cells : tilings) {
    Subdivision s;
    s.cells = std::move(cells);
    validate_subdivision(s);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subdivision fan_triangulation() {
  // the six tetrahedra around the main diagonal 000-111
  static const Vid hex[6] = {coords_vid(1, 0, 0), coords_vid(1, 1, 0), coords_vid(0, 1, 0),
                             coords_vid(0, 1, 1), coords_vid(0, 0, 1), coords_vid(1, 0, 1)};
  Subdivision s;
  for (int i = 0; i < 6; ++i) {
    VertexMask m = VertexMask((1u << 0) | (1u << 7) | (1u << hex[i]) | (1u << hex[(i + 1) % 6]));
    s.cells.push_back(m);
  }
  s.sort();
  validate_subdivision(s);
  return s;
}

std::vector<Subdivision> triangulations_by_flips() {
  const CellUniverse& u = CellUniverse::get();
  auto simplices_only = [](const CellGeom& g) { return mask_size(g.mask) == 4; };

  std::set<Subdivision> seen;
  std::vector<Subdivision> queue;
  Subdivision seed = fan_triangulation();
  seen.insert(seed);
  queue.push_back(seed);

  while (!queue.empty()) {
    Subdivision t = queue.back();
    queue.pop_back();
    const int n = static_cast<int>(t.cells.size());
    // re-triangulate every convex union of 2..4 cells
    for (int bits = 1; bits < (1 << n); ++bits) {
      int k = __builtin_popcount(bits);
      if (k < 2 || k > 4) continue;
      VertexMask region = 0;
      int vol = 0;
      for (int i = 0; i < n; ++i)
        if (bits & (1 << i)) {
          region |= t.cells[i];
          vol += u.geom(t.cells[i]).volume;
        }
      if (!u.valid(region) || u.geom(region).volume != vol) continue;
      std::vector<VertexMask> rest;
      for (int i = 0; i < n; ++i)
        if (!(bits & (1 << i))) rest.push_back(t.cells[i]);
      for (auto& alt : tile_region(region, simplices_only)) {
        Subdivision cand;
        cand.cells = rest;
        cand.cells.insert(cand.cells.end(), alt.begin(), alt.end());
        cand.sort();
        if (cand == t) continue;
        bool ok = true;
        for (VertexMask a : alt) {
          for (VertexMask r : rest)
            if (!u.compatible(a, r)) {
              ok = false;
              break;
            }
          if (!ok) break;
        }
        if (!ok) continue;
        if (seen.insert(cand).second) queue.push_back(cand);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

void partitions_rec(int i, int n, std::vector<std::vector<int>>& blocks,
                    const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
  if (i == n) {
    emit(blocks);
    return;
  }
  const size_t existing = blocks.size();
  for (size_t bi = 0; bi < existing; ++bi) {
    blocks[bi].push_back(i);
    partitions_rec(i + 1, n, blocks, emit);
    blocks[bi].pop_back();
  }
  blocks.push_back({i});
  partitions_rec(i + 1, n, blocks, emit);
  blocks.pop_back();
}

std::vector<Subdivision> strategy_bottom_up(std::vector<Subdivision>* triangulations_out) {
  const CellUniverse& u = CellUniverse::get();
  std::vector<Subdivision> tris = triangulations_by_flips();
  if (triangulations_out) *triangulations_out = tris;

  std::set<Subdivision> all;
  for (const Subdivision& t : tris) {
    const int n = static_cast<int>(t.cells.size());
    std::vector<std::vector<int>> blocks;
    partitions_rec(0, n, blocks, [&](const std::vector<std::vector<int>>& part) {
      Subdivision cand;
      for (const auto& blk : part) {
        VertexMask m = 0;
        int vol = 0;
        for (int i : blk) {
          m |= t.cells[i];
          vol += u.geom(t.cells[i]).volume;
        }
        if (!u.valid(m) || u.geom(m).volume != vol) return;
        cand.cells.push_back(m);
      }
      cand.sort();
      for (size_t i = 0; i < cand.cells.size(); ++i)
        for (size_t j = i + 1; j < cand.cells.size(); ++j) {
          if (cand.cells[i] == cand.cells[j]) return;
          if (!u.compatible(cand.cells[i], cand.cells[j])) return;
        }
      all.insert(std::move(cand));
    });
  }
  return {all.begin(), all.end()};
}

}  // namespace

const EnumerationBundle& enumeration_bundle() {
  static const EnumerationBundle bundle = [] {
    EnumerationBundle b;
    b.top_down = strategy_top_down();
    b.bottom_up = strategy_bottom_up(&b.triangulations);
    std::sort(b.triangulations.begin(), b.triangulations.end());
    b.strategies_agree = (b.top_down == b.bottom_up);
    return b;
  }();
  return bundle;
}

std::vector<Subdivision> enumerate_all() {
  const EnumerationBundle& b = enumeration_bundle();
  if (!b.strategies_agree)
    throw std::logic_error("enumeration strategies disagree");
  return b.top_down;
}

}  // namespace cubestrata
