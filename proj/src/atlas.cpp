#include "cubestrata/atlas.hpp"

#include <algorithm>

namespace cubestrata {

namespace {

CoefficientAssignment prime_coefficients() {
  static const int primes[8] = {2, 3, 5, 7, 11, 13, 17, 19};
  CoefficientAssignment c;
  for (Vid v = 0; v < 8; ++v) c[v] = Rat(primes[v]);
  return c;
}

bool orbit_refines(const Subdivision& a, const Subdivision& b) {
  for (const SymQElement& g : symq_elements())
    if (refines(apply_sym(a, g), b)) return true;
  return false;
}

// off-wall vertices of a prism cell within a two-prism subdivision
std::pair<Vid, Vid> prism_offwall(const Subdivision& s, VertexMask prism) {
  VertexMask wall = 0;
  for (VertexMask other : s.cells)
    if (other != prism) wall = VertexMask(prism & other);
  auto vs = mask_vids(VertexMask(prism & ~wall));
  return {vs[0], vs[1]};
}

}  // namespace

const BoundaryAtlas& boundary_atlas() {
  static const BoundaryAtlas atlas = [] {
    BoundaryAtlas a;
    std::vector<Subdivision> all = enumerate_all();
    std::vector<Subdivision> ccfree;
    for (const Subdivision& s : all) {
      if (s.cells.size() == 1) continue;  // the trivial subdivision is the interior
      if (detect_corner_cuts(s).empty()) ccfree.push_back(s);
    }
    CoefficientAssignment generic = prime_coefficients();

    int two_prism_index = -1;
    for (const SubdivisionOrbit& o : orbits(ccfree)) {
      StratumRecord r;
      r.kind = StratumKind::subdivision_indexed;
      r.representative = o.representative;
      r.orbit_size = o.size;
      r.dimension = stratum_dimension(o.representative);
      r.sample = generic;
      r.classification = classify_degeneration(o.representative, generic);
      r.id = "sub-" + std::to_string(a.strata.size());
      std::string types;
      for (const auto& cr : r.classification.cells) types += cell_type_char(cr.type);
      r.description = "subdivision orbit, cells " + types;
      if (r.representative.cells.size() == 2 &&
          cell_type(r.representative.cells[0]) == CellType::c)
        two_prism_index = static_cast<int>(a.strata.size());
      a.strata.push_back(std::move(r));
    }

    // the even 0-dimensional stratum: the unique corner-cut-free orbit of
    // stratum dimension 0 classified to the even cusp
    for (size_t i = 0; i < a.strata.size(); ++i) {
      const StratumRecord& r = a.strata[i];
      if (r.dimension == 0 && r.classification.cusp == CuspLabel::even) {
        if (a.even_zero_index >= 0)
          throw EvenZeroStratumNotFound("even 0-stratum is not unique");
        a.even_zero_index = static_cast<int>(i);
      }
    }
    if (a.even_zero_index < 0)
      throw EvenZeroStratumNotFound("no corner-cut-free orbit classifies to the even cusp");

    // coefficient-degeneration strata, hard-coded per the explicit lists:
    // over the two-prism stratum the wall conic degenerates (c2/c3 gluings),
    // over the trivial subdivision the equation factors (d2/d3)
    if (two_prism_index < 0) throw std::logic_error("two-prism orbit missing");
    const Subdivision& prisms = a.strata[two_prism_index].representative;
    auto [p1a, p1b] = prism_offwall(prisms, prisms.cells[0]);
    auto [p2a, p2b] = prism_offwall(prisms, prisms.cells[1]);
    auto coeff_stratum = [&](const std::string& id, const Subdivision& carrier, int dim,
                             const CoefficientAssignment& sample, const std::string& desc) {
      StratumRecord r;
      r.kind = StratumKind::coefficient;
      r.id = id;
      r.representative = carrier;
      r.orbit_size = 0;
      r.dimension = dim;
      r.sample = sample;
      r.classification = classify_degeneration(carrier, sample);
      r.description = desc;
      a.strata.push_back(std::move(r));
      return static_cast<int>(a.strata.size()) - 1;
    };

    CoefficientAssignment wall_ones;
    for (Vid v = 0; v < 8; ++v) wall_ones[v] = 1;
    CoefficientAssignment c2c2 = wall_ones, c2c3 = wall_ones, c3c3 = wall_ones;
    c2c2[p1a] = 2, c2c2[p1b] = 3, c2c2[p2a] = 5, c2c2[p2b] = 7;
    c2c3[p1a] = 2, c2c3[p1b] = 2, c2c3[p2a] = 5, c2c3[p2b] = 7;
    c3c3[p1a] = 2, c3c3[p1b] = 2, c3c3[p2a] = 5, c3c3[p2b] = 5;
    int i_c2c2 = coeff_stratum("odd1-c2c2", prisms, 2, c2c2, "glue two (c2)");
    int i_c2c3 = coeff_stratum("odd1-c2c3", prisms, 1, c2c3, "glue (c2) and (c3)");
    int i_c3c3 = coeff_stratum("odd1-c3c3", prisms, 0, c3c3, "glue two (c3)");

    Subdivision trivial;
    trivial.cells = {VertexMask(0xFF)};
    CoefficientAssignment d2;
    for (Vid v = 0; v < 8; ++v) d2[v] = ((v & 3) == 3) ? Rat(2) : Rat(1);
    CoefficientAssignment d3;
    for (Vid v = 0; v < 8; ++v) d3[v] = 1;
    int i_d2 = coeff_stratum("odd2-d2", trivial, 1, d2, "equation splits off a linear factor");
    int i_d3 = coeff_stratum("odd2-d3", trivial, 0, d3, "product of three linear forms");

    // closure order
    const int n = static_cast<int>(a.strata.size());
    a.closure_leq.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) a.closure_leq[i][i] = true;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        if (a.strata[i].kind == StratumKind::subdivision_indexed &&
            a.strata[j].kind == StratumKind::subdivision_indexed)
          a.closure_leq[i][j] =
              orbit_refines(a.strata[i].representative, a.strata[j].representative);
      }
    auto link = [&](int lo, int hi) { a.closure_leq[lo][hi] = true; };
    link(i_c2c2, two_prism_index);
    link(i_c2c3, i_c2c2);
    link(i_c3c3, i_c2c3);
    link(i_d3, i_d2);
    // transitive closure
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (a.closure_leq[i][k] && a.closure_leq[k][j]) a.closure_leq[i][j] = true;

    for (int i = 0; i < n; ++i) {
      bool maximal = true;
      for (int j = 0; j < n; ++j)
        if (j != i && a.closure_leq[i][j]) maximal = false;
      if (maximal) a.maximal.push_back(i);
    }
    return a;
  }();
  return atlas;
}

std::vector<int> maximal_components(const BoundaryAtlas& atlas) {
  std::vector<int> dims;
  for (int i : atlas.maximal) dims.push_back(atlas.strata[i].dimension);
  std::sort(dims.rbegin(), dims.rend());
  return dims;
}

namespace {

CrosscheckReport make_report(const std::vector<std::pair<int, std::string>>& strata,
                             const SubdiagramClassification& cls) {
  CrosscheckReport rep;
  for (const auto& [dim, desc] : strata) {
    ++rep.strata_by_dim[dim];
    ++rep.strata_total;
  }
  struct ClassEntry {
    std::string desc;
    int rank;
    bool parabolic;
  };
  std::vector<ClassEntry> entries;
  for (const SubdiagramClass& c : cls.elliptic) {
    ++rep.classes_by_kind["elliptic r" + std::to_string(c.rank)];
    ++rep.classes_total;
    entries.push_back({"elliptic " + c.type, c.rank, false});
  }
  for (const SubdiagramClass& c : cls.maximal_parabolic) {
    ++rep.classes_by_kind["parabolic r" + std::to_string(c.rank)];
    ++rep.classes_total;
    entries.push_back({"parabolic " + c.type, c.rank, true});
  }
  rep.totals_equal = (rep.strata_total == rep.classes_total);

  // two candidate dimension rules: elliptic rank r <-> dim 3-r with
  // parabolic <-> dim 0 (Baily-Borel-like), or rank r <-> dim r with
  // parabolic <-> dim 3 (toroidal: rays <-> divisors)
  auto implied_dims = [&](bool codim_rule) {
    std::map<int, int> m;
    for (const ClassEntry& e : entries) {
      int d = codim_rule ? (e.parabolic ? 0 : 3 - e.rank) : (e.parabolic ? 3 : e.rank);
      ++m[d];
    }
    return m;
  };
  bool codim_fits = rep.totals_equal && implied_dims(true) == rep.strata_by_dim;
  bool rank_fits = rep.totals_equal && implied_dims(false) == rep.strata_by_dim;
  rep.rank_rule_consistent = codim_fits;
  rep.dimension_rule = codim_fits ? "3-r" : (rank_fits ? "r" : "none");

  // pairing under the rule that fits, otherwise best effort; parabolic
  // classes (ideal vertices) pick strata meeting the 1-cusps (case II) first
  bool use_codim = codim_fits || !rank_fits;
  std::vector<bool> used(strata.size(), false);
  auto pick_stratum = [&](int dim, bool prefer_case_ii) {
    for (int pass = 0; pass < 2; ++pass)
      for (size_t i = 0; i < strata.size(); ++i) {
        if (used[i] || strata[i].first != dim) continue;
        bool is_ii = strata[i].second.find("case II)") != std::string::npos;
        if (pass == 0 && is_ii != prefer_case_ii) continue;
        return static_cast<int>(i);
      }
    for (size_t i = 0; i < strata.size(); ++i)
      if (!used[i]) return static_cast<int>(i);
    return -1;
  };
  for (const ClassEntry& e : entries) {
    int d = use_codim ? (e.parabolic ? 0 : 3 - e.rank) : (e.parabolic ? 3 : e.rank);
    int pick = pick_stratum(d, e.parabolic);
    if (pick >= 0) {
      used[pick] = true;
      rep.pairing.push_back({e.desc, strata[pick].second});
    } else {
      rep.pairing.push_back({e.desc, "(unmatched)"});
    }
  }
  return rep;
}

}  // namespace

CrosscheckReport crosscheck_even(const BoundaryAtlas& atlas, const SubdiagramClassification& cls) {
  if (atlas.even_zero_index < 0) throw EvenZeroStratumNotFound("atlas lacks the even 0-stratum");
  // Strata strictly above the even 0-stratum; the 0-stratum itself is the
  // one the empty subdiagram would index, and both are left out of the
  // comparison by the same convention.
  std::vector<std::pair<int, std::string>> strata;
  for (size_t i = 0; i < atlas.strata.size(); ++i) {
    const StratumRecord& r = atlas.strata[i];
    if (r.kind != StratumKind::subdivision_indexed) continue;
    if (static_cast<int>(i) == atlas.even_zero_index) continue;
    if (!atlas.closure_leq[atlas.even_zero_index][static_cast<int>(i)]) continue;
    const char* cs = r.classification.dcase == DegenerationCase::I
                         ? "I"
                         : (r.classification.dcase == DegenerationCase::II ? "II" : "III");
    strata.push_back({r.dimension, r.id + " dim " + std::to_string(r.dimension) + " (" +
                                       r.description + ", case " + cs + ")"});
  }
  std::sort(strata.begin(), strata.end(),
            [](const auto& x, const auto& y) { return x.first > y.first; });
  return make_report(strata, cls);
}

CrosscheckReport crosscheck_odd1(const SubdiagramClassification& cls) {
  const BoundaryAtlas& atlas = boundary_atlas();
  std::vector<std::pair<int, std::string>> strata;
  for (const StratumRecord& r : atlas.strata)
    if (r.kind == StratumKind::coefficient && r.id.rfind("odd1-", 0) == 0)
      strata.push_back({r.dimension, r.id + " dim " + std::to_string(r.dimension)});
  std::sort(strata.begin(), strata.end(),
            [](const auto& x, const auto& y) { return x.first > y.first; });
  return make_report(strata, cls);
}

std::string atlas_dot(const BoundaryAtlas& atlas) {
  std::string s = "digraph atlas {\n  rankdir=BT;\n";
  const int n = static_cast<int>(atlas.strata.size());
  for (int i = 0; i < n; ++i) {
    const StratumRecord& r = atlas.strata[i];
    s += "  s" + std::to_string(i) + " [label=\"" + r.id + "\\ndim " +
         std::to_string(r.dimension) + "\\ncusp " + cusp_name(r.classification.cusp) + "\"];\n";
  }
  // covering edges of the closure order
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !atlas.closure_leq[i][j]) continue;
      bool covering = true;
      for (int k = 0; k < n; ++k)
        if (k != i && k != j && atlas.closure_leq[i][k] && atlas.closure_leq[k][j]) covering = false;
      if (covering) s += "  s" + std::to_string(i) + " -> s" + std::to_string(j) + ";\n";
    }
  s += "}\n";
  return s;
}

}  // namespace cubestrata
