#include "cubestrata/json_io.hpp"

#include <fstream>

namespace cubestrata {

std::string vid_string(Vid v) {
  auto p = vid_coords(v);
  return std::to_string(p[0]) + std::to_string(p[1]) + std::to_string(p[2]);
}

Vid vid_from_string(const std::string& s) {
  if (s.size() != 3) throw ParseError("vertex label must be a 3-bit string: " + s);
  for (char c : s)
    if (c != '0' && c != '1') throw ParseError("vertex label must be a 3-bit string: " + s);
  return coords_vid(s[0] - '0', s[1] - '0', s[2] - '0');
}

Json subdivision_to_json(const Subdivision& s) {
  Json cells = Json::array();
  for (VertexMask m : s.cells) {
    Json cell = Json::array();
    for (Vid v : mask_vids(m)) {
      auto p = vid_coords(v);
      cell.push_back({p[0], p[1], p[2]});
    }
    cells.push_back(cell);
  }
  return Json{{"cells", cells}};
}

Subdivision subdivision_from_json(const Json& j) {
  const Json& cells = j.contains("cells") ? j.at("cells") : j;
  Subdivision s;
  for (const Json& cell : cells) {
    VertexMask m = 0;
    for (const Json& pt : cell) {
      if (!pt.is_array() || pt.size() != 3) throw ParseError("cell vertex must be [x,y,z]");
      int x = pt[0].get<int>(), y = pt[1].get<int>(), z = pt[2].get<int>();
      if ((x | y | z) < 0 || x > 1 || y > 1 || z > 1)
        throw ParseError("cell vertex outside the unit cube");
      m |= VertexMask(1u << coords_vid(x, y, z));
    }
    s.cells.push_back(m);
  }
  s.sort();
  validate_subdivision(s);
  return s;
}

namespace {

std::array<Rat, 8> table_from_json(const Json& j, const char* wrapper) {
  const Json& map = j.contains(wrapper) ? j.at(wrapper) : j;
  std::array<Rat, 8> out;
  std::array<bool, 8> seen{};
  for (auto it = map.begin(); it != map.end(); ++it) {
    Vid v = vid_from_string(it.key());
    out[v] = it.value().is_string() ? rat_from_string(it.value().get<std::string>())
                                    : Rat(it.value().get<long>());
    seen[v] = true;
  }
  for (Vid v = 0; v < 8; ++v)
    if (!seen[v]) throw ParseError(std::string(wrapper) + ": missing vertex " + vid_string(v));
  return out;
}

Json table_to_json(const std::array<Rat, 8>& t, const char* wrapper) {
  Json map = Json::object();
  for (Vid v = 0; v < 8; ++v) map[vid_string(v)] = rat_to_string(t[v]);
  return Json{{wrapper, map}};
}

}  // namespace

Json heights_to_json(const HeightFunction& h) { return table_to_json(h, "heights"); }
HeightFunction heights_from_json(const Json& j) { return table_from_json(j, "heights"); }

Json coefficients_to_json(const CoefficientAssignment& c) {
  return table_to_json(c, "coefficients");
}
CoefficientAssignment coefficients_from_json(const Json& j) {
  return table_from_json(j, "coefficients");
}

Json degeneration_to_json(const DegenerationReport& r) {
  Json cells = Json::array();
  for (const CellReport& cr : r.cells) {
    Json verts = Json::array();
    for (Vid v : mask_vids(cr.cell)) {
      auto p = vid_coords(v);
      verts.push_back({p[0], p[1], p[2]});
    }
    Json c{{"vertices", verts},
           {"type", std::string(1, cell_type_char(cr.type))},
           {"components", cr.components}};
    if (!cr.subtype.empty()) c["subtype"] = cr.subtype;
    if (cr.triple_point) c["triple_point"] = true;
    if (cr.conic_reducible) c["conic_reducible"] = true;
    if (!cr.broken_lines.empty()) {
      Json bl = Json::array();
      for (VertexMask f : cr.broken_lines) bl.push_back(mask_label(f));
      c["broken_lines"] = bl;
    }
    cells.push_back(c);
  }
  const char* cs = r.dcase == DegenerationCase::I ? "I" : (r.dcase == DegenerationCase::II ? "II" : "III");
  return Json{{"components", r.components},
              {"case", cs},
              {"cusp", cusp_name(r.cusp)},
              {"cells", cells}};
}

Json group_to_json(const AbelianGroupDescriptor& g) {
  Json torsion = Json::array();
  for (const Int& t : g.torsion) torsion.push_back(t.get_str());
  return Json{{"rank", g.rank}, {"torsion", torsion}, {"trivial", g.trivial()}};
}

Json vinberg_to_json(const VinbergRun& run) {
  Json accepted = Json::array();
  for (size_t i = 0; i < run.accepted.size(); ++i) {
    Json root = Json::array();
    for (const Int& t : run.accepted[i]) root.push_back(t.get_str());
    accepted.push_back(Json{{"root", root}, {"height", run.accepted_height[i].get_str()}});
  }
  return Json{{"accepted", accepted},
              {"terminated", run.terminated},
              {"stop_height", run.stop_height.get_str()},
              {"rejections", run.rejections.size()}};
}

Json diagram_to_json(const CoxeterDiagram& d) {
  Json roots = Json::array();
  for (const RootVec& r : d.roots) {
    Json v = Json::array();
    for (const Int& t : r) v.push_back(t.get_str());
    roots.push_back(v);
  }
  Json gram = Json::array();
  for (int i = 0; i < d.gram.rows; ++i) {
    Json row = Json::array();
    for (int j = 0; j < d.gram.cols; ++j) row.push_back(d.gram.at(i, j).get_str());
    gram.push_back(row);
  }
  return Json{{"roots", roots}, {"gram", gram}};
}

Json subdiagrams_to_json(const SubdiagramClassification& c) {
  auto dump = [](const std::vector<SubdiagramClass>& v) {
    Json out = Json::array();
    for (const SubdiagramClass& s : v)
      out.push_back(Json{{"type", s.type}, {"rank", s.rank}, {"count", s.count}});
    return out;
  };
  return Json{{"elliptic", dump(c.elliptic)},
              {"maximal_parabolic", dump(c.maximal_parabolic)},
              {"total_classes", c.total()}};
}

Json crosscheck_to_json(const CrosscheckReport& r) {
  Json by_dim = Json::object();
  for (const auto& [d, n] : r.strata_by_dim) by_dim[std::to_string(d)] = n;
  Json by_kind = Json::object();
  for (const auto& [k, n] : r.classes_by_kind) by_kind[k] = n;
  Json pairing = Json::array();
  for (const auto& [a, b] : r.pairing) pairing.push_back(Json::array({a, b}));
  return Json{{"strata_by_dim", by_dim},
              {"classes_by_kind", by_kind},
              {"strata_total", r.strata_total},
              {"classes_total", r.classes_total},
              {"totals_equal", r.totals_equal},
              {"rank_rule_consistent", r.rank_rule_consistent},
              {"dimension_rule", r.dimension_rule},
              {"pairing", pairing}};
}

Json atlas_to_json(const BoundaryAtlas& a) {
  Json strata = Json::array();
  for (const StratumRecord& r : a.strata) {
    strata.push_back(Json{
        {"id", r.id},
        {"kind", r.kind == StratumKind::subdivision_indexed ? "subdivision" : "coefficient"},
        {"dimension", r.dimension},
        {"orbit_size", r.orbit_size},
        {"description", r.description},
        {"representative", subdivision_to_json(r.representative)},
        {"classification", degeneration_to_json(r.classification)}});
  }
  Json maximal = Json::array();
  for (int i : a.maximal)
    maximal.push_back(Json{{"id", a.strata[i].id}, {"dimension", a.strata[i].dimension}});
  return Json{{"strata", strata}, {"maximal", maximal}};
}

Json gram_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j).get_str());
    rows.push_back(row);
  }
  return Json{{"gram", rows}};
}

IntMatrix gram_from_json(const Json& j) {
  const Json& rows = j.contains("gram") ? j.at("gram") : j;
  int n = static_cast<int>(rows.size());
  IntMatrix m(n, n == 0 ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < m.cols; ++jj) {
      const Json& e = rows[i][jj];
      m.at(i, jj) = e.is_string() ? Int(e.get<std::string>()) : Int(e.get<long>());
    }
  return m;
}

Json load_json_arg(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] != '{' && arg[0] != '[') {
    std::ifstream in(arg);
    if (!in) throw ParseError("cannot open " + arg);
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return Json::parse(text);
}

}  // namespace cubestrata
