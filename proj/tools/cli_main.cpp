#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "cubestrata/json_io.hpp"
#include "cubestrata/oracles.hpp"
#include "cubestrata/verify.hpp"

using namespace cubestrata;

namespace {

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    out << j.dump(2) << "\n";
  }
}

void write_text(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(path);
    out << text;
  }
}

int fail(int code, const std::string& kind, const std::string& message) {
  std::cerr << Json{{"error", kind}, {"message", message}}.dump() << "\n";
  return code;
}

GramLattice lattice_by_name(const std::string& name, const std::string& gram_arg) {
  if (name == "even") return lattice_even();
  if (name == "odd1") return lattice_odd1();
  if (name == "odd2") return lattice_odd2();
  if (!gram_arg.empty()) {
    GramLattice L;
    L.name = "custom";
    L.gram = gram_from_json(load_json_arg(gram_arg));
    L.validate();
    return L;
  }
  throw std::invalid_argument("unknown lattice: " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "cubestrata: exact computations with regular subdivisions of the unit cube,\n"
      "their stable-replacement modification, degeneration classification,\n"
      "torus-sheaf cohomology, Vinberg reflection data and stratum cross-checks.\n"
      "Rationals are serialized as strings \"p/q\"; vertex keys are bit strings\n"
      "like \"010\". Exit codes: 0 ok, 1 invalid input, 2 bound exceeded or\n"
      "inconclusive. Set CUBESTRATA_SEED to change the randomized-batch seed."};
  app.require_subcommand(1);
  app.fallthrough();
  app.footer(
      "Formats (inline JSON or a file path is accepted wherever a JSON argument "
      "is expected):\n"
      "  subdivision   {\"cells\": [[[0,0,0],[1,0,0],...], ...]}  cells and vertices sorted\n"
      "  heights       {\"heights\": {\"000\": \"p/q\", ... all 8 keys}}  (bare map accepted)\n"
      "  coefficients  {\"coefficients\": {\"000\": \"p/q\", ...}}        (bare map accepted)\n"
      "  gram matrix   {\"gram\": [[1,0,...],[0,-1,...],...]}  entries as numbers or strings\n"
      "  diagram       {\"roots\": [[...], ...], \"gram\": [[...], ...]}\n"
      "DOT exports: no edge for product 0, label \"inf\" for product 1, dotted with\n"
      "the value for products >= 2; stratum posets carry dimension and cusp labels.");
  std::string out_path;
  app.add_option("-o,--output", out_path, "write the JSON report to a file");

  // enumerate
  auto* cmd_enum = app.add_subcommand("enumerate", "list polyhedral subdivisions of the cube");
  bool tri_only = false, up_to_sym = false, ccfree = false;
  cmd_enum->add_flag("--triangulations-only", tri_only, "only subdivisions into simplices");
  cmd_enum->add_flag("--up-to-symmetry", up_to_sym, "one representative per Sym(Q) orbit");
  cmd_enum->add_flag("--corner-cut-free", ccfree, "only subdivisions without corner cuts");

  // regularity
  auto* cmd_reg = app.add_subcommand("regularity", "exact regularity test with witness heights");
  std::string reg_sub;
  cmd_reg->add_option("--subdivision", reg_sub,
                      "subdivision JSON ({\"cells\":[[[0,0,0],...],...]}) or file")
      ->required();

  // from-heights
  auto* cmd_fh = app.add_subcommand("from-heights", "lower-hull subdivision of a height function");
  std::string fh_heights;
  cmd_fh->add_option("--heights", fh_heights,
                     "heights JSON ({\"heights\":{\"000\":\"1/2\",...}} or bare map) or file")
      ->required();

  // bullet
  auto* cmd_bullet = app.add_subcommand(
      "bullet", "corner-cut stable replacement: subdivision -> subdivision, heights -> heights");
  std::string bullet_sub, bullet_heights;
  cmd_bullet->add_option("--subdivision", bullet_sub, "subdivision JSON or file");
  cmd_bullet->add_option("--heights", bullet_heights, "heights JSON or file");

  // classify
  auto* cmd_classify =
      app.add_subcommand("classify", "cell types, subtypes and the degeneration trichotomy");
  std::string cls_sub, cls_coeff;
  cmd_classify->add_option("--subdivision", cls_sub, "corner-cut-free subdivision JSON or file")
      ->required();
  cmd_classify
      ->add_option("--coefficients", cls_coeff,
                   "coefficients JSON ({\"coefficients\":{\"000\":\"1\",...}}) or file")
      ->required();

  // h1
  auto* cmd_h1 = app.add_subcommand("h1", "torus-sheaf H^1 via integral chain homology");
  std::string h1_sub;
  bool h1_all = false;
  cmd_h1->add_option("--subdivision", h1_sub, "subdivision JSON or file");
  cmd_h1->add_flag("--all", h1_all, "verdicts for every enumerated subdivision (JSON lines)");

  // vinberg
  auto* cmd_vin = app.add_subcommand("vinberg", "run Vinberg's algorithm on a hyperbolic lattice");
  std::string vin_lattice = "even", vin_gram, vin_v0, vin_dot;
  long vin_max_height = 10;
  long vin_window = 0;
  cmd_vin->add_option("--lattice", vin_lattice, "even | odd1 | odd2 | custom (with --gram)");
  cmd_vin->add_option("--gram", vin_gram, "Gram matrix JSON ({\"gram\":[[...],...]}) or file");
  cmd_vin->add_option("--v0", vin_v0, "initial vector as JSON array, default per lattice");
  cmd_vin->add_option("--max-height", vin_max_height, "height bound for the root walk");
  cmd_vin->add_option("--window", vin_window,
                      "coordinate window (required when v0 is isotropic)");
  cmd_vin->add_option("--dot", vin_dot, "also write the Coxeter diagram in DOT format");

  // subdiagrams
  auto* cmd_sub = app.add_subcommand(
      "subdiagrams", "elliptic and maximal parabolic subdiagram classes of a Coxeter diagram");
  std::string sub_diagram;
  int sub_rank = 4;
  long sub_window = 5;
  cmd_sub->add_option("--diagram", sub_diagram,
                      "even | odd1 | diagram JSON ({\"roots\":...,\"gram\":...}) or file")
      ->required();
  cmd_sub->add_option("--rank", sub_rank, "lattice rank (maximal parabolic = rank-2)");
  cmd_sub->add_option("--window", sub_window, "window for the infinite odd1 diagram");

  // invariants
  app.add_subcommand("invariants",
                     "log-canonical square identity and the four cover invariants");

  // atlas
  auto* cmd_atlas = app.add_subcommand("atlas", "boundary stratum atlas with closure order");
  std::string atlas_dot_path;
  cmd_atlas->add_option("--dot", atlas_dot_path, "also write the stratum poset in DOT format");

  // crosscheck
  auto* cmd_cross = app.add_subcommand("crosscheck", "stratum vs subdiagram bijections");
  std::string cross_which = "all";
  cmd_cross->add_option("which", cross_which, "even | odd1 | all");

  // verify-all
  app.add_subcommand("verify-all", "run the full acceptance suite");

  CLI11_PARSE(app, argc, argv);

  uint64_t seed = 20240915;
  if (const char* env = std::getenv("CUBESTRATA_SEED")) seed = std::strtoull(env, nullptr, 10);

  try {
    if (cmd_enum->parsed()) {
      std::vector<Subdivision> list = enumerate_all();
      if (tri_only) {
        std::vector<Subdivision> tris;
        for (const Subdivision& s : list) {
          bool tri = true;
          for (VertexMask m : s.cells) tri &= (mask_size(m) == 4);
          if (tri) tris.push_back(s);
        }
        list = tris;
      }
      if (ccfree) {
        std::vector<Subdivision> keep;
        for (const Subdivision& s : list)
          if (detect_corner_cuts(s).empty()) keep.push_back(s);
        list = keep;
      }
      Json out;
      out["count"] = list.size();
      if (up_to_sym) {
        Json arr = Json::array();
        for (const SubdivisionOrbit& o : orbits(list)) {
          Json rec = subdivision_to_json(o.representative);
          rec["orbit_size"] = o.size;
          rec["stratum_dimension"] = stratum_dimension(o.representative);
          arr.push_back(rec);
        }
        out["orbits"] = arr;
        out["orbit_count"] = arr.size();
      } else {
        Json arr = Json::array();
        for (const Subdivision& s : list) arr.push_back(subdivision_to_json(s));
        out["subdivisions"] = arr;
      }
      emit(out, out_path);
      return 0;
    }

    if (cmd_reg->parsed()) {
      Subdivision s = subdivision_from_json(load_json_arg(reg_sub));
      RegularityResult res = is_regular(s);
      Json out{{"regular", res.regular}};
      if (res.regular) {
        out["witness"] = heights_to_json(res.witness).at("heights");
        out["round_trip"] = (from_heights(res.witness) == s);
        out["stratum_dimension"] = stratum_dimension(s);
      }
      emit(out, out_path);
      return 0;
    }

    if (cmd_fh->parsed()) {
      HeightFunction h = heights_from_json(load_json_arg(fh_heights));
      emit(subdivision_to_json(from_heights(h)), out_path);
      return 0;
    }

    if (cmd_bullet->parsed()) {
      if (bullet_sub.empty() == bullet_heights.empty())
        return fail(1, "usage", "bullet needs exactly one of --subdivision / --heights");
      Json out;
      if (!bullet_heights.empty()) {
        HeightFunction h = heights_from_json(load_json_arg(bullet_heights));
        HeightModification hm = modify_heights(h);
        out["heights"] = heights_to_json(hm.result).at("heights");
        Json drops = Json::array();
        for (const auto& [apex, q] : hm.drops)
          drops.push_back(Json{{"apex", vid_string(apex)}, {"q", rat_to_string(q)}});
        out["drops"] = drops;
        out["subdivision"] = subdivision_to_json(from_heights(hm.result));
      } else {
        Subdivision s = subdivision_from_json(load_json_arg(bullet_sub));
        out["subdivision"] = subdivision_to_json(modify(s));
        out["delta_cartier"] = delta_cartier(s);
      }
      emit(out, out_path);
      return 0;
    }

    if (cmd_classify->parsed()) {
      Subdivision s = subdivision_from_json(load_json_arg(cls_sub));
      CoefficientAssignment c = coefficients_from_json(load_json_arg(cls_coeff));
      DegenerationReport rep = classify_degeneration(s, c);
      Json out = degeneration_to_json(rep);
      out["hyperdeterminant"] = rat_to_string(hyperdeterminant_222(c));
      emit(out, out_path);
      return 0;
    }

    if (cmd_h1->parsed()) {
      if (h1_all == !h1_sub.empty())
        return fail(1, "usage", "h1 needs exactly one of --all / --subdivision");
      if (h1_all) {
        std::ostringstream os;
        for (const Subdivision& s : enumerate_all()) {
          AbelianGroupDescriptor g = h1_torus(s);
          ReductionVerdict v = reduce_and_verdict(s);
          Json line{{"subdivision", subdivision_to_json(s).at("cells")},
                    {"h1", group_to_json(g)},
                    {"reduction", v == ReductionVerdict::trivial_by_reduction
                                      ? "trivial-by-reduction"
                                      : "inconclusive"}};
          os << line.dump() << "\n";
        }
        write_text(os.str(), out_path);
        return 0;
      }
      Subdivision s = subdivision_from_json(load_json_arg(h1_sub));
      Json out{{"h1", group_to_json(h1_torus(s))},
               {"reduction", reduce_and_verdict(s) == ReductionVerdict::trivial_by_reduction
                                 ? "trivial-by-reduction"
                                 : "inconclusive"}};
      emit(out, out_path);
      return 0;
    }

    if (cmd_vin->parsed()) {
      GramLattice L = lattice_by_name(vin_gram.empty() ? vin_lattice : "custom", vin_gram);
      RootVec v0 = L.default_v0;
      if (!vin_v0.empty()) {
        v0.clear();
        for (const Json& t : load_json_arg(vin_v0))
          v0.push_back(t.is_string() ? Int(t.get<std::string>()) : Int(t.get<long>()));
      }
      std::optional<long> window;
      if (vin_window > 0) window = vin_window;
      VinbergRun run;
      try {
        run = vinberg_run(L, v0, vin_max_height, window);
      } catch (const UnboundedSlice& e) {
        return fail(2, "unbounded-slice", e.what());
      }
      Json out = vinberg_to_json(run);
      CoxeterDiagram d = coxeter_diagram(L, run.accepted);
      out["diagram"] = diagram_to_json(d);
      if (!vin_dot.empty()) write_text(diagram_dot(d), vin_dot);
      emit(out, out_path);
      return run.terminated ? 0 : 2;
    }

    if (cmd_sub->parsed()) {
      SubdiagramClassification cls;
      if (sub_diagram == "odd1") {
        cls = classify_subdiagrams_odd1(sub_window, sub_rank);
      } else if (sub_diagram == "even") {
        GramLattice L = lattice_even();
        VinbergRun run = vinberg_run(L, L.default_v0, 10);
        cls = classify_subdiagrams(coxeter_diagram(L, run.accepted), sub_rank);
      } else {
        Json j = load_json_arg(sub_diagram);
        CoxeterDiagram d;
        d.gram = gram_from_json(j);
        if (j.contains("roots"))
          for (const Json& root : j.at("roots")) {
            RootVec r;
            for (const Json& t : root)
              r.push_back(t.is_string() ? Int(t.get<std::string>()) : Int(t.get<long>()));
            d.roots.push_back(r);
          }
        else
          d.roots.assign(d.gram.rows, RootVec{});
        cls = classify_subdiagrams(d, sub_rank);
      }
      emit(subdiagrams_to_json(cls), out_path);
      return 0;
    }

    if (app.get_subcommand("invariants")->parsed()) {
      EpsClass K = EpsClass::constant(Surface::Bl3P2, PicLattice::get(Surface::Bl3P2).canonical);
      EpsClass delta =
          EpsClass::constant(Surface::Bl3P2, {Rat(6), Rat(-2), Rat(-2), Rat(-2)});
      EpsPoly sq = intersect(K + delta.scaled(Rat(1, 2), Rat(1, 2)),
                             K + delta.scaled(Rat(1, 2), Rat(1, 2)));
      Json out;
      out["log_canonical_square"] = sq.str();
      out["log_canonical_square_is_6eps2"] = (sq == EpsPoly{Rat(0), Rat(0), Rat(6)});
      out["cover_squares"] = {
          {"F1_2f+h_h_h", rat_to_string(cover_canonical_square(
                              Surface::F1, {Rat(1), Rat(2)}, {Rat(1), Rat(0)}, {Rat(1), Rat(0)}))},
          {"P1xP1_l1+l2_each",
           rat_to_string(cover_canonical_square(Surface::P1xP1, {Rat(1), Rat(1)}, {Rat(1), Rat(1)},
                                                {Rat(1), Rat(1)}))},
          {"P2_2l_2l_0",
           rat_to_string(cover_canonical_square(Surface::P2, {Rat(2)}, {Rat(2)}, {Rat(0)}))},
          {"P1xP1_2l1+l2_l2_l2",
           rat_to_string(cover_canonical_square(Surface::P1xP1, {Rat(2), Rat(1)}, {Rat(0), Rat(1)},
                                                {Rat(0), Rat(1)}))}};
      emit(out, out_path);
      return 0;
    }

    if (cmd_atlas->parsed()) {
      const BoundaryAtlas& a = boundary_atlas();
      if (!atlas_dot_path.empty()) write_text(atlas_dot(a), atlas_dot_path);
      emit(atlas_to_json(a), out_path);
      return 0;
    }

    if (cmd_cross->parsed()) {
      Json out;
      if (cross_which == "even" || cross_which == "all") {
        GramLattice L = lattice_even();
        VinbergRun run = vinberg_run(L, L.default_v0, 10);
        SubdiagramClassification cls = classify_subdiagrams(coxeter_diagram(L, run.accepted), 4);
        out["even"] = crosscheck_to_json(crosscheck_even(boundary_atlas(), cls));
      }
      if (cross_which == "odd1" || cross_which == "all") {
        out["odd1"] = crosscheck_to_json(crosscheck_odd1(classify_subdiagrams_odd1(5, 4)));
      }
      if (out.empty()) return fail(1, "usage", "crosscheck expects even | odd1 | all");
      emit(out, out_path);
      return 0;
    }

    if (app.get_subcommand("verify-all")->parsed()) {
      auto results = run_all_criteria(seed);
      Json arr = Json::array();
      bool all = true;
      for (const CriterionResult& r : results) {
        std::cout << (r.passed ? "PASS" : "FAIL") << "  [" << r.index << "] " << r.name << ": "
                  << r.detail << "\n";
        all &= r.passed;
        arr.push_back(Json{
            {"index", r.index}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      }
      Json out{{"seed", seed}, {"criteria", arr}, {"all_passed", all}};
      if (!out_path.empty()) emit(out, out_path);
      return all ? 0 : 2;
    }
  } catch (const ParseError& e) {
    return fail(1, "parse", e.what());
  } catch (const InvalidSubdivision& e) {
    return fail(1, "invalid-subdivision", e.what());
  } catch (const InvalidCoefficients& e) {
    return fail(1, "invalid-coefficients", e.what());
  } catch (const NotABulletCell& e) {
    return fail(1, "not-a-bullet-cell", e.what());
  } catch (const NotRegular& e) {
    return fail(1, "not-regular", e.what());
  } catch (const WindowTooSmall& e) {
    return fail(2, "window-too-small", e.what());
  } catch (const std::invalid_argument& e) {
    return fail(1, "invalid-argument", e.what());
  } catch (const std::exception& e) {
    return fail(1, "error", e.what());
  }
  return 0;
}
