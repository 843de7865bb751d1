#include "quiltforge/catalog.hpp"

#include <set>

namespace quiltforge {

std::string file_stem(const std::string& label) {
  std::string out;
  for (char ch : label) {
    if (ch == '(') out += '-';
    else if (ch != ')') out += ch;
  }
  return out;
}

Json to_json(const CatalogFailure& f) {
  return Json{{"label", f.label}, {"check", f.check}, {"detail", f.detail}};
}

namespace {

Json member_json(const InvolutionTriple& t) {
  GluedSurface s = glue_surface(build_diagram(t));
  Json j = to_json(t);
  j["treelike"] = is_treelike(s.diagram);
  j["orientable"] = s.orientable;
  j["eulerCharacteristic"] = s.euler_characteristic;
  j["signature"] = to_json(conway_signature(s, assign_angles(s)));
  j["triangleScale"] = std::vector<int>(t.n(), 1);
  return j;
}

}  // namespace

Catalog run_catalog(const CatalogConfig& config) {
  Catalog cat;
  if (config.render) config.style.validate();
  SeedReport seeds = catalog_seeds(config.sizes);
  cat.warnings = seeds.warnings;

  Json quilts = Json::array();
  std::size_t total = 0;
  for (const auto& seed : seeds.seeds) {
    Quilt q;
    try {
      q = enumerate_quilt(seed.pair, seed.quilt_name, kDefaultMaxClasses, config.rng_seed);
    } catch (const Error& e) {
      cat.failures.push_back({seed.quilt_name, "quilt", e.what()});
      continue;
    }
    Json classes = Json::array();
    for (std::size_t i = 0; i < q.size(); ++i) {
      const PairClass& c = q.classes[i];
      const std::string name = label(q, i + 1);
      const TransplantablePair& cert = *c.certificate;
      auto fail = [&](const std::string& check, const std::string& detail) {
        cat.failures.push_back({name, check, detail});
      };

      Json e{{"label", name},
             {"left", member_json(cert.left())},
             {"right", member_json(cert.right())},
             {"intertwiner", to_json(cert.intertwiner())},
             {"isometricByRolePermutation",
              isometric_by_generator_permutation({cert.left(), cert.right()})}};
      const bool orientable = e["left"]["orientable"].get<bool>();
      if (orientable != e["right"]["orientable"].get<bool>())
        fail("surface", "members differ in orientability");
      if (e["left"]["signature"]["angles"] != e["right"]["signature"]["angles"])
        fail("surface", "members have different corner angles");

      std::vector<BoundaryCondition> bcs{BoundaryCondition::neumann};
      if (orientable) bcs.push_back(BoundaryCondition::dirichlet);
      bcs.push_back(BoundaryCondition::twisted);

      Json residuals = Json::object();
      for (auto bc : bcs) {
        Rational r = discrete_transplant_check(cert, 1, bc);
        residuals[to_string(bc)] = to_fraction_string(r);
        if (r != 0) fail("transplant", std::string(to_string(bc)) + " residual " + to_fraction_string(r));
      }
      e["transplantResidual"] = residuals;

      if (config.spectral) {
        Json reports = Json::array();
        auto record = [&](const SpectralReport& r) {
          if (!r.passed())
            fail("spectral", std::string(to_string(r.mode)) + " " + to_string(r.bc) +
                                 " deviation " + std::to_string(r.max_rel_deviation));
          reports.push_back(to_json(r));
        };
        for (auto bc : bcs)
          record(verify_isospectrality(cert, bc, config.graph_k, config.graph_count, config.tol,
                                       AssemblyMode::graph));
        record(verify_isospectrality(cert, BoundaryCondition::neumann, config.fem_k,
                                     config.fem_count, config.tol, AssemblyMode::fem));
        e["spectral"] = reports;
      }

      if (config.render) {
        Json cuts = Json::array();
        for (int side = 0; side < 2; ++side) {
          const auto& t = side ? cert.right() : cert.left();
          GluingDiagram d = build_diagram(t);
          Layout l = layout_diagram(d);
          std::string path = "svg/" + file_stem(name) + (side ? "-right" : "-left") + ".svg";
          cat.svgs[path] = emit_svg(l, d, config.style, name + (side ? " right" : " left"));
          cuts.push_back(l.cuts.size());
          if (l.best_effort)
            cat.warnings.push_back(name + ": best-effort layout with " +
                                   std::to_string(l.cuts.size()) + " cuts");
        }
        e["layoutCuts"] = cuts;
      }
      classes.push_back(std::move(e));
    }
    total += q.size();
    quilts.push_back(Json{{"name", q.name}, {"classCount", q.size()}, {"classes", classes}});
    cat.quilts.push_back(std::move(q));
  }

  Json failures = Json::array();
  for (const auto& f : cat.failures) failures.push_back(to_json(f));
  std::vector<int> sizes(config.sizes);
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  cat.json = Json{{"rngSeed", config.rng_seed},
                  {"sizes", sizes},
                  {"classCount", total},
                  {"quilts", quilts},
                  {"warnings", cat.warnings},
                  {"failures", failures}};
  return cat;
}

std::vector<CatalogFailure> reverify_catalog(const Json& catalog) {
  std::vector<CatalogFailure> failures;
  if (!catalog.is_object() || !catalog.contains("quilts") || !catalog["quilts"].is_array())
    throw Error("catalog JSON needs a 'quilts' array");
  std::set<std::string> labels;
  for (const auto& q : catalog["quilts"]) {
    if (!q.contains("classes") || !q["classes"].is_array())
      throw Error("catalog quilt entry needs a 'classes' array");
    for (const auto& c : q["classes"]) {
      std::string name = c.contains("label") && c["label"].is_string()
                             ? c["label"].get<std::string>()
                             : std::string("?");
      auto fail = [&](const std::string& check, const std::string& detail) {
        failures.push_back({name, check, detail});
      };
      if (!labels.insert(name).second) fail("label", "duplicate label");
      try {
        TriplePair p = pair_from_json(c);
        RationalMatrix t = matrix_from_json(c.at("intertwiner"));
        if (t.rows() != p.first.n() || t.cols() != p.first.n() || p.second.n() != p.first.n())
          fail("certificate", "intertwiner size does not match the pair");
        else if (!intertwines(t, p.first, p.second))
          fail("certificate", "intertwining identity fails");
        else if (determinant(t) == 0)
          fail("certificate", "intertwiner is singular");
        if (canonical_key(p.first) == canonical_key(p.second))
          fail("certificate", "members are permutation isomorphic");
      } catch (const std::exception& e) {
        fail("parse", e.what());
      }
    }
  }
  return failures;
}

}  // namespace quiltforge
