#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <optional>

#include "quiltforge/catalog.hpp"

namespace fs = std::filesystem;
using namespace quiltforge;

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

struct UsageError : Error {
  using Error::Error;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::vector<NamedSeed> load_or_build_seeds(const std::string& seeds_file, int size) {
  if (!seeds_file.empty()) return seeds_from_json(read_json(seeds_file));
  return catalog_seeds({size}).seeds;
}

struct ResolvedPair {
  std::string label;
  TriplePair pair;
};

// A catalog label such as "13a(2)", or a JSON file holding {"left", "right"}.
ResolvedPair resolve_pair(const std::string& arg, const std::string& seeds_file,
                          std::uint64_t rng_seed) {
  if (fs::exists(arg)) return {fs::path(arg).stem().string(), pair_from_json(read_json(arg))};
  static const std::regex label_re(R"((\d+)([a-z]?)\((\d+)\))");
  std::smatch m;
  if (!std::regex_match(arg, m, label_re))
    throw UsageError("'" + arg + "' is neither a file nor a label like 13a(2)");
  const std::string name = m[1].str() + m[2].str();
  const std::size_t index = std::stoul(m[3].str());
  for (const auto& seed : load_or_build_seeds(seeds_file, std::stoi(m[1].str()))) {
    if (seed.quilt_name != name) continue;
    Quilt q = enumerate_quilt(seed.pair, name, kDefaultMaxClasses, rng_seed);
    std::string l;
    try {
      l = label(q, index);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    return {l, q.classes[index - 1].representative};
  }
  throw UsageError("no quilt named " + name);
}

int cmd_seeds(const std::vector<int>& sizes, const std::string& out) {
  SeedReport report = catalog_seeds(sizes);
  for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
  write_text(out, dump(to_json(report.seeds)));
  return kOk;
}

int cmd_quilt(const std::string& seeds_file, const std::string& name, std::size_t max_classes,
              const std::string& out, std::uint64_t rng_seed) {
  for (const auto& seed : seeds_from_json(read_json(seeds_file))) {
    if (seed.quilt_name != name) continue;
    write_text(out, dump(to_json(enumerate_quilt(seed.pair, name, max_classes, rng_seed))));
    return kOk;
  }
  throw UsageError("no seed named " + name + " in " + seeds_file);
}

std::optional<TransplantablePair> certify(const ResolvedPair& p, std::uint64_t rng_seed) {
  Verdict v = check_transplantable(p.pair.first, p.pair.second, rng_seed);
  if (v.kind == Verdict::Kind::transplantable) return std::move(v.pair);
  std::cerr << p.label << ": not transplantable (" << to_string(v.kind) << ")";
  if (v.witness) std::cerr << ", fixed points differ on word " << v.witness->str();
  std::cerr << "\n";
  return std::nullopt;
}

int cmd_verify(const ResolvedPair& p, const std::string& bc, std::size_t k, std::size_t count,
               double tol, const std::string& mode, const std::string& out,
               std::uint64_t rng_seed) {
  BoundaryCondition b;
  AssemblyMode m;
  try {
    b = parse_boundary_condition(bc);
    m = parse_assembly_mode(mode);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  auto cert = certify(p, rng_seed);
  if (!cert) return kVerificationFailed;
  SpectralReport r;
  try {
    r = verify_isospectrality(*cert, b, k, count, tol, m);
  } catch (const Error& e) {
    throw UsageError(p.label + ": " + e.what());
  }
  Json j = to_json(r);
  j["label"] = p.label;
  if (m == AssemblyMode::graph)
    j["transplantResidual"] = to_fraction_string(discrete_transplant_check(*cert, k, b));
  write_text(out, dump(j));
  if (!r.passed()) {
    std::cerr << p.label << ": spectra differ by " << r.max_rel_deviation << "\n";
    return kVerificationFailed;
  }
  return kOk;
}

int cmd_signature(const ResolvedPair& p, const std::string& out) {
  Json j{{"label", p.label},
         {"left", to_json(conway_signature(p.pair.first))},
         {"right", to_json(conway_signature(p.pair.second))},
         {"isometricByRolePermutation", isometric_by_generator_permutation(p.pair)}};
  write_text(out, dump(j));
  return kOk;
}

int cmd_render(const ResolvedPair& p, const StyleConfig& style, const std::string& dir) {
  for (int side = 0; side < 2; ++side) {
    const auto& t = side ? p.pair.second : p.pair.first;
    GluingDiagram d = build_diagram(t);
    Layout l = layout_diagram(d);
    if (l.best_effort)
      std::cerr << "warning: " << p.label << " " << (side ? "right" : "left")
                << ": best-effort layout with " << l.cuts.size() << " cuts\n";
    std::string name = file_stem(p.label) + (side ? "-right" : "-left") + ".svg";
    write_text((fs::path(dir) / name).string(),
               emit_svg(l, d, style, p.label + (side ? " right" : " left")));
  }
  return kOk;
}

int cmd_catalog(const CatalogConfig& config, const std::string& dir) {
  Catalog cat = run_catalog(config);
  write_text((fs::path(dir) / "catalog.json").string(), dump(cat.json));
  for (const auto& [path, svg] : cat.svgs) write_text((fs::path(dir) / path).string(), svg);
  for (const auto& w : cat.warnings) std::cerr << "warning: " << w << "\n";
  for (const auto& q : cat.quilts) std::cout << q.name << ": " << q.size() << " classes\n";
  for (const auto& f : cat.failures)
    std::cerr << "FAILED " << f.label << " [" << f.check << "] " << f.detail << "\n";
  return cat.ok() ? kOk : kVerificationFailed;
}

int cmd_reverify(const std::string& path) {
  auto failures = reverify_catalog(read_json(path));
  for (const auto& f : failures)
    std::cerr << "FAILED " << f.label << " [" << f.check << "] " << f.detail << "\n";
  if (failures.empty()) std::cout << "all certificates verified\n";
  return failures.empty() ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transplantable pairs of triangle gluings: seeds, quilts, certificates, "
               "orbifold signatures, spectra and drawings"};
  app.require_subcommand(1);
  std::uint64_t rng_seed = kDefaultRngSeed;
  app.add_option("--rng-seed", rng_seed, "Seed for randomized internals")->capture_default_str();

  std::vector<int> sizes{7, 11, 13, 15, 21};
  std::string out, seeds_file, name, pair_arg;

  auto* seeds = app.add_subcommand("seeds", "Construct one seed pair per catalog quilt");
  seeds->add_option("--sizes", sizes, "Pair sizes")->delimiter(',')->capture_default_str();
  seeds->add_option("-o,--output", out, "Output file (default stdout)");

  std::size_t max_classes = kDefaultMaxClasses;
  auto* quilt = app.add_subcommand("quilt", "Enumerate the quilt of a seed");
  quilt->add_option("--seed", seeds_file, "Seed file from 'seeds'")->required();
  quilt->add_option("--name", name, "Quilt name, e.g. 13a")->required();
  quilt->add_option("--max-classes", max_classes)->capture_default_str();
  quilt->add_option("-o,--output", out, "Output file (default stdout)");

  std::string bc = "neumann", mode = "fem";
  std::size_t k = 4, count = 15;
  double tol = 1e-8;
  auto* verify = app.add_subcommand("verify", "Certify a pair and compare spectra");
  verify->add_option("--pair", pair_arg, "Label like 13a(2) or a pair JSON file")->required();
  verify->add_option("--seeds", seeds_file, "Resolve labels from this seed file");
  verify->add_option("--bc", bc, "neumann, dirichlet or twisted")->capture_default_str();
  verify->add_option("--k", k, "Refinement depth")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--count", count, "Eigenvalues to compare")->capture_default_str();
  verify->add_option("--tol", tol, "Relative tolerance")->capture_default_str();
  verify->add_option("--mode", mode, "fem or graph")->capture_default_str();
  verify->add_option("-o,--output", out, "Report file (default stdout)");

  auto* signature = app.add_subcommand("signature", "Orbifold signatures of a pair");
  signature->add_option("--pair", pair_arg, "Label like 13a(2) or a pair JSON file")->required();
  signature->add_option("--seeds", seeds_file, "Resolve labels from this seed file");
  signature->add_option("-o,--output", out, "Output file (default stdout)");

  StyleConfig style;
  std::array<std::string, 3> strokes{"dotted", "dashed", "solid"};
  auto add_style = [&](CLI::App* sub) {
    sub->add_option("--stroke-a", strokes[0])->capture_default_str();
    sub->add_option("--stroke-b", strokes[1])->capture_default_str();
    sub->add_option("--stroke-c", strokes[2])->capture_default_str();
    sub->add_option("--fixed-color", style.fixed_color)->capture_default_str();
    sub->add_option("--fixed-width", style.fixed_width_factor)->capture_default_str();
    sub->add_option("--scale", style.scale, "Pixels per edge")->capture_default_str();
  };
  auto* render = app.add_subcommand("render", "Draw both members of a pair as SVG");
  render->add_option("--pair", pair_arg, "Label like 13a(2) or a pair JSON file")->required();
  render->add_option("--seeds", seeds_file, "Resolve labels from this seed file");
  render->add_option("-o,--output", out, "Output directory")->required();
  add_style(render);

  CatalogConfig config;
  bool all = false, no_spectral = false, no_render = false;
  auto* catalog = app.add_subcommand("catalog", "Build and verify the whole catalog");
  catalog->add_flag("--all", all, "All sizes (the default)");
  catalog->add_option("--sizes", sizes, "Pair sizes")->delimiter(',');
  catalog->add_flag("--no-spectral", no_spectral);
  catalog->add_flag("--no-render", no_render);
  catalog->add_option("-o,--output", out, "Output directory")->required();
  add_style(catalog);

  std::string catalog_file;
  auto* reverify = app.add_subcommand("reverify", "Re-check certificates of a catalog file");
  reverify->add_option("catalog", catalog_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    auto styled = [&] {
      for (int x = 0; x < 3; ++x) style.stroke[x] = parse_stroke_style(strokes[x]);
      style.validate();
      return style;
    };
    if (seeds->parsed()) return cmd_seeds(sizes, out);
    if (quilt->parsed()) return cmd_quilt(seeds_file, name, max_classes, out, rng_seed);
    if (reverify->parsed()) return cmd_reverify(catalog_file);
    if (catalog->parsed()) {
      config.sizes = sizes;
      config.rng_seed = rng_seed;
      config.spectral = !no_spectral;
      config.render = !no_render;
      config.style = styled();
      return cmd_catalog(config, out);
    }
    if (render->parsed()) {
      StyleConfig s = styled();
      return cmd_render(resolve_pair(pair_arg, seeds_file, rng_seed), s, out);
    }
    ResolvedPair p = resolve_pair(pair_arg, seeds_file, rng_seed);
    if (verify->parsed()) return cmd_verify(p, bc, k, count, tol, mode, out, rng_seed);
    if (signature->parsed()) return cmd_signature(p, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
