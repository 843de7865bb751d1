#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quiltforge/io.hpp"
#include "quiltforge/render.hpp"

namespace quiltforge {

struct CatalogConfig {
  std::vector<int> sizes{7, 11, 13, 15, 21};
  std::uint64_t rng_seed = kDefaultRngSeed;
  bool spectral = true;
  std::size_t graph_k = 2;
  std::size_t graph_count = 20;
  std::size_t fem_k = 4;
  std::size_t fem_count = 15;
  double tol = 1e-8;
  bool render = true;
  StyleConfig style;
};

struct CatalogFailure {
  std::string label;
  std::string check;
  std::string detail;
};

struct Catalog {
  std::vector<Quilt> quilts;  // in seed order
  Json json;
  std::map<std::string, std::string> svgs;  // relative path -> document
  std::vector<CatalogFailure> failures;
  std::vector<std::string> warnings;

  bool ok() const { return failures.empty(); }
};

// seeds -> quilts -> per class: certificate, surfaces and signatures,
// spectral reports, exact discrete transplant residuals and drawings.
// Failed checks are collected rather than thrown.
Catalog run_catalog(const CatalogConfig& config);

// Re-checks a serialized catalog from its certificates alone: every
// intertwiner must satisfy the three identities and be invertible, the
// members must have different canonical forms, and labels must be unique.
std::vector<CatalogFailure> reverify_catalog(const Json& catalog);

// "13a(2)" -> "13a-2"
std::string file_stem(const std::string& label);

Json to_json(const CatalogFailure& f);

}  // namespace quiltforge
