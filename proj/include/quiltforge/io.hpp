#pragma once

#include <json.hpp>

#include "quiltforge/quilt.hpp"
#include "quiltforge/seeds.hpp"
#include "quiltforge/spectral.hpp"
#include "quiltforge/surface.hpp"

namespace quiltforge {

using Json = nlohmann::ordered_json;

// {"n": 7, "a": "(1 2)(3 4)", "b": ..., "c": ...}
Json to_json(const InvolutionTriple& t);
InvolutionTriple triple_from_json(const Json& j);

// {"left": triple, "right": triple}
Json to_json(const TriplePair& p);
TriplePair pair_from_json(const Json& j);

// Rows of "p/q" strings.
Json to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j);

Json to_json(const OrbifoldSignature& s);
Json to_json(const SpectralReport& r);

// [{"quiltName", "classCount", "left", "right"}, ...]
Json to_json(const std::vector<NamedSeed>& seeds);
std::vector<NamedSeed> seeds_from_json(const Json& j);

// {"name", "classes": [{"label", "left", "right", "intertwiner"}, ...]}
Json to_json(const Quilt& q);

}  // namespace quiltforge
