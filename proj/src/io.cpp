#include "quiltforge/io.hpp"

namespace quiltforge {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw Error(std::string("missing JSON field '") + name + "'");
  return j.at(name);
}

std::string string_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_string()) throw Error(std::string("JSON field '") + name + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

Json to_json(const InvolutionTriple& t) {
  return Json{{"n", t.n()},
              {"a", format_cycles(t.a())},
              {"b", format_cycles(t.b())},
              {"c", format_cycles(t.c())}};
}

InvolutionTriple triple_from_json(const Json& j) {
  const Json& n = field(j, "n");
  if (!n.is_number_unsigned() || n.get<std::size_t>() == 0)
    throw Error("JSON field 'n' must be a positive integer");
  return InvolutionTriple::parse(string_field(j, "a"), string_field(j, "b"), string_field(j, "c"),
                                 n.get<std::size_t>());
}

Json to_json(const TriplePair& p) {
  return Json{{"left", to_json(p.first)}, {"right", to_json(p.second)}};
}

TriplePair pair_from_json(const Json& j) {
  return {triple_from_json(field(j, "left")), triple_from_json(field(j, "right"))};
}

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_fraction_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw Error("matrix must be a nonempty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array()) throw Error("matrix rows must be arrays");
  const std::size_t cols = j[0].size();
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw Error("matrix rows differ in length");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!j[r][c].is_string()) throw Error("matrix entries must be \"p/q\" strings");
      m(r, c) = parse_fraction(j[r][c].get<std::string>());
    }
  }
  return m;
}

Json to_json(const OrbifoldSignature& s) {
  Json angles = Json::array();
  for (int k = 0; k < 3; ++k)
    angles.push_back(to_fraction_string(s.angles.angle(static_cast<CornerType>(k))));
  return Json{{"symbol", s.symbol},         {"cone", s.cone_points},
              {"boundaries", s.boundaries}, {"handles", s.handles},
              {"crossCaps", s.cross_caps},  {"hyperbolic", s.hyperbolic},
              {"angles", angles}};
}

Json to_json(const SpectralReport& r) {
  return Json{{"bc", to_string(r.bc)},
              {"mode", to_string(r.mode)},
              {"k", r.k},
              {"count", r.count},
              {"left", r.left},
              {"right", r.right},
              {"maxRelDeviation", r.max_rel_deviation},
              {"tol", r.tol},
              {"passed", r.passed()}};
}

Json to_json(const std::vector<NamedSeed>& seeds) {
  Json out = Json::array();
  for (const auto& s : seeds)
    out.push_back(Json{{"quiltName", s.quilt_name},
                       {"classCount", s.class_count},
                       {"left", to_json(s.pair.first)},
                       {"right", to_json(s.pair.second)}});
  return out;
}

std::vector<NamedSeed> seeds_from_json(const Json& j) {
  if (!j.is_array()) throw Error("seed file must hold a JSON array");
  std::vector<NamedSeed> seeds;
  for (const auto& e : j) {
    NamedSeed s{string_field(e, "quiltName"), pair_from_json(e), 0};
    if (e.contains("classCount") && e["classCount"].is_number_unsigned())
      s.class_count = e["classCount"].get<std::size_t>();
    seeds.push_back(std::move(s));
  }
  return seeds;
}

Json to_json(const Quilt& q) {
  Json classes = Json::array();
  for (std::size_t i = 0; i < q.size(); ++i) {
    const auto& c = q.classes[i];
    Json e{{"label", label(q, i + 1)},
           {"left", to_json(c.representative.first)},
           {"right", to_json(c.representative.second)}};
    if (c.certificate) e["intertwiner"] = to_json(c.certificate->intertwiner());
    classes.push_back(std::move(e));
  }
  return Json{{"name", q.name}, {"classCount", q.size()}, {"classes", classes}};
}

}  // namespace quiltforge
