#include "oddcover/json_io.hpp"

#include <string>

namespace oddcover {

namespace {

VertexSet read_side(const Json& b, const char* key, std::size_t index) {
  const auto it = b.find(key);
  if (it == b.end() || !it->is_array()) {
    throw ParseError("cover JSON: biclique " + std::to_string(index) + " lacks array \"" + key + "\"", 0);
  }
  VertexSet out;
  for (const Json& v : *it) {
    if (!v.is_number_integer()) throw ParseError("cover JSON: vertex labels must be integers", 0);
    out.push_back(v.get<Vertex>());
  }
  return out;
}

}  // namespace

Json cover_to_json(const OddCover& cover) {
  Json bicliques = Json::array();
  for (const Biclique& b : cover.bicliques) bicliques.push_back({{"X", b.x()}, {"Y", b.y()}});
  return {{"n", cover.n}, {"bicliques", std::move(bicliques)}};
}

OddCover cover_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("cover JSON: expected an object", 0);
  const auto n = j.find("n");
  if (n == j.end() || !n->is_number_integer() || n->get<long long>() < 0) {
    throw ParseError("cover JSON: \"n\" must be a non-negative integer", 0);
  }
  const auto list = j.find("bicliques");
  if (list == j.end() || !list->is_array()) throw ParseError("cover JSON: \"bicliques\" must be an array", 0);
  OddCover cover;
  cover.n = n->get<int>();
  for (std::size_t i = 0; i < list->size(); ++i) {
    const Json& b = (*list)[i];
    if (!b.is_object()) throw ParseError("cover JSON: biclique " + std::to_string(i) + " is not an object", 0);
    try {
      cover.bicliques.emplace_back(read_side(b, "X", i), read_side(b, "Y", i));
    } catch (const InvalidArgument& e) {
      throw ParseError("cover JSON: biclique " + std::to_string(i) + ": " + e.what(), 0);
    }
  }
  try {
    cover.validate();
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), 0);
  }
  return cover;
}

OddCover parse_cover_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("cover JSON: " + std::string(e.what()), e.byte > 0 ? e.byte - 1 : 0);
  }
  return cover_from_json(j);
}

Json report_to_json(const VerifyReport& report) {
  Json mismatches = Json::array();
  for (const Mismatch& m : report.mismatches) mismatches.push_back({m.u, m.v});
  return {{"ok", report.ok},
          {"mismatches", std::move(mismatches)},
          {"cardinality", report.cardinality},
          {"rank_lower_bound", report.rank_lower_bound}};
}

Json construction_to_json(const ConstructionResult& result) {
  Json j = cover_to_json(result.cover);
  j["construction"] = {{"family", std::string(to_string(result.family))},
                       {"formula", result.formula},
                       {"size", result.size()}};
  return j;
}

Json search_to_json(const SearchResult& result) {
  Json j;
  j["status"] = std::string(to_string(result.status));
  j["b2"] = result.b2 ? Json(*result.b2) : Json(nullptr);
  j["lb"] = result.lb;
  j["nodes"] = result.nodes;
  j["elapsed_ms"] = result.elapsed.count();
  j["witness"] = result.witness ? cover_to_json(*result.witness) : Json(nullptr);
  return j;
}

}  // namespace oddcover
