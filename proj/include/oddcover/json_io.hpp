#pragma once

// JSON forms of covers, verification reports, constructions and search
// results. Vertex sets are written sorted ascending so equal covers diff clean.

#include <string_view>

#include <json.hpp>

#include "oddcover/construct.hpp"
#include "oddcover/cover.hpp"
#include "oddcover/search.hpp"

namespace oddcover {

using Json = nlohmann::ordered_json;

// {"n": int, "bicliques": [{"X": [...], "Y": [...]}, ...]}
Json cover_to_json(const OddCover& cover);
// Throws ParseError on malformed input (offset 0 for schema errors).
OddCover cover_from_json(const Json& j);
OddCover parse_cover_json(std::string_view text);

// {"ok", "mismatches": [[u, v], ...], "cardinality", "rank_lower_bound"}
Json report_to_json(const VerifyReport& report);

// Cover JSON plus "construction": {"family", "formula", "size"}.
Json construction_to_json(const ConstructionResult& result);

// {"status", "b2", "lb", "nodes", "elapsed_ms", "witness"}; b2 and witness
// are null when unknown.
Json search_to_json(const SearchResult& result);

}  // namespace oddcover
