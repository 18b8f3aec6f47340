#pragma once

#include <json.hpp>
#include <string>

#include "fn/convex_fn.hpp"

namespace convexval {

// Parse failure with the byte offset nlohmann reported (0-based; -1 unknown).
struct ParseError : InputError {
  long byte_offset;
  ParseError(const std::string& what, long offset) : InputError(what), byte_offset(offset) {}
};

using Json = nlohmann::ordered_json;

// Wraps nlohmann parsing, rethrowing as ParseError with location.
Json parse_json_text(const std::string& text);

Json rat_to_json(const Rat& q);
Rat rat_from_json(const Json& j);
Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j);

// {"dim": n, "vertices": [["p/q", ...], ...]}
Json polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const Json& j);

// {"points": [{"x": [...], "t": "p/q"}, ...]}
Json plconvexs_to_json(const PLConvexS& u);
PLConvexS plconvexs_from_json(const Json& j);

// {"pieces": [{"a": [...], "b": "p/q"}, ...]}
Json plconvexf_to_json(const PLConvexF& v);
PLConvexF plconvexf_from_json(const Json& j);

// {"kind": "S"|"F", "base": {...}}
Json logconcave_to_json(const LogConcaveFn& f);
LogConcaveFn logconcave_from_json(const Json& j);

// Dispatches on the top-level key ("points" -> S, "pieces" -> F).
bool json_is_plconvexs(const Json& j);

}  // namespace convexval
