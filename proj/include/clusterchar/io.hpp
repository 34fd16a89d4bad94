#pragma once

// JSON forms of the library's values. Malformed input raises ParseError with
// the offending field path, e.g. `matrices.0[1]: expected an integer`.

#include <string>

#include <json.hpp>

#include "clusterchar/character.hpp"
#include "clusterchar/grassmannian.hpp"
#include "clusterchar/laurent.hpp"
#include "clusterchar/quiver.hpp"

namespace clusterchar {

using json = nlohmann::ordered_json;

/// [{"exponents": {"x1": -1, "y2": 1}, "coeff": "3"}, ...] in canonical order.
json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

/// {"vertices": ["1","2"], "arrows": [{"src":"1","tgt":"2"}, ...]}
json to_json(const Quiver& q);
Quiver quiver_from_json(const json& j);

/// {"dim": {"1": 1, ...}, "matrices": {"0": [[...]], ...}}
json to_json(const IntRep& rep);
json to_json(const ModuleFamily& f);

/// Accepts {"family": ..., "params": {...}} or the explicit form. The
/// explicit form takes its quiver from a "quiver" member (catalog name or
/// quiver object) or else from `fallback`.
IntRep module_from_json(const json& j, const Quiver* fallback = nullptr);
ModuleFamily family_from_json(const json& j);

json to_json(const CountProfile& prof);
json to_json(const CharTermTable& table);

/// Parses text with a line/column diagnostic on failure.
json parse_json_text(const std::string& text, const std::string& source);
json read_json_file(const std::string& path);

}  // namespace clusterchar
