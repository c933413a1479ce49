#pragma once

#include <map>
#include <string>
#include <string_view>

#include "json.hpp"

#include "hamfix/fixed_point.hpp"

namespace hamfix {

// On-disk form of a fixed point datum:
//
//   { "n": 2,
//     "points": [ { "phi": "0", "weights": [1, 2] }, ... ],
//     "meta": { "name": "..." } }
//
// phi is a string ("5", "-3/2"); an integral JSON number is also accepted on
// input. Weights are written sorted ascending. "meta" is optional and holds
// string values only.
struct InputDocument {
  FixedPointData data;
  std::map<std::string, std::string> meta;

  friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

// Throws Error(ParseError) with the offending JSON pointer in the message.
InputDocument parse_document(const nlohmann::json& j);
InputDocument parse_document_text(std::string_view text);

nlohmann::ordered_json to_json(const InputDocument& doc);
nlohmann::ordered_json to_json(const FixedPointData& data);

// Canonical text: keys in the order n, points, meta; two-space indent; trailing newline.
std::string serialize(const InputDocument& doc);

}  // namespace hamfix
