#include "hamfix/document.hpp"

#include <cmath>
#include <limits>

#include "hamfix/error.hpp"

namespace hamfix {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::ParseError, path + ": " + what);
}

std::int64_t read_integer(const nlohmann::json& v, const std::string& path) {
  if (v.is_number_integer()) return v.get<std::int64_t>();
  if (v.is_number_unsigned()) {
    auto u = v.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) fail(path, "integer out of range");
    return static_cast<std::int64_t>(u);
  }
  fail(path, "expected an integer");
}

Rat read_phi(const nlohmann::json& v, const std::string& path) {
  if (v.is_string()) {
    auto r = parse_rat(v.get<std::string>());
    if (!r) fail(path, "malformed rational \"" + v.get<std::string>() + "\"");
    return *r;
  }
  if (v.is_number_integer() || v.is_number_unsigned()) return Rat(read_integer(v, path));
  if (v.is_number_float()) {
    double d = v.get<double>();
    if (std::trunc(d) == d && std::abs(d) < 9.0e15) return Rat(static_cast<std::int64_t>(d));
    fail(path, "non-integral number; write rationals as \"p/q\" strings");
  }
  fail(path, "expected a string such as \"3\" or \"5/2\"");
}

}  // namespace

InputDocument parse_document(const nlohmann::json& j) {
  if (!j.is_object()) fail("/", "expected an object");
  for (const auto& [key, value] : j.items())
    if (key != "n" && key != "points" && key != "meta") fail("/" + key, "unknown key");

  if (!j.contains("n")) fail("/n", "missing");
  const std::int64_t n = read_integer(j["n"], "/n");
  if (n < 1 || n > 1000) fail("/n", "must be between 1 and 1000");

  if (!j.contains("points")) fail("/points", "missing");
  const auto& arr = j["points"];
  if (!arr.is_array()) fail("/points", "expected an array");
  if (arr.size() != static_cast<std::size_t>(n) + 1)
    fail("/points", "expected " + std::to_string(n + 1) + " points, got " + std::to_string(arr.size()));

  std::vector<FixedPoint> pts;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string base = "/points/" + std::to_string(i);
    const auto& p = arr[i];
    if (!p.is_object()) fail(base, "expected an object");
    for (const auto& [key, value] : p.items())
      if (key != "phi" && key != "weights") fail(base + "/" + key, "unknown key");
    if (!p.contains("phi")) fail(base + "/phi", "missing");
    if (!p.contains("weights")) fail(base + "/weights", "missing");

    FixedPoint fp;
    fp.moment_value = read_phi(p["phi"], base + "/phi");
    const auto& ws = p["weights"];
    if (!ws.is_array()) fail(base + "/weights", "expected an array");
    if (ws.size() != static_cast<std::size_t>(n))
      fail(base + "/weights", "expected " + std::to_string(n) + " weights, got " + std::to_string(ws.size()));
    for (std::size_t k = 0; k < ws.size(); ++k)
      fp.weights.push_back(read_integer(ws[k], base + "/weights/" + std::to_string(k)));
    pts.push_back(std::move(fp));
  }

  std::map<std::string, std::string> meta;
  if (j.contains("meta")) {
    const auto& m = j["meta"];
    if (!m.is_object()) fail("/meta", "expected an object");
    for (const auto& [key, value] : m.items()) {
      if (!value.is_string()) fail("/meta/" + key, "expected a string");
      meta[key] = value.get<std::string>();
    }
  }
  return {FixedPointData(static_cast<int>(n), std::move(pts)), std::move(meta)};
}

InputDocument parse_document_text(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail("/", std::string("invalid JSON: ") + e.what());
  }
  return parse_document(j);
}

nlohmann::ordered_json to_json(const FixedPointData& data) {
  nlohmann::ordered_json j;
  j["n"] = data.n();
  j["points"] = nlohmann::ordered_json::array();
  for (const auto& p : data.points()) {
    nlohmann::ordered_json pj;
    pj["phi"] = to_string(p.moment_value);
    pj["weights"] = p.weights;
    j["points"].push_back(std::move(pj));
  }
  return j;
}

nlohmann::ordered_json to_json(const InputDocument& doc) {
  auto j = to_json(doc.data);
  if (!doc.meta.empty()) {
    nlohmann::ordered_json m = nlohmann::ordered_json::object();
    for (const auto& [k, v] : doc.meta) m[k] = v;
    j["meta"] = std::move(m);
  }
  return j;
}

std::string serialize(const InputDocument& doc) { return to_json(doc).dump(2) + "\n"; }

}  // namespace hamfix
