#pragma once

// Fan files are JSON objects
//   {"name": "...", "dim": n, "rays": [[...], ...], "cones": [[i, j, ...], ...]}
// listing the maximal cones by ray index. Parsing is structural only;
// validate_fan decides whether the data is a regular fan.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fantor/error.hpp"
#include "fantor/exact_linalg.hpp"
#include "fantor/fan.hpp"

namespace fantor::io {

using nlohmann::json;

namespace detail {

inline std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

inline Integer to_integer(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Integer(v.get<long long>());
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start < s.size() && s.find_first_not_of("0123456789", start) == std::string::npos)
      return Integer(s[0] == '+' ? s.substr(1) : s);
  }
  throw Error(Errc::ParseError, where + " is not an integer");
}

}  // namespace detail

/// Structural checks on an already parsed document; syntax errors carry a
/// line number, structural ones name the offending field instead.
inline FanData parse_fan_json(const json& doc) {
  auto fail = [](const std::string& why) { return Error(Errc::ParseError, why); };
  if (!doc.is_object()) throw fail("top level must be an object");
  for (const char* key : {"dim", "rays", "cones"})
    if (!doc.contains(key)) throw fail(std::string("missing field \"") + key + "\"");
  if (!doc["dim"].is_number_unsigned() && !(doc["dim"].is_number_integer() && doc["dim"].get<long long>() >= 0))
    throw fail("\"dim\" must be a nonnegative integer");
  if (!doc["rays"].is_array()) throw fail("\"rays\" must be an array");
  if (!doc["cones"].is_array()) throw fail("\"cones\" must be an array");

  FanData d;
  d.dim = doc["dim"].get<std::size_t>();
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw fail("\"name\" must be a string");
    d.name = doc["name"].get<std::string>();
  }
  for (std::size_t i = 0; i < doc["rays"].size(); ++i) {
    const auto& r = doc["rays"][i];
    if (!r.is_array()) throw fail("ray " + std::to_string(i) + " is not an array");
    IntVector v;
    for (std::size_t k = 0; k < r.size(); ++k)
      v.push_back(detail::to_integer(r[k], "ray " + std::to_string(i) + " coordinate " + std::to_string(k)));
    d.rays.push_back(std::move(v));
  }
  for (std::size_t c = 0; c < doc["cones"].size(); ++c) {
    const auto& cone = doc["cones"][c];
    if (!cone.is_array()) throw fail("cone " + std::to_string(c) + " is not an array");
    std::vector<std::size_t> idx;
    for (const auto& e : cone) {
      if (!e.is_number_integer() || e.get<long long>() < 0)
        throw fail("cone " + std::to_string(c) + " has a non-index entry");
      const auto i = e.get<std::size_t>();
      if (i >= d.rays.size())
        throw Error(Errc::IndexOutOfRange, "cone " + std::to_string(c) + " uses ray index " +
                                               std::to_string(i) + " but there are " +
                                               std::to_string(d.rays.size()) + " rays");
      idx.push_back(i);
    }
    d.cones.push_back(std::move(idx));
  }
  return d;
}

inline FanData parse_fan_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, "line " + std::to_string(detail::line_of_offset(text, e.byte)) + ": " + e.what());
  }
  return parse_fan_json(doc);
}

inline json fan_to_json(const FanData& d) {
  json rays = json::array();
  for (const auto& r : d.rays) {
    json v = json::array();
    for (const auto& x : r) v.push_back(x.convert_to<long long>());
    rays.push_back(v);
  }
  json cones = json::array();
  for (const auto& c : d.cones) cones.push_back(c);
  json doc = json::object();
  if (!d.name.empty()) doc["name"] = d.name;
  doc["dim"] = d.dim;
  doc["rays"] = rays;
  doc["cones"] = cones;
  return doc;
}

/// Compact single-line-per-field rendering, the inverse of parse_fan_file.
inline std::string format_fan_file(const FanData& d) {
  std::string out = "{\n";
  if (!d.name.empty()) out += "  \"name\": " + json(d.name).dump() + ",\n";
  out += "  \"dim\": " + std::to_string(d.dim) + ",\n";
  out += "  \"rays\": " + fan_to_json(d)["rays"].dump() + ",\n";
  out += "  \"cones\": " + fan_to_json(d)["cones"].dump() + "\n}\n";
  return out;
}

/// Ray vectors of a cone given as "[[1,0],[0,1]]" or "1,0;0,1".
inline std::vector<IntVector> parse_cone_argument(std::string_view text) {
  std::vector<IntVector> rays;
  std::string s(text);
  if (!s.empty() && s.front() == '[') {
    json doc;
    try {
      doc = json::parse(s);
    } catch (const json::parse_error& e) {
      throw Error(Errc::ParseError, std::string("cone argument: ") + e.what());
    }
    if (!doc.is_array()) throw Error(Errc::ParseError, "cone argument must be a list of rays");
    for (const auto& r : doc) {
      if (!r.is_array()) throw Error(Errc::ParseError, "cone argument must be a list of rays");
      IntVector v;
      for (const auto& x : r) v.push_back(detail::to_integer(x, "cone coordinate"));
      rays.push_back(std::move(v));
    }
    return rays;
  }
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(';', start);
    if (end == std::string::npos) end = s.size();
    std::string ray = s.substr(start, end - start);
    IntVector v;
    std::size_t p = 0;
    while (p <= ray.size() && !ray.empty()) {
      std::size_t q = ray.find(',', p);
      if (q == std::string::npos) q = ray.size();
      std::string tok = ray.substr(p, q - p);
      tok.erase(0, tok.find_first_not_of(' '));
      tok.erase(tok.find_last_not_of(' ') + 1);
      v.push_back(detail::to_integer(json(tok), "cone coordinate '" + tok + "'"));
      p = q + 1;
    }
    if (!v.empty()) rays.push_back(std::move(v));
    start = end + 1;
  }
  return rays;
}

}  // namespace fantor::io
