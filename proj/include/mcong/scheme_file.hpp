#pragma once

// JSON persistence for certified schemes.
//
// Every integer is written as a decimal string. Keys are emitted in sorted
// order with two-space indentation and a trailing newline, so a canonical
// file survives load + save byte for byte.

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "mcong/scheme.hpp"

namespace mcong {

inline constexpr const char* kSchemeFileVersion = "1";

class SchemeFileError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline nlohmann::json residues_to_json(const ModPoly& p) {
  auto arr = nlohmann::json::array();
  for (Residue c : p) arr.push_back(std::to_string(c));
  return arr;
}

inline std::uint64_t parse_decimal(const nlohmann::json& j, const std::string& field) {
  if (!j.is_string()) throw SchemeFileError("field '" + field + "' must be a decimal string");
  const auto& s = j.get_ref<const std::string&>();
  if (s.empty() || s.size() > 19 || s.find_first_not_of("0123456789") != std::string::npos ||
      (s.size() > 1 && s[0] == '0'))
    throw SchemeFileError("field '" + field + "' is not a canonical decimal: '" + s + "'");
  return std::stoull(s);
}

inline ModPoly residues_from_json(const nlohmann::json& j, const std::string& field, std::uint64_t m) {
  if (!j.is_array()) throw SchemeFileError("field '" + field + "' must be an array");
  ModPoly p;
  for (const auto& v : j) {
    const auto c = parse_decimal(v, field);
    if (c >= m) throw SchemeFileError("field '" + field + "' holds a residue outside [0, m-1]");
    p.push_back(c);
  }
  if (!p.empty() && p.back() == 0) throw SchemeFileError("field '" + field + "' has a trailing zero");
  return p;
}

inline const nlohmann::json& require(const nlohmann::json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key)) throw SchemeFileError("missing field '" + key + "'");
  return j.at(key);
}

inline std::string require_string(const nlohmann::json& j, const std::string& key) {
  const auto& v = require(j, key);
  if (!v.is_string()) throw SchemeFileError("field '" + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace detail

inline nlohmann::json scheme_to_json(const Scheme& s) {
  nlohmann::json prov = {
      {"S", s.provenance.S},
      {"R", s.provenance.R},
      {"A", s.provenance.A},
      {"G", s.provenance.G},
  };
  if (s.provenance.f0) prov["f0"] = *s.provenance.f0;
  return {
      {"version", kSchemeFileVersion},
      {"m", std::to_string(s.m)},
      {"i", std::to_string(s.i)},
      {"seed", std::to_string(s.seed)},
      {"E", {{"num", detail::residues_to_json(s.E.num)}, {"den", detail::residues_to_json(s.E.den)}}},
      {"P", detail::residues_to_json(s.P)},
      {"provenance", prov},
  };
}

inline Scheme scheme_from_json(const nlohmann::json& j) {
  if (detail::require_string(j, "version") != kSchemeFileVersion)
    throw SchemeFileError("unsupported scheme file version '" + j.at("version").get<std::string>() + "'");
  Scheme s;
  s.m = detail::parse_decimal(detail::require(j, "m"), "m");
  if (s.m < 2) throw SchemeFileError("m must be at least 2");
  s.i = detail::parse_decimal(detail::require(j, "i"), "i");
  if (s.i >= s.m) throw SchemeFileError("i must be below m");
  s.seed = detail::parse_decimal(detail::require(j, "seed"), "seed");
  if (s.seed >= s.m) throw SchemeFileError("seed must be below m");
  const auto& e = detail::require(j, "E");
  s.E.m = s.m;
  s.E.num = detail::residues_from_json(detail::require(e, "num"), "E.num", s.m);
  s.E.den = detail::residues_from_json(detail::require(e, "den"), "E.den", s.m);
  if (s.E.den.empty() || s.E.den[0] != 1) throw SchemeFileError("E.den must have constant term 1");
  s.P = detail::residues_from_json(detail::require(j, "P"), "P", s.m);
  const auto& prov = detail::require(j, "provenance");
  s.provenance.S = detail::require_string(prov, "S");
  s.provenance.R = detail::require_string(prov, "R");
  s.provenance.A = detail::require_string(prov, "A");
  s.provenance.G = detail::require_string(prov, "G");
  if (prov.contains("f0")) s.provenance.f0 = detail::require_string(prov, "f0");
  return s;
}

inline std::string save_scheme_string(const Scheme& s) { return scheme_to_json(s).dump(2) + "\n"; }

inline Scheme load_scheme_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemeFileError(std::string("malformed JSON: ") + e.what());
  }
  return scheme_from_json(j);
}

inline Scheme load_scheme_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemeFileError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_scheme_string(buf.str());
}

inline void save_scheme_file(const Scheme& s, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SchemeFileError("cannot write '" + path + "'");
  out << save_scheme_string(s);
}

}  // namespace mcong
