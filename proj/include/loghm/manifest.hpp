#ifndef LOGHM_MANIFEST_HPP
#define LOGHM_MANIFEST_HPP

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"

#include "loghm/analytic_map.hpp"
#include "loghm/error.hpp"
#include "loghm/logharmonic_map.hpp"

namespace loghm {

/// A parsed mapping manifest. Either an e^h conj(e^g) map or the
/// logharmonic Koebe map, which is not of that form.
struct Manifest {
  std::optional<LogharmonicMap> map;
  bool logharmonic_koebe = false;
  nlohmann::json source;
};

/// {"variant": ..., "h": <map>, "omega": <map>} or {..., "g": <map>}, with
/// exactly one of "omega" / "g"; or {"preset": "LOGHARMONIC_KOEBE"}.
inline Manifest manifest_from_json(const nlohmann::json& j, int order = kDefaultOrder) {
  if (!j.is_object()) throw Error(ErrorKind::InputError, "manifest must be a JSON object");
  Manifest m;
  m.source = j;
  if (j.contains("preset")) {
    if (j.at("preset") != "LOGHARMONIC_KOEBE")
      throw Error(ErrorKind::InputError, "unknown top-level preset " + j.at("preset").dump());
    m.logharmonic_koebe = true;
    return m;
  }
  if (!j.contains("variant") || !j.at("variant").is_string())
    throw Error(ErrorKind::InputError, "manifest needs a \"variant\" string");
  if (!j.contains("h")) throw Error(ErrorKind::InputError, "manifest needs \"h\"");
  const bool has_omega = j.contains("omega");
  const bool has_g = j.contains("g");
  if (has_omega == has_g) throw Error(ErrorKind::InputError, "manifest needs exactly one of \"omega\" and \"g\"");
  const Variant variant = variant_from_string(j.at("variant").get<std::string>());
  auto h = analytic_map_from_json(j.at("h"));
  if (has_omega)
    m.map = LogharmonicMap::from_dilatation(std::move(h), analytic_map_from_json(j.at("omega")), variant, order);
  else
    m.map = LogharmonicMap::from_parts(std::move(h), analytic_map_from_json(j.at("g")), variant);
  return m;
}

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InputError, "cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InputError, path + ": " + e.what());
  }
}

inline Manifest load_manifest(const std::string& path, int order = kDefaultOrder) {
  return manifest_from_json(read_json_file(path), order);
}

}  // namespace loghm

#endif  // LOGHM_MANIFEST_HPP
