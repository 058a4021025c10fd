#pragma once

#include <initializer_list>
#include <string>

#include <json.hpp>

#include "fibersense/errors.hpp"

namespace fibersense {

using json = nlohmann::json;

/// Throws config_error if `obj` carries keys outside `allowed`.
/// `where` names the record for the error message.
inline void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                                const std::string& where) {
  if (!obj.is_object()) throw config_error(where + ": expected a JSON object");
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) {
        ok = true;
        break;
      }
    if (!ok) throw config_error(where + ": unknown key \"" + key + "\"");
  }
}

inline const json& require_key(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw config_error(where + ": missing key \"" + std::string(key) + "\"");
  return *it;
}

inline double require_number(const json& obj, const char* key, const std::string& where) {
  const json& v = require_key(obj, key, where);
  if (!v.is_number()) throw config_error(where + ": key \"" + std::string(key) + "\" must be a number");
  return v.get<double>();
}

inline std::string require_string(const json& obj, const char* key, const std::string& where) {
  const json& v = require_key(obj, key, where);
  if (!v.is_string()) throw config_error(where + ": key \"" + std::string(key) + "\" must be a string");
  return v.get<std::string>();
}

}  // namespace fibersense
