#pragma once

// nlohmann/json adapters for core types. Private to the core library.

#include <json.hpp>

#include "viewsel/format_error.hpp"
#include "viewsel/viewpoint.hpp"

namespace viewsel {

inline void to_json(nlohmann::json& j, const Viewpoint& v) {
  j = nlohmann::json{{"pitch", v.pitch()}, {"yaw", v.yaw()}};
}

inline Viewpoint viewpoint_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("yaw") || !j.contains("pitch") ||
      !j.at("yaw").is_number() || !j.at("pitch").is_number()) {
    throw std::invalid_argument("viewpoint must be an object with numeric yaw and pitch");
  }
  return Viewpoint(j.at("yaw").get<double>(), j.at("pitch").get<double>());
}

inline nlohmann::json parse_json(const std::string& text, const char* what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string(what) + ": " + e.what(), e.byte);
  }
}

}  // namespace viewsel
