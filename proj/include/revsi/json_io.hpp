#pragma once

#include <string>

#include "json.hpp"
#include "revsi/model.hpp"

// JSON schema (all matrices are row-major arrays-of-arrays):
//   CityInstance   {"n", "alpha", "p_min", "p_max", "c", "delta", "x0", "ybar"}
//   Realization    {"y", "d0"} plus optional "d0_nominal" (belief anchor)
//   FollowerBelief {"m", "d0_belief", "prob"}

namespace revsi::model {

void to_json(nlohmann::json& j, const CityInstance& inst);
void from_json(const nlohmann::json& j, CityInstance& inst);

void to_json(nlohmann::json& j, const Realization& real);
void from_json(const nlohmann::json& j, Realization& real);

void to_json(nlohmann::json& j, const FollowerBelief& belief);
void from_json(const nlohmann::json& j, FollowerBelief& belief);

}  // namespace revsi::model

namespace revsi::io {

/// Parses a JSON document from a file; throws std::runtime_error with the
/// path on open or parse failure.
nlohmann::json load_json_file(const std::string& path);

/// Writes the document with 2-space indentation and a trailing newline.
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace revsi::io
