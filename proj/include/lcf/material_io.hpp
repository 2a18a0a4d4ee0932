#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>

#include "lcf/material.hpp"

namespace lcf {

/// Flat `key = value` file, '#' comments. Keys: E, nu, K, n_ro, sigma_f, b,
/// eps_f, c, m_weibull, K_t (optional, default 1), amplitude_mode (optional).
std::map<std::string, std::string> parse_key_values(std::istream& in, const std::string& source);

/// Parses and validates. Throws ParseError for missing/unknown keys or values
/// that fail validation.
MaterialParams parse_material(std::istream& in, const std::string& source = "<stream>");
MaterialParams read_material(const std::filesystem::path& path);

/// Values without any of the required keys; used for partial parameter files
/// (calibration). Missing keys keep their value from `defaults`.
MaterialParams parse_material_partial(std::istream& in, const std::string& source,
                                      const MaterialParams& defaults);

void write_material(std::ostream& out, const MaterialParams& params);
void write_material(const std::filesystem::path& path, const MaterialParams& params);

}  // namespace lcf
