#include "lcf/material_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "lcf/error.hpp"

namespace lcf {
namespace {

struct Key {
  const char* name;
  double MaterialParams::*field;
  bool required;
};

constexpr std::array<Key, 10> kKeys = {{
    {"E", &MaterialParams::youngs_modulus, true},
    {"nu", &MaterialParams::poisson_ratio, true},
    {"K", &MaterialParams::hardening_coefficient, true},
    {"n_ro", &MaterialParams::hardening_exponent, true},
    {"sigma_f", &MaterialParams::fatigue_strength, true},
    {"b", &MaterialParams::strength_exponent, true},
    {"eps_f", &MaterialParams::fatigue_ductility, true},
    {"c", &MaterialParams::ductility_exponent, true},
    {"m_weibull", &MaterialParams::weibull_shape, true},
    {"K_t", &MaterialParams::notch_factor, false},
}};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& text, const std::string& source, std::size_t line) {
  double v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end)
    throw ParseError(source, line, "invalid number '" + text + "'");
  return v;
}

MaterialParams apply(std::istream& in, const std::string& source, MaterialParams params,
                     bool require_all) {
  std::map<std::string, std::size_t> lines;
  std::map<std::string, std::string> values;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(source, line_no, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) throw ParseError(source, line_no, "expected 'key = value'");
    if (values.count(key)) throw ParseError(source, line_no, "duplicate key '" + key + "'");
    values[key] = value;
    lines[key] = line_no;
  }
  for (const auto& [key, value] : values) {
    if (key == "amplitude_mode") {
      if (value == "halve_then_invert")
        params.amplitude_mode = AmplitudeMode::HalveThenInvert;
      else if (value == "invert_then_halve")
        params.amplitude_mode = AmplitudeMode::InvertThenHalve;
      else
        throw ParseError(source, lines[key], "unknown amplitude_mode '" + value + "'");
      continue;
    }
    const Key* match = nullptr;
    for (const Key& k : kKeys)
      if (key == k.name) match = &k;
    if (!match) throw ParseError(source, lines[key], "unknown key '" + key + "'");
    params.*(match->field) = to_double(value, source, lines[key]);
  }
  if (require_all) {
    for (const Key& k : kKeys)
      if (k.required && !values.count(k.name))
        throw ParseError(source, 0, std::string("missing key '") + k.name + "'");
    try {
      params.validate();
    } catch (const DomainError& e) {
      throw ParseError(source, 0, e.what());
    }
  }
  return params;
}

}  // namespace

std::map<std::string, std::string> parse_key_values(std::istream& in, const std::string& source) {
  std::map<std::string, std::string> values;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(source, line_no, "expected 'key = value'");
    values[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return values;
}

MaterialParams parse_material(std::istream& in, const std::string& source) {
  return apply(in, source, MaterialParams{}, true);
}

MaterialParams read_material(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  return parse_material(in, path.string());
}

MaterialParams parse_material_partial(std::istream& in, const std::string& source,
                                      const MaterialParams& defaults) {
  return apply(in, source, defaults, false);
}

void write_material(std::ostream& out, const MaterialParams& p) {
  for (const Key& k : kKeys) fmt::print(out, "{} = {:.17g}\n", k.name, p.*(k.field));
  fmt::print(out, "amplitude_mode = {}\n", p.amplitude_mode == AmplitudeMode::HalveThenInvert
                                               ? "halve_then_invert"
                                               : "invert_then_halve");
}

void write_material(const std::filesystem::path& path, const MaterialParams& params) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  write_material(out, params);
}

}  // namespace lcf
