// Copyright 2026 The Fluctus Authors
// SPDX-License-Identifier: Apache-2.0

// Material files: one `key = value` per line, `#` starts a comment.
//
//   name              = water
//   rho0_kg_m3        = 997
//   cs_m_s            = 1480
//   refractive_index  = 1.4
//   depsilon_drho     = 0.79
//   # optional
//   cp_j_kg_k         = 4180
//   depsilon_dt_per_k = -3.6e-4
//   temperature_k     = 295
//
// Unknown and duplicate keys are rejected.

#pragma once

#include <array>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>

#include "fluctus/medium.hpp"

namespace fluctus {

namespace detail {

inline std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline double parse_number(std::string_view text, int line, std::string_view key) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last)
    throw ParseError(line, "value of '" + std::string(key) + "' is not a number: '" +
                               std::string(text) + "'");
  return v;
}

inline std::string format_double(double v) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.17g", v);
  return buf.data();
}

inline constexpr std::array<std::string_view, 5> kRequiredKeys = {
    "name", "rho0_kg_m3", "cs_m_s", "refractive_index", "depsilon_drho"};
inline constexpr std::array<std::string_view, 3> kOptionalKeys = {
    "cp_j_kg_k", "depsilon_dt_per_k", "temperature_k"};

}  // namespace detail

/// Parses material text into an unvalidated record. Throws ParseError.
inline MediumProperties parse_material_properties(std::string_view text) {
  std::map<std::string, std::pair<std::string, int>, std::less<>> kv;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++lineno;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const auto line = detail::trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(lineno, "expected 'key = value'");
    const auto key = detail::trim(line.substr(0, eq));
    const auto value = detail::trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError(lineno, "empty key");
    bool known = false;
    for (auto k : detail::kRequiredKeys) known = known || k == key;
    for (auto k : detail::kOptionalKeys) known = known || k == key;
    if (!known) throw ParseError(lineno, "unknown key '" + std::string(key) + "'");
    if (value.empty()) throw ParseError(lineno, "empty value for '" + std::string(key) + "'");
    if (!kv.emplace(std::string(key), std::pair{std::string(value), lineno}).second)
      throw ParseError(lineno, "duplicate key '" + std::string(key) + "'");
  }
  for (auto k : detail::kRequiredKeys)
    if (kv.find(k) == kv.end()) throw ParseError(0, "missing required key '" + std::string(k) + "'");

  auto num = [&](std::string_view k) {
    const auto& [v, l] = kv.find(k)->second;
    return detail::parse_number(v, l, k);
  };
  MediumProperties p;
  p.name = kv.find("name")->second.first;
  p.rho0 = num("rho0_kg_m3");
  p.cS = num("cs_m_s");
  p.eta = num("refractive_index");
  p.epsilon0 = p.eta * p.eta;
  p.drho = num("depsilon_drho");
  if (kv.contains("cp_j_kg_k")) p.cP = num("cp_j_kg_k");
  if (kv.contains("depsilon_dt_per_k")) p.dEpsdT = num("depsilon_dt_per_k");
  p.defaultT = kv.contains("temperature_k") ? num("temperature_k") : 295.0;
  return p;
}

/// Parses and validates. Throws ParseError or ValidationError.
inline FluidMedium parse_material(std::string_view text) {
  return FluidMedium(parse_material_properties(text));
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline FluidMedium load_material(const std::filesystem::path& path) {
  return parse_material(read_text_file(path));
}

/// Writes every present field; parse_material(to_material_text(m)) == m.
inline std::string to_material_text(const FluidMedium& m) {
  using detail::format_double;
  std::ostringstream os;
  os << "name = " << m.name() << '\n'
     << "rho0_kg_m3 = " << format_double(m.rho0()) << '\n'
     << "cs_m_s = " << format_double(m.cS()) << '\n'
     << "refractive_index = " << format_double(m.eta()) << '\n'
     << "depsilon_drho = " << format_double(m.drho()) << '\n';
  if (m.has_cP()) os << "cp_j_kg_k = " << format_double(m.cP()) << '\n';
  if (m.has_dEpsdT()) os << "depsilon_dt_per_k = " << format_double(m.dEpsdT()) << '\n';
  os << "temperature_k = " << format_double(m.defaultT()) << '\n';
  return os.str();
}

/// Resolves a material argument: a built-in name, an existing file path, or
/// `<arg>` / `<arg>.mat` inside the directory named by FLUCTUS_MATERIAL_PATH.
inline FluidMedium find_material(std::string_view arg) {
  for (const auto& n : builtin_material_names())
    if (n == arg) return builtin_material(arg);
  namespace fs = std::filesystem;
  const fs::path direct{std::string(arg)};
  if (fs::is_regular_file(direct)) return load_material(direct);
  if (const char* dir = std::getenv("FLUCTUS_MATERIAL_PATH"); dir && *dir) {
    for (const auto& cand : {fs::path(dir) / direct, fs::path(dir) / (std::string(arg) + ".mat")})
      if (fs::is_regular_file(cand)) return load_material(cand);
  }
  std::string msg = "unknown material '" + std::string(arg) + "'; available:";
  for (const auto& n : builtin_material_names()) msg += " " + n;
  throw PreconditionError(msg + " (or a material file path)");
}

}  // namespace fluctus
