// Copyright 2026 The Fluctus Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Kept in a header so the test suite can drive
// run() in-process; tools/fluctus.cpp is only main().
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage or domain error.

#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fluctus/fluctus.hpp"

namespace fluctus::cli {

// ---------------------------------------------------------------------------
// Output records

struct Input {
  std::string key;
  std::variant<double, std::string> value;
  std::string unit;  // empty for strings
};

struct Record {
  std::vector<Input> inputs;
  double value = 0.0;
  std::string unit;
  std::string formula;
  std::string provenance;  // "closed-form", "spectral-oracle", "lattice-oracle", "golden-rule-chain"
};

enum class Format { table, csv, json };

inline std::string fmt_num(double v, int digits) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

inline std::string column_name(const Input& in) {
  return in.unit.empty() ? in.key : in.key + "[" + in.unit + "]";
}

inline std::string input_text(const Input& in, int digits) {
  if (const auto* d = std::get_if<double>(&in.value)) return fmt_num(*d, digits);
  return std::get<std::string>(in.value);
}

inline nlohmann::json to_json(const Record& r) {
  nlohmann::json inputs = nlohmann::json::object();
  for (const auto& in : r.inputs) {
    if (const auto* d = std::get_if<double>(&in.value))
      inputs[in.key] = {{"value", *d}, {"unit", in.unit}};
    else
      inputs[in.key] = std::get<std::string>(in.value);
  }
  return {{"inputs", inputs}, {"value", r.value}, {"unit", r.unit}, {"formula", r.formula},
          {"provenance", r.provenance}};
}

inline void emit(const std::vector<Record>& recs, Format f, std::ostream& out) {
  if (f == Format::json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : recs) arr.push_back(to_json(r));
    out << arr.dump(2) << '\n';
    return;
  }
  if (recs.empty()) return;
  // Header from the first record; records of one command share their inputs.
  std::vector<std::string> header;
  for (const auto& in : recs.front().inputs) header.push_back(column_name(in));
  header.push_back("value");
  header.push_back("unit");
  header.push_back("formula");
  header.push_back("provenance");

  std::vector<std::vector<std::string>> rows;
  const int digits = f == Format::csv ? 17 : 6;
  for (const auto& r : recs) {
    std::vector<std::string> row;
    for (const auto& in : r.inputs) row.push_back(input_text(in, digits));
    row.push_back(fmt_num(r.value, digits));
    row.push_back(r.unit);
    row.push_back(r.formula);
    row.push_back(r.provenance);
    rows.push_back(std::move(row));
  }
  if (f == Format::csv) {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
      out << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return;
  }
  std::vector<std::size_t> w(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) w[i] = header[i].size();
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size() && i < w.size(); ++i) w[i] = std::max(w[i], r[i].size());
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i)
      out << (i ? "  " : "") << std::left << std::setw(static_cast<int>(w[i])) << cells[i];
    out << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

// ---------------------------------------------------------------------------
// Argument helpers

inline double parse_double(const std::string& s) {
  double v = 0.0;
  const char* b = s.data();
  const char* e = s.data() + s.size();
  if (b != e && *b == '+') ++b;
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc{} || p != e) throw PreconditionError("not a number: '" + s + "'");
  return v;
}

/// "x", "lo..hi:n" (n linear points) or "lo..hi:nL" (n log-spaced points).
inline std::vector<double> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) return {parse_double(s)};
  const auto colon = s.find(':', dots);
  if (colon == std::string::npos) throw PreconditionError("range '" + s + "' needs ':steps'");
  const double lo = parse_double(s.substr(0, dots));
  const double hi = parse_double(s.substr(dots + 2, colon - dots - 2));
  std::string steps = s.substr(colon + 1);
  const bool log = !steps.empty() && (steps.back() == 'L' || steps.back() == 'l');
  if (log) steps.pop_back();
  const double nd = parse_double(steps);
  if (nd < 1 || nd != std::floor(nd) || nd > 1e6) throw PreconditionError("range '" + s + "': bad step count");
  const int n = static_cast<int>(nd);
  if (log && !(lo > 0 && hi > 0)) throw PreconditionError("range '" + s + "': log ranges need positive bounds");
  std::vector<double> out;
  for (int i = 0; i < n; ++i) {
    const double t = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
    out.push_back(log ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t);
  }
  return out;
}

inline Format parse_format(const std::string& s) {
  if (s == "table") return Format::table;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw PreconditionError("unknown format '" + s + "' (table, csv, json)");
}

struct LightArgs {
  std::string lambda, omega, theta = "180";
  std::string pol = "perpendicular";
  double temperature = 0.0;  // 0: use material default
  bool in_medium = false;

  std::vector<double> omegas() const {
    if (!lambda.empty() && !omega.empty()) throw PreconditionError("give either --lambda or --omega, not both");
    if (!lambda.empty()) {
      std::vector<double> out;
      for (double l : parse_range(lambda)) out.push_back(ScatteringConfig::omega_from_wavelength(l));
      return out;
    }
    if (!omega.empty()) return parse_range(omega);
    throw PreconditionError("--lambda or --omega is required");
  }
  bool by_wavelength() const { return !lambda.empty(); }
};

inline void add_light_options(CLI::App* sub, LightArgs& a, bool with_pol) {
  sub->add_option("--lambda", a.lambda, "vacuum wavelength, m (value or range lo..hi:n[L])");
  sub->add_option("--omega", a.omega, "incident angular frequency, rad/s (value or range)");
  sub->add_option("--theta", a.theta, "scattering angle in degrees, (0, 180] (value or range)");
  sub->add_option("--temperature", a.temperature, "temperature, K (default: material's)");
  sub->add_flag("--in-medium", a.in_medium, "multiply the phonon frequency by the refractive index");
  if (with_pol) sub->add_option("--pol", a.pol, "perpendicular | parallel | crossed | unpolarized");
}

inline std::vector<ScatteringConfig> configs(const LightArgs& a) {
  const auto pol = parse_polarization(a.pol);
  if (!pol) throw PreconditionError("unknown polarization '" + a.pol + "'");
  if (a.temperature < 0.0) throw PreconditionError("temperature must be > 0");
  std::vector<ScatteringConfig> out;
  for (double w : a.omegas())
    for (double th : parse_range(a.theta)) {
      ScatteringConfig c;
      c.omega = w;
      c.theta = th / 180.0 * pi;
      c.pol = *pol;
      if (a.temperature > 0.0) c.T = a.temperature;
      c.in_medium_momentum = a.in_medium;
      c.check();
      out.push_back(c);
    }
  return out;
}

inline std::vector<Input> light_inputs(const FluidMedium& m, const ScatteringConfig& c, const LightArgs& a,
                                       bool with_pol, bool with_T) {
  std::vector<Input> in{{"material", m.name(), ""}};
  if (a.by_wavelength())
    in.push_back({"lambda", 2.0 * pi * PhysicalConstants::c / c.omega, "m"});
  else
    in.push_back({"omega", c.omega, "rad/s"});
  in.push_back({"theta", c.theta / pi * 180.0, "deg"});
  if (with_pol) in.push_back({"pol", std::string(to_string(c.pol)), ""});
  if (with_T) in.push_back({"T", c.temperature(m), "K"});
  return in;
}

// ---------------------------------------------------------------------------

inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"fluctus: zero-point density fluctuations in liquids and light scattering"};
  app.require_subcommand(1);
  std::string format = "table";
  app.add_option("--format", format, "table | csv | json")->capture_default_str();

  std::vector<Record> records;
  std::vector<std::string> notes;  // extra human-readable lines (table format only)
  int status = 0;

  // correlator ---------------------------------------------------------------
  auto* corr = app.add_subcommand("correlator", "vacuum density correlator (closed form)");
  corr->fallthrough();
  std::string c_mat = "water", c_r, c_dt = "0", c_z;
  bool c_oracle = false;
  corr->add_option("--material", c_mat, "built-in name or material file");
  corr->add_option("--r", c_r, "distance, m (value or range)");
  corr->add_option("--dt", c_dt, "time lag, s (value or range)");
  corr->add_option("--boundary", c_z, "distance to a planar wall, m (value or range)");
  corr->add_flag("--oracle", c_oracle, "also evaluate the regulated mode integral");
  corr->callback([&] {
    const auto m = find_material(c_mat);
    if (!c_z.empty()) {
      for (double z : parse_range(c_z)) {
        records.push_back({{{"material", m.name(), ""}, {"z", z, "m"}, {"r", 0.0, "m"}, {"dt", 0.0, "s"}},
                           boundary_shift_planar(m, z).value, CorrelatorValue::unit, "planar-wall-shift",
                           "closed-form"});
        if (c_r.empty()) continue;
        for (double r : parse_range(c_r))
          for (double dt : parse_range(c_dt)) {
            const auto b = boundary_correlator(m, z, z, r, dt);
            std::vector<Input> in{{"material", m.name(), ""}, {"z", z, "m"}, {"r", r, "m"}, {"dt", dt, "s"}};
            records.push_back({in, b.image.value, CorrelatorValue::unit, "image-term", "closed-form"});
            records.push_back({in, b.total(), CorrelatorValue::unit, "wall-correlator", "closed-form"});
          }
      }
      return;
    }
    if (c_r.empty()) throw PreconditionError("--r is required (or --boundary)");
    for (double r : parse_range(c_r))
      for (double dt : parse_range(c_dt)) {
        const auto v = correlator(m, Separation{r, dt});
        std::vector<Input> in{{"material", m.name(), ""}, {"r", r, "m"}, {"dt", dt, "s"}};
        records.push_back({in, v.value, CorrelatorValue::unit, v.formula, "closed-form"});
        if (c_oracle) {
          const auto o = extrapolated_correlator(m, r, dt);
          records.push_back({in, o.value, CorrelatorValue::unit, "regulated-mode-integral", "spectral-oracle"});
        }
      }
  });

  // xsection -----------------------------------------------------------------
  auto* xs = app.add_subcommand("xsection", "differential light-scattering cross sections");
  xs->fallthrough();
  std::string x_mat = "water", x_kind = "zp";
  double x_volume = 1.0;
  LightArgs x_light;
  xs->add_option("--material", x_mat, "built-in name or material file");
  add_light_options(xs, x_light, true);
  xs->add_option("--kind", x_kind, "zp | zp-exact | zp-chain | thermal-brillouin | thermal-total");
  xs->add_option("--volume", x_volume, "scattering volume, m^3 (default 1)");
  xs->callback([&] {
    const auto m = find_material(x_mat);
    if (!(x_volume > 0.0)) throw PreconditionError("--volume must be > 0");
    for (const auto& c : configs(x_light)) {
      CrossSectionValue v;
      if (x_kind == "zp") v = zp_cross_section_reduced(m, c);
      else if (x_kind == "zp-exact") v = zp_cross_section_exact(m, c);
      else if (x_kind == "zp-chain") v = zp_cross_section_chain(m, c);
      else if (x_kind == "thermal-brillouin") v = thermal_brillouin_cross_section(m, c);
      else if (x_kind == "thermal-total") v = thermal_total_cross_section(m, c);
      else throw PreconditionError("unknown --kind '" + x_kind + "'");
      const bool thermal = x_kind.rfind("thermal", 0) == 0;
      auto in = light_inputs(m, c, x_light, true, thermal);
      in.push_back({"volume", x_volume, "m^3"});
      records.push_back({in, v.value * x_volume, "m^2/sr", v.formula,
                         x_kind == "zp-chain" ? "golden-rule-chain" : "closed-form"});
    }
  });

  // ratio --------------------------------------------------------------------
  auto* rt = app.add_subcommand("ratio", "zero-point / thermal Brillouin cross-section ratio");
  rt->fallthrough();
  std::string r_mat = "water";
  LightArgs r_light;
  rt->add_option("--material", r_mat, "built-in name or material file");
  add_light_options(rt, r_light, false);
  rt->callback([&] {
    const auto m = find_material(r_mat);
    for (const auto& c : configs(r_light)) {
      const double R = ratio_zp_thermal(m, c);
      records.push_back({light_inputs(m, c, r_light, false, true), R, "1", "zp-thermal-ratio", "closed-form"});
      std::ostringstream note;
      note << "zero-point / thermal Brillouin = " << fmt_num(100.0 * R, 3) << "% at theta = "
           << fmt_num(c.theta / pi * 180.0, 6) << " deg, T = " << fmt_num(c.temperature(m), 6) << " K";
      notes.push_back(note.str());
    }
  });

  // kinematics ---------------------------------------------------------------
  auto* kin = app.add_subcommand("kinematics", "frequency and wavenumber of the emitted phonon");
  kin->fallthrough();
  std::string k_mat = "water";
  LightArgs k_light;
  kin->add_option("--material", k_mat, "built-in name or material file");
  add_light_options(kin, k_light, false);
  kin->callback([&] {
    const auto m = find_material(k_mat);
    for (const auto& c : configs(k_light)) {
      const auto k = phonon_kinematics(m, c);
      const auto in = light_inputs(m, c, k_light, false, false);
      const char* tag = c.in_medium_momentum ? "phonon-kinematics-in-medium" : "phonon-kinematics";
      records.push_back({in, c.omega, "rad/s", "incident-omega", "closed-form"});
      records.push_back({in, k.omegaPrime, "rad/s", std::string(tag) + ":omega-prime", "closed-form"});
      records.push_back({in, k.OmegaQ, "rad/s", std::string(tag) + ":Omega-q", "closed-form"});
      records.push_back({in, k.q, "1/m", std::string(tag) + ":q", "closed-form"});
    }
  });

  // structure-factor -----------------------------------------------------------
  auto* sf = app.add_subcommand("structure-factor", "zero-point spectral weight per mode");
  sf->fallthrough();
  std::string s_mat = "water", s_q;
  sf->add_option("--material", s_mat, "built-in name or material file");
  sf->add_option("--q", s_q, "wavenumber, 1/m (value or range)")->required();
  sf->callback([&] {
    const auto m = find_material(s_mat);
    for (double q : parse_range(s_q))
      records.push_back({{{"material", m.name(), ""}, {"q", q, "1/m"}}, zero_point_structure_factor(m, q),
                         "kg^2/m^3", "zero-point-structure-factor", "closed-form"});
  });

  // em-plate -------------------------------------------------------------------
  auto* em = app.add_subcommand("em-plate", "vacuum <E^2>, <B^2> near a perfect mirror (units of hbar c)");
  em->fallthrough();
  std::string e_z;
  em->add_option("--z", e_z, "distance to the plate, m (value or range)")->required();
  em->callback([&] {
    for (double z : parse_range(e_z)) {
      const auto s = em_vacuum_shift_plate(z);
      records.push_back({{{"z", z, "m"}}, s.e2, "hbar*c/m^4", "mirror-E2", "closed-form"});
      records.push_back({{{"z", z, "m"}}, s.b2, "hbar*c/m^4", "mirror-B2", "closed-form"});
    }
  });

  // verify -----------------------------------------------------------------------
  auto* ver = app.add_subcommand("verify", "run the oracle cross-checks");
  ver->fallthrough();
  std::string suite = "all";
  ver->add_option("suite", suite, "spectral | lattice | chain | all");
  std::vector<Check> checks;
  ver->callback([&] {
    if (suite != "spectral" && suite != "lattice" && suite != "chain" && suite != "all")
      throw PreconditionError("unknown suite '" + suite + "' (spectral, lattice, chain, all)");
    auto add = [&](std::vector<Check> c) { checks.insert(checks.end(), c.begin(), c.end()); };
    if (suite == "chain" || suite == "all") add(verify_chain());
    if (suite == "spectral" || suite == "all") add(verify_spectral());
    if (suite == "lattice" || suite == "all") add(verify_lattice());
  });

  // materials ----------------------------------------------------------------------
  auto* mats = app.add_subcommand("materials", "list or inspect materials");
  mats->fallthrough();
  mats->require_subcommand(1);
  auto* mlist = mats->add_subcommand("list", "list built-in materials");
  auto* mshow = mats->add_subcommand("show", "show and validate a material");
  std::string show_name;
  mshow->add_option("name", show_name, "built-in name or material file")->required();
  bool materials_done = false;
  mlist->callback([&] {
    for (const auto& n : builtin_material_names()) out << n << '\n';
    materials_done = true;
  });
  mshow->callback([&] {
    MediumProperties p;
    bool builtin = false;
    for (const auto& n : builtin_material_names()) builtin = builtin || n == show_name;
    if (builtin) {
      p = builtin_material(show_name).props();
    } else {
      std::filesystem::path path(show_name);
      if (!std::filesystem::is_regular_file(path)) {
        // Fall back to the search path; find_material reports the error.
        p = find_material(show_name).props();
      } else {
        p = parse_material_properties(read_text_file(path));
      }
    }
    const auto violations = validate(p);
    auto row = [&](const char* key, const std::string& val, const char* unit) {
      out << std::left << std::setw(18) << key << std::setw(24) << val << unit << '\n';
    };
    row("name", p.name, "");
    row("rho0", fmt_num(p.rho0, 10), "kg/m^3");
    row("cS", fmt_num(p.cS, 10), "m/s");
    row("eta", fmt_num(p.eta, 10), "");
    row("epsilon0", fmt_num(p.epsilon0, 10), "");
    row("drho", fmt_num(p.drho, 10), "(rho0 d eps/d rho0)_S");
    row("cP", p.cP ? fmt_num(*p.cP, 10) : "absent", "J/(kg K)");
    row("dEpsdT", p.dEpsdT ? fmt_num(*p.dEpsdT, 10) : "absent", "1/K");
    row("defaultT", fmt_num(p.defaultT, 10), "K");
    if (!violations.empty()) {
      for (const auto& v : violations) err << "violation: " << v << '\n';
      status = 2;
    }
    materials_done = true;
  });

  try {
    std::vector<std::string> args(argv.rbegin(), argv.rend());  // CLI11 wants them reversed
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    // Subcommand help requests land here too.
    if (e.get_exit_code() == 0) {
      out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().back()->help());
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  Format f = Format::table;
  try {
    f = parse_format(format);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  if (ver->parsed()) {
    bool ok = true;
    if (f == Format::json) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& c : checks)
        arr.push_back({{"suite", c.suite}, {"check", c.name}, {"tolerance", c.tolerance},
                       {"achieved", c.achieved}, {"pass", c.pass}});
      out << arr.dump(2) << '\n';
    }
    for (const auto& c : checks) {
      ok = ok && c.pass;
      if (f != Format::json)
        out << (c.pass ? "PASS" : "FAIL") << "  [" << c.suite << "] " << c.name << "  tolerance "
            << fmt_num(c.tolerance, 3) << "  achieved " << fmt_num(c.achieved, 3) << '\n';
    }
    return ok ? 0 : 1;
  }
  if (materials_done) return status;

  emit(records, f, out);
  if (f == Format::table)
    for (const auto& n : notes) out << n << '\n';
  return status;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace fluctus::cli
