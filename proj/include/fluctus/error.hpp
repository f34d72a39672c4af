// Copyright 2026 The Fluctus Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace fluctus {

// Base of everything the library throws. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A closed form evaluated at one of its poles (sound cone, coincident points,
// contact with a wall).
class SingularityError : public Error {
 public:
  using Error::Error;
};

// Caller-side contract violation (bad schedule, negative distance, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class MissingPropertyError : public Error {
 public:
  explicit MissingPropertyError(std::string field)
      : Error("missing material property '" + field + "'"), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  // 0 when the problem is not tied to a line (e.g. a missing key).
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> violations)
      : Error(join(violations)), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out = "invalid material:";
    for (const auto& s : v) out += " " + s + " violated;";
    return out;
  }
  std::vector<std::string> violations_;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double estimate)
      : Error(what + " (error estimate " + format(estimate) + ")"), estimate_(estimate) {}
  double estimate() const noexcept { return estimate_; }

 private:
  static std::string format(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
  }
  double estimate_;
};

}  // namespace fluctus
