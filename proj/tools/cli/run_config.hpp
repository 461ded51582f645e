#pragma once

// One JSON document per run. Each command has a fixed key set with defaults;
// unknown keys are rejected, and the filled-in document is echoed into the
// output metadata so a run can be replayed from its own output.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "polyharm/geometry.hpp"

namespace polyharm::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<double> tolerance;
};

const std::vector<std::string>& command_names();

class RunConfig {
 public:
  /// Validates doc against the command's keys and fills defaults.
  RunConfig(std::string command, nlohmann::json doc, const Overrides& overrides = {});

  const std::string& command() const noexcept { return command_; }
  const nlohmann::json& effective() const noexcept { return doc_; }
  /// FNV-1a of the compact effective document.
  std::uint64_t hash() const;

  bool has(const std::string& key) const;
  int integer(const std::string& key) const;
  double number(const std::string& key) const;
  std::uint64_t seed() const;
  std::string text(const std::string& key) const;
  std::vector<int> integers(const std::string& key) const;
  std::vector<std::string> texts(const std::string& key) const;
  /// Empty when the key is null.
  std::optional<double> tolerance() const;
  /// Empty for "auto".
  std::optional<int> resolution() const;

  /// A point is [x1, ..., xn] or {"coords": [...], "sector": j} or
  /// {"coords": [...], "angle": a}.
  RotatedVector point(const nlohmann::json& j) const;
  std::vector<RotatedVector> points(const std::string& key) const;
  /// [x1, ...] real, or [[re, im], ...].
  ComplexVector complex_point(const std::string& key) const;

 private:
  const nlohmann::json& at(const std::string& key) const;

  std::string command_;
  nlohmann::json doc_;
};

/// Reads a config file; a missing path gives an empty document.
nlohmann::json read_config_file(const std::optional<std::string>& path);

std::string hex_hash(std::uint64_t h);

}  // namespace polyharm::cli
