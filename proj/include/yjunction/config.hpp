#pragma once

// JSON run configuration:
//
//   {
//     "junctions": { "<name>": { "theta": [t1, t2, t3], "alpha": .., "beta": ..,
//                                "gamma": .., "delta": .., "a": .., "b": .., "L0": .. } },
//     "ring": { "left": "<name>", "mode": "symmetric|antisymmetric|general",
//               "right": "<name>", "xi1": .., "xi2": .. },
//     "task": { "k": .., "k_min": .., "k_max": .., "n": .., "tol": ..,
//               "kind": "transmission|reflection", "junction": "<name>",
//               "xi": .., "orientation": "in|out", "scan_n": .. }
//   }
//
// Angles are numbers in radians or strings "pi:x" meaning x * pi.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "yjunction/ring.hpp"
#include "yjunction/spectrum.hpp"

namespace yjunction {

/// Malformed or inconsistent configuration; the message names the field.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Task {
  std::optional<double> k;
  std::optional<double> k_min;
  std::optional<double> k_max;
  std::optional<int> n;
  std::optional<double> tol;
  std::optional<ResonanceKind> kind;
  std::optional<std::string> junction;
  std::optional<double> xi;
  std::optional<Orientation> orientation;
  std::optional<int> scan_n;
};

struct Config {
  std::vector<std::pair<std::string, JunctionParams>> junctions;
  std::optional<RingConfig> ring;
  Task task;

  /// Throws ConfigError for unknown names.
  const JunctionParams& junction(const std::string& name) const;
};

/// Parses "pi:x" or a plain decimal. Throws ConfigError naming `field`.
double parse_angle_text(const std::string& text, const std::string& field);

Config parse_config(const std::string& json_text);
Config load_config(const std::filesystem::path& path);

ResonanceKind parse_kind(const std::string& text, const std::string& field);
Orientation parse_orientation(const std::string& text, const std::string& field);

}  // namespace yjunction
