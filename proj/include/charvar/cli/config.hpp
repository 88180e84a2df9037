#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

namespace charvar::cli {

/// Parameters shared by all subcommands. Fields a command does not use are
/// ignored by it.
struct RunConfig {
  std::string group = "SL_R(2)";
  int rank = 2;
  std::uint64_t seed = 1;
  double scale = 1.0;
  int steps = 64;
  double tol = 1e-8;
  std::string out;
  std::string input;

  double step = 0.1;
  int max_iters = 50000;
  int trace_every = 0;
  std::string trace;

  std::string tag = "SU2";
  std::optional<int> r_min;
  std::optional<int> r_max;
  std::string format = "text";

  std::string figure = "fig3_ball";
  int grid = 50;
  double extent = 2.5;

  std::optional<std::array<double, 3>> point;

  bool operator==(const RunConfig&) const = default;
};

nlohmann::json to_json(const RunConfig& config);

/// Overlays the keys of `j` onto `base`. Throws ValidationError for unknown
/// keys and ill-typed values.
RunConfig overlay_json(const nlohmann::json& j, RunConfig base = {});

/// Reads a JSON object from `path` and overlays it onto `base`.
RunConfig load_config_file(const std::string& path, RunConfig base = {});

}  // namespace charvar::cli
