#pragma once

// Point cloud files.
//
// JSON: {"matrix": [[...], ...]} or {"lower": [[d00], [d10, d11], ...]},
// with optional "weights": [...] and "labels": [...].
//
// CSV: one row per point holding the lower triangle including the zero
// diagonal, so row i has i + 1 entries. Optional lines "weights: w0,w1,..."
// and "labels: a,b,...". Blank lines and lines starting with '#' are skipped.

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hypgrp/quasimetric.hpp"

namespace hypgrp {

  [[nodiscard]] PointCloud cloud_from_json(nlohmann::json const& j);
  [[nodiscard]] PointCloud parse_cloud_json(std::string_view text);
  [[nodiscard]] PointCloud parse_cloud_csv(std::string_view text);
  // Chooses the format by extension: ".json" is JSON, anything else CSV.
  [[nodiscard]] PointCloud load_cloud(std::string const& path);

  // Full matrix form.
  [[nodiscard]] nlohmann::json cloud_to_json(PointCloud const& c);
  void write_cloud_csv(std::ostream& out, PointCloud const& c);

}  // namespace hypgrp
