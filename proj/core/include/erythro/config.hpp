#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "erythro/classifier.hpp"
#include "erythro/synth.hpp"

namespace erythro {

enum class OutputFormat { Json, Text };

struct AnalysisConfig {
  /// Smallest component accepted as a cell. Healthy cells at 100x are
  /// 4472-4939 px and the smallest documented diseased cell is 2037 px;
  /// 800 rejects platelets and debris.
  std::size_t min_area = 800;
  ClassificationThresholds thresholds;
  OutputFormat format = OutputFormat::Json;

  friend bool operator==(const AnalysisConfig&, const AnalysisConfig&) = default;
};

/// Sets a classifier threshold by its config key (compactness_gate,
/// spacing_gate, healthy_white_min, healthy_white_max, annulocyte_white_min,
/// sickle_red_min, ncc_sickle). Returns false for unknown keys.
bool set_threshold(ClassificationThresholds& th, std::string_view key, double value);

/// Parses `key = value` lines into `base`. Blank lines and lines starting
/// with '#' are skipped. Throws ParseError naming the offending line.
AnalysisConfig parse_config(std::string_view text, AnalysisConfig base = {});
AnalysisConfig load_config(const std::filesystem::path& path, AnalysisConfig base = {});

/// Same key = value syntax; keys: shape, width, height, center_x, center_y,
/// radius, pallor_radius, semi_major, semi_minor, pallor_scale, bite_radius,
/// bite_offset, spike_radius, spikes, spike_half_angle, rotation, and the
/// colours fill, pallor, background as `r,g,b`.
ShapeSpec parse_shape_spec(std::string_view text);
ShapeSpec load_shape_spec(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace erythro
