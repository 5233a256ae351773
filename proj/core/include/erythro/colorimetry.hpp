#pragma once

#include <cstddef>
#include <optional>

#include "erythro/mask.hpp"
#include "erythro/raster.hpp"
#include "erythro/segmentation.hpp"

namespace erythro {

struct ColorCounts {
  std::size_t red = 0;
  std::size_t white = 0;
};

struct ColorProportions {
  double pct_red = 0.0;
  double pct_white = 0.0;
};

struct ColorimetricFeatures {
  std::size_t red_count = 0;
  std::size_t white_count = 0;
  double pct_red = 0.0;
  double pct_white = 0.0;
  Rgb mean_color;
  std::optional<Rgb> red_mean_color;
  std::optional<Rgb> white_mean_color;
  bool uniform_cell = false;

  friend bool operator==(const ColorimetricFeatures&,
                         const ColorimetricFeatures&) = default;
};

ColorCounts color_counts(const CellPartition& part);

/// Percentages of red and white pixels. Throws EmptyCell when both are zero.
ColorProportions color_proportions(std::size_t red_count, std::size_t white_count);

/// Per-channel mean over the mask, rounded half up. Throws EmptyMask or
/// DimensionMismatch.
Rgb mean_cell_color(const RasterImage& img, const BinaryMask& cell);

ColorimetricFeatures compute_colorimetry(const RasterImage& img,
                                         const CellPartition& part);

/// Rounds to `decimals` places, halves away from zero.
double round_to(double value, int decimals);

}  // namespace erythro
