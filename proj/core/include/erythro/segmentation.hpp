#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "erythro/mask.hpp"
#include "erythro/raster.hpp"

namespace erythro {

struct GrayHistogram {
  std::array<std::uint64_t, 256> counts{};
  std::uint64_t total = 0;

  /// Histogram of the pixels of `img` under `mask`. Dimensions must match.
  static GrayHistogram of_masked(const GrayImage& img, const BinaryMask& mask);

  int occupied_bins() const noexcept;
};

/// Statistics of the two-class split C1 = {v <= threshold}, C2 = {v > threshold}.
struct OtsuStats {
  int threshold = 0;
  double p1 = 0.0;
  double p2 = 0.0;
  double mu1 = 0.0;
  double mu2 = 0.0;
  double var_within = 0.0;   // p1 * var1 + p2 * var2
  double var_between = 0.0;  // p1 * p2 * (mu1 - mu2)^2
};

enum class Polarity { DarkIsForeground, LightIsForeground };

struct LabelMap {
  int width = 0;
  int height = 0;
  std::vector<int> labels;                  // 0 = background, 1..n
  std::vector<std::size_t> component_sizes; // index 0 unused

  int component_count() const noexcept {
    return component_sizes.empty() ? 0 : static_cast<int>(component_sizes.size()) - 1;
  }
  int at(int x, int y) const {
    return labels[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
                  static_cast<std::size_t>(x)];
  }
  BinaryMask component_mask(int label) const;
  bool touches_border(int label) const;
};

/// Split of an isolated cell into its dark (haemoglobin) and light (central
/// pallor) pixels. `uniform` marks cells whose pixels share one gray level;
/// those are reported as all-red rather than rejected.
struct CellPartition {
  BinaryMask cell_mask;
  BinaryMask red_mask;
  BinaryMask white_mask;
  bool uniform = false;
  int threshold = -1;  // -1 when uniform
};

/// Throws EmptyImage.
GrayHistogram gray_histogram(const GrayImage& img);

/// Exhaustive Otsu search over t in 0..254 maximising the between-class
/// variance; the smallest maximising t wins. Throws NoSeparation when fewer
/// than two bins are occupied.
OtsuStats otsu_threshold(const GrayHistogram& hist);

/// Between/within statistics for a fixed split; both classes must be nonempty.
OtsuStats otsu_stats_at(const GrayHistogram& hist, int threshold);

BinaryMask binarize(const GrayImage& img, int threshold, Polarity polarity);

/// Labels maximal 8-connected foreground regions in first-encounter raster
/// order starting at 1.
LabelMap label_components_8(const BinaryMask& mask);

/// 4-connected labelling, used for background regions (the dual of 8).
LabelMap label_components_4(const BinaryMask& mask);

/// Picks the target cell among components of at least `min_area` pixels.
/// Interior components are preferred over ones touching the ROI border; in
/// the preferred pool the component under `roi_center` wins, otherwise the
/// largest one (lowest label on ties). Throws NoCellFound.
BinaryMask isolate_target_cell(const LabelMap& labels, PixelCoord roi_center,
                               std::size_t min_area);

/// Sets every background pixel that cannot reach the grid border through
/// 4-connected background. A cell with a pale centre binarizes as a ring;
/// this restores the pallor into the cell body.
BinaryMask fill_holes(const BinaryMask& mask);

/// Otsu over the cell's own pixels: values <= t are red, the rest white.
CellPartition partition_cell_colors(const GrayImage& gray, const BinaryMask& cell);

}  // namespace erythro
