#include "erythro/colorimetry.hpp"

#include <array>
#include <cmath>

#include "erythro/error.hpp"

namespace erythro {

namespace {

std::optional<Rgb> mean_or_empty(const RasterImage& img, const BinaryMask& mask) {
  if (mask.count() == 0) return std::nullopt;
  return mean_cell_color(img, mask);
}

}  // namespace

ColorCounts color_counts(const CellPartition& part) {
  return {part.red_mask.count(), part.white_mask.count()};
}

ColorProportions color_proportions(std::size_t red_count, std::size_t white_count) {
  const std::size_t total = red_count + white_count;
  if (total == 0) throw Error(ErrorCode::EmptyCell, "no red or white pixels");
  const double n = static_cast<double>(total);
  return {100.0 * static_cast<double>(red_count) / n,
          100.0 * static_cast<double>(white_count) / n};
}

Rgb mean_cell_color(const RasterImage& img, const BinaryMask& cell) {
  if (img.width() != cell.width() || img.height() != cell.height()) {
    throw Error(ErrorCode::DimensionMismatch, "mask and image dimensions differ");
  }
  std::array<std::uint64_t, 3> sum{};
  std::uint64_t n = 0;
  for (int y = 0; y < cell.height(); ++y) {
    for (int x = 0; x < cell.width(); ++x) {
      if (!cell.at(x, y)) continue;
      const Rgb& px = img.at(x, y);
      sum[0] += px.r;
      sum[1] += px.g;
      sum[2] += px.b;
      ++n;
    }
  }
  if (n == 0) throw Error(ErrorCode::EmptyMask, "mean colour of an empty mask");
  auto avg = [n](std::uint64_t s) { return static_cast<std::uint8_t>((2 * s + n) / (2 * n)); };
  return {avg(sum[0]), avg(sum[1]), avg(sum[2])};
}

ColorimetricFeatures compute_colorimetry(const RasterImage& img, const CellPartition& part) {
  ColorimetricFeatures f;
  const ColorCounts counts = color_counts(part);
  f.red_count = counts.red;
  f.white_count = counts.white;
  const ColorProportions pct = color_proportions(counts.red, counts.white);
  f.pct_red = pct.pct_red;
  f.pct_white = pct.pct_white;
  f.mean_color = mean_cell_color(img, part.cell_mask);
  f.red_mean_color = mean_or_empty(img, part.red_mask);
  f.white_mean_color = mean_or_empty(img, part.white_mask);
  f.uniform_cell = part.uniform;
  return f;
}

double round_to(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::round(value * scale) / scale;
}

}  // namespace erythro
