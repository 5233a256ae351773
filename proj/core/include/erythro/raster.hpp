#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace erythro {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

struct PixelCoord {
  int x = 0;
  int y = 0;

  friend bool operator==(const PixelCoord&, const PixelCoord&) = default;
};

/// Operator-selected rectangle around one target cell, in image pixels.
struct Roi {
  int x0 = 0;
  int y0 = 0;
  int width = 0;
  int height = 0;

  PixelCoord local_center() const { return {width / 2, height / 2}; }

  friend bool operator==(const Roi&, const Roi&) = default;
};

/// Row-major 8-bit RGB image. Immutable once constructed.
class RasterImage {
 public:
  RasterImage() = default;
  /// Throws InvalidArgument when dimensions are not positive or the pixel
  /// count does not match.
  RasterImage(int width, int height, std::vector<Rgb> pixels);
  RasterImage(int width, int height, Rgb fill);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  bool empty() const noexcept { return pixels_.empty(); }
  std::span<const Rgb> pixels() const noexcept { return pixels_; }

  const Rgb& at(int x, int y) const { return pixels_[index(x, y)]; }
  bool contains(int x, int y) const noexcept {
    return x >= 0 && y >= 0 && x < width_ && y < height_;
  }
  bool contains(const Roi& roi) const noexcept;

  friend bool operator==(const RasterImage&, const RasterImage&) = default;

 private:
  std::size_t index(int x, int y) const noexcept {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<Rgb> pixels_;
};

/// Row-major 8-bit gray levels with the dimensions of its source image.
class GrayImage {
 public:
  GrayImage() = default;
  GrayImage(int width, int height, std::vector<std::uint8_t> values);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  bool empty() const noexcept { return values_.empty(); }
  std::span<const std::uint8_t> values() const noexcept { return values_; }
  std::uint8_t at(int x, int y) const {
    return values_[static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
                   static_cast<std::size_t>(x)];
  }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> values_;
};

/// Rec.601 luma, round(0.299 r + 0.587 g + 0.114 b) with halves rounded up.
/// Computed in integer arithmetic so achromatic pixels map to themselves.
std::uint8_t luma(const Rgb& px) noexcept;

GrayImage to_grayscale(const RasterImage& img);

/// Output pixel (i, j) equals input pixel (roi.x0 + i, roi.y0 + j).
/// Throws RoiOutOfBounds unless the ROI has positive size and lies inside.
RasterImage crop_roi(const RasterImage& img, const Roi& roi);

}  // namespace erythro
