#include "erythro/raster.hpp"

#include <string>

#include "erythro/error.hpp"

namespace erythro {

namespace {

void check_dimensions(int width, int height, std::size_t count) {
  if (width <= 0 || height <= 0) {
    throw Error(ErrorCode::InvalidArgument,
                "image dimensions must be positive, got " + std::to_string(width) + "x" +
                    std::to_string(height));
  }
  if (count != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    throw Error(ErrorCode::InvalidArgument, "pixel count does not match dimensions");
  }
}

}  // namespace

RasterImage::RasterImage(int width, int height, std::vector<Rgb> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  check_dimensions(width_, height_, pixels_.size());
}

RasterImage::RasterImage(int width, int height, Rgb fill) : width_(width), height_(height) {
  check_dimensions(width, height,
                   static_cast<std::size_t>(width > 0 ? width : 0) *
                       static_cast<std::size_t>(height > 0 ? height : 0));
  pixels_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
}

bool RasterImage::contains(const Roi& roi) const noexcept {
  if (roi.width <= 0 || roi.height <= 0 || roi.x0 < 0 || roi.y0 < 0) return false;
  // widen before adding so huge ROIs cannot overflow
  return static_cast<long long>(roi.x0) + roi.width <= width_ &&
         static_cast<long long>(roi.y0) + roi.height <= height_;
}

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> values)
    : width_(width), height_(height), values_(std::move(values)) {
  check_dimensions(width_, height_, values_.size());
}

std::uint8_t luma(const Rgb& px) noexcept {
  const unsigned weighted = 299u * px.r + 587u * px.g + 114u * px.b;
  return static_cast<std::uint8_t>((weighted + 500u) / 1000u);
}

GrayImage to_grayscale(const RasterImage& img) {
  std::vector<std::uint8_t> values;
  values.reserve(img.pixels().size());
  for (const Rgb& px : img.pixels()) values.push_back(luma(px));
  return GrayImage(img.width(), img.height(), std::move(values));
}

RasterImage crop_roi(const RasterImage& img, const Roi& roi) {
  if (!img.contains(roi)) {
    throw Error(ErrorCode::RoiOutOfBounds,
                "ROI " + std::to_string(roi.x0) + "," + std::to_string(roi.y0) + "," +
                    std::to_string(roi.width) + "," + std::to_string(roi.height) +
                    " is not inside the " + std::to_string(img.width()) + "x" +
                    std::to_string(img.height()) + " image");
  }
  std::vector<Rgb> out;
  out.reserve(static_cast<std::size_t>(roi.width) * static_cast<std::size_t>(roi.height));
  for (int j = 0; j < roi.height; ++j) {
    for (int i = 0; i < roi.width; ++i) out.push_back(img.at(roi.x0 + i, roi.y0 + j));
  }
  return RasterImage(roi.width, roi.height, std::move(out));
}

}  // namespace erythro
