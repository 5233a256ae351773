#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "erythro/raster.hpp"

namespace erythro {

enum class ImageFormat { Png, Ppm };

// Supported inputs: PNG (8-bit RGB/RGBA, alpha dropped; other colour types
// are expanded by libpng) and binary PPM (P6) with maxval 255.

/// Detects the format from magic bytes. Throws UnsupportedFormat.
ImageFormat sniff_format(std::span<const std::uint8_t> bytes);

RasterImage decode_image(std::span<const std::uint8_t> bytes);
RasterImage decode_ppm(std::span<const std::uint8_t> bytes);
RasterImage decode_png(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> encode_ppm(const RasterImage& img);
std::vector<std::uint8_t> encode_png(const RasterImage& img);

/// Reads and decodes a file. Errors: IoFailure, UnsupportedFormat, CorruptFile.
RasterImage load_image(const std::filesystem::path& path);

/// Writes PNG when the extension is .png, PPM otherwise.
void save_image(const RasterImage& img, const std::filesystem::path& path);

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);

}  // namespace erythro
