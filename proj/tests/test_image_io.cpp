#include <doctest.h>
#include <png.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <string>

#include "erythro/error.hpp"
#include "erythro/image_io.hpp"

using namespace erythro;

namespace {

std::vector<std::uint8_t> bytes_of(const std::string& s) { return {s.begin(), s.end()}; }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("erythro_io_" + name);
}

}  // namespace

TEST_CASE("2x2 all-white PPM decodes to four white pixels") {
  std::string file = "P6\n2 2\n255\n";
  file += std::string(12, static_cast<char>(255));
  const auto img = decode_image(bytes_of(file));
  CHECK(img.width() == 2);
  CHECK(img.height() == 2);
  for (const Rgb& px : img.pixels()) CHECK(px == Rgb{255, 255, 255});
}

TEST_CASE("PPM header comments are skipped") {
  std::string file = "P6 # made by hand\n# second comment\n1 1\n255\n";
  file += std::string{'\x01', '\x02', '\x03'};
  CHECK(decode_ppm(bytes_of(file)).at(0, 0) == Rgb{1, 2, 3});
}

TEST_CASE("truncated PPM is CorruptFile") {
  std::string file = "P6\n4 4\n255\n";
  file += std::string(20, 'x');
  CHECK(code_of([&] { decode_image(bytes_of(file)); }) == ErrorCode::CorruptFile);
  CHECK(code_of([&] { decode_image(bytes_of("P6\n4")); }) == ErrorCode::CorruptFile);
}

TEST_CASE("PPM with 16-bit maxval is unsupported") {
  std::string file = "P6\n1 1\n65535\n" + std::string(6, '\0');
  CHECK(code_of([&] { decode_image(bytes_of(file)); }) == ErrorCode::UnsupportedFormat);
}

TEST_CASE("text and ASCII PPM are unsupported") {
  CHECK(code_of([&] { decode_image(bytes_of("hello, world")); }) == ErrorCode::UnsupportedFormat);
  CHECK(code_of([&] { decode_image(bytes_of("P3\n1 1\n255\n0 0 0\n")); }) ==
        ErrorCode::UnsupportedFormat);
}

TEST_CASE("missing file is IoFailure") {
  CHECK(code_of([] { load_image("/nonexistent/erythro.ppm"); }) == ErrorCode::IoFailure);
}

TEST_CASE("full-resolution smear frame keeps its 1600x1200 size") {
  const RasterImage frame(1600, 1200, Rgb{240, 200, 200});
  const auto path = temp_path("frame.ppm");
  save_image(frame, path);
  const auto back = load_image(path);
  CHECK(back.width() == 1600);
  CHECK(back.height() == 1200);
  std::filesystem::remove(path);
}

TEST_CASE("PNG encode/decode round-trips pixels") {
  std::vector<Rgb> px;
  for (int i = 0; i < 35; ++i)
    px.push_back({static_cast<std::uint8_t>(i * 7), static_cast<std::uint8_t>(255 - i),
                  static_cast<std::uint8_t>(i * i % 256)});
  const RasterImage img(7, 5, px);
  CHECK(decode_image(encode_png(img)) == img);

  const auto path = temp_path("rt.png");
  save_image(img, path);
  CHECK(load_image(path) == img);
  std::filesystem::remove(path);
}

TEST_CASE("RGBA PNG decodes with alpha ignored") {
  // 2x1 RGBA: opaque red and fully transparent green
  const std::uint8_t rgba[] = {255, 0, 0, 255, 0, 200, 0, 0};
  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;
  image.width = 2;
  image.height = 1;
  image.format = PNG_FORMAT_RGBA;
  png_alloc_size_t size = 0;
  REQUIRE(png_image_write_to_memory(&image, nullptr, &size, 0, rgba, 0, nullptr));
  std::vector<std::uint8_t> buf(size);
  REQUIRE(png_image_write_to_memory(&image, buf.data(), &size, 0, rgba, 0, nullptr));
  buf.resize(size);

  const auto img = decode_image(buf);
  CHECK(img.at(0, 0) == Rgb{255, 0, 0});
  CHECK(img.at(1, 0).g == 200);
}

TEST_CASE("truncated PNG is CorruptFile") {
  auto png = encode_png(RasterImage(16, 16, Rgb{10, 20, 30}));
  png.resize(png.size() / 2);
  CHECK(code_of([&] { decode_image(png); }) == ErrorCode::CorruptFile);
}
