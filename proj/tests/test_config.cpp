#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <functional>

#include "erythro/config.hpp"
#include "erythro/error.hpp"

using namespace erythro;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("analysis config") {
  SUBCASE("empty text keeps defaults") { CHECK(parse_config("") == AnalysisConfig{}); }
  SUBCASE("overrides") {
    const auto cfg = parse_config(
        "# recalibrated for 60x\n"
        "spacing_gate = 4.5\n"
        "\n"
        "  min_area=300  \n"
        "format = text\n"
        "ncc_sickle = 3\n");
    CHECK(cfg.thresholds.spacing_gate == 4.5);
    CHECK(cfg.min_area == 300);
    CHECK(cfg.format == OutputFormat::Text);
    CHECK(cfg.thresholds.ncc_sickle == 3);
    CHECK(cfg.thresholds.compactness_gate == 0.8);
  }
  SUBCASE("base is layered") {
    AnalysisConfig base;
    base.min_area = 1234;
    CHECK(parse_config("spacing_gate = 9", base).min_area == 1234);
  }
  SUBCASE("errors") {
    CHECK(code_of([] { parse_config("bogus = 1"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_config("spacing_gate"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_config("spacing_gate = fast"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_config("min_area = 0"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_config("format = xml"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_config("healthy_white_max = 50"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_config("spacing_gate = -2"); }) == ErrorCode::ParseError);
  }
  SUBCASE("error names the line") {
    try {
      parse_config("min_area = 10\n\nwat = 3\n");
      FAIL("expected ParseError");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
  }
}

TEST_CASE("shape spec") {
  const auto s = parse_shape_spec(
      "shape = crescent\n"
      "width = 100\n"
      "height = 90\n"
      "radius = 30\n"
      "bite_radius = 24\n"
      "bite_offset = 14\n"
      "rotation = 45\n"
      "fill = 250, 200, 200\n");
  CHECK(s.kind == ShapeKind::Crescent);
  CHECK(s.canvas_width == 100);
  CHECK(s.canvas_height == 90);
  CHECK(s.bite_offset == 14);
  CHECK(s.rotation_deg == 45);
  CHECK(s.fill == Rgb{250, 200, 200});

  CHECK(parse_shape_spec("shape = star\nspikes = 7\nspike_half_angle = 9").spikes == 7);

  CHECK(code_of([] { parse_shape_spec("radius = 3"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_shape_spec("shape = hexagon"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_shape_spec("shape = disk\nspikes = 2.5"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_shape_spec("shape = disk\nfill = 1,2"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_shape_spec("shape = disk\nfill = 1,2,300"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_shape_spec("shape = disk\ncolour = 1"); }) == ErrorCode::ParseError);
}

TEST_CASE("config files") {
  const auto dir = std::filesystem::temp_directory_path() / "erythro_test_config";
  std::filesystem::create_directories(dir);
  const auto path = dir / "a.conf";
  std::ofstream(path) << "sickle_red_min = 88\n";
  CHECK(load_config(path).thresholds.sickle_red_min == 88);
  CHECK(code_of([&] { load_config(dir / "missing.conf"); }) == ErrorCode::IoFailure);
  std::filesystem::remove_all(dir);
}
