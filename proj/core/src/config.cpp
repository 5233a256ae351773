#include "erythro/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "erythro/error.hpp"

namespace erythro {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(int line_no, std::string_view line, const std::string& why) {
  throw Error(ErrorCode::ParseError,
              "line " + std::to_string(line_no) + " '" + std::string(line) + "': " + why);
}

double parse_number(std::string_view text) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    throw Error(ErrorCode::ParseError, "not a number: '" + std::string(text) + "'");
  }
  return value;
}

int parse_int(std::string_view text) {
  const double v = parse_number(text);
  if (v != std::floor(v) || std::abs(v) > 1e9) {
    throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(text) + "'");
  }
  return static_cast<int>(v);
}

Rgb parse_rgb(std::string_view text) {
  int channels[3];
  for (int i = 0; i < 3; ++i) {
    const auto comma = text.find(',');
    if ((i < 2) == (comma == std::string_view::npos)) {
      throw Error(ErrorCode::ParseError, "colour must be r,g,b");
    }
    const auto part = trim(i < 2 ? text.substr(0, comma) : text);
    channels[i] = parse_int(part);
    if (channels[i] < 0 || channels[i] > 255) {
      throw Error(ErrorCode::ParseError, "colour channel out of 0..255");
    }
    if (i < 2) text = text.substr(comma + 1);
  }
  return {static_cast<std::uint8_t>(channels[0]), static_cast<std::uint8_t>(channels[1]),
          static_cast<std::uint8_t>(channels[2])};
}

// Calls `on_entry(line_no, line, key, value)` for every key = value line.
template <typename F>
void for_each_entry(std::string_view text, F&& on_entry) {
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail(line_no, line, "expected key = value");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) fail(line_no, line, "empty key or value");
    try {
      on_entry(key, value);
    } catch (const Error& e) {
      fail(line_no, line, e.what());
    }
  }
}

}  // namespace

bool set_threshold(ClassificationThresholds& th, std::string_view key, double value) {
  if (key == "compactness_gate") th.compactness_gate = value;
  else if (key == "spacing_gate") th.spacing_gate = value;
  else if (key == "healthy_white_min") th.healthy_white_min = value;
  else if (key == "healthy_white_max") th.healthy_white_max = value;
  else if (key == "annulocyte_white_min") th.annulocyte_white_min = value;
  else if (key == "sickle_red_min") th.sickle_red_min = value;
  else if (key == "ncc_sickle") {
    if (value != std::floor(value)) {
      throw Error(ErrorCode::InvalidArgument, "ncc_sickle must be an integer");
    }
    th.ncc_sickle = static_cast<int>(value);
  } else {
    return false;
  }
  return true;
}

AnalysisConfig parse_config(std::string_view text, AnalysisConfig base) {
  for_each_entry(text, [&](std::string_view key, std::string_view value) {
    if (key == "min_area") {
      const int v = parse_int(value);
      if (v < 1) throw Error(ErrorCode::ParseError, "min_area must be >= 1");
      base.min_area = static_cast<std::size_t>(v);
    } else if (key == "format") {
      if (value == "json") base.format = OutputFormat::Json;
      else if (value == "text") base.format = OutputFormat::Text;
      else throw Error(ErrorCode::ParseError, "format must be json or text");
    } else if (!set_threshold(base.thresholds, key, parse_number(value))) {
      throw Error(ErrorCode::ParseError, "unknown key '" + std::string(key) + "'");
    }
  });
  try {
    base.thresholds.validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return base;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AnalysisConfig load_config(const std::filesystem::path& path, AnalysisConfig base) {
  return parse_config(read_text_file(path), std::move(base));
}

ShapeSpec parse_shape_spec(std::string_view text) {
  ShapeSpec spec;
  bool has_shape = false;
  using Setter = std::function<void(std::string_view)>;
  auto num = [](double& field) { return Setter([&field](std::string_view v) { field = parse_number(v); }); };
  auto integer = [](int& field) { return Setter([&field](std::string_view v) { field = parse_int(v); }); };
  auto colour = [](Rgb& field) { return Setter([&field](std::string_view v) { field = parse_rgb(v); }); };
  const std::map<std::string_view, Setter> setters = {
      {"width", integer(spec.canvas_width)},
      {"height", integer(spec.canvas_height)},
      {"center_x", num(spec.center_x)},
      {"center_y", num(spec.center_y)},
      {"radius", num(spec.radius)},
      {"pallor_radius", num(spec.pallor_radius)},
      {"semi_major", num(spec.semi_major)},
      {"semi_minor", num(spec.semi_minor)},
      {"pallor_scale", num(spec.pallor_scale)},
      {"bite_radius", num(spec.bite_radius)},
      {"bite_offset", num(spec.bite_offset)},
      {"spike_radius", num(spec.spike_radius)},
      {"spikes", integer(spec.spikes)},
      {"spike_half_angle", num(spec.spike_half_angle_deg)},
      {"rotation", num(spec.rotation_deg)},
      {"fill", colour(spec.fill)},
      {"pallor", colour(spec.pallor)},
      {"background", colour(spec.background)},
  };

  for_each_entry(text, [&](std::string_view key, std::string_view value) {
    if (key == "shape") {
      if (value == "disk") spec.kind = ShapeKind::Disk;
      else if (value == "annulus") spec.kind = ShapeKind::Annulus;
      else if (value == "ellipse") spec.kind = ShapeKind::Ellipse;
      else if (value == "crescent") spec.kind = ShapeKind::Crescent;
      else if (value == "star") spec.kind = ShapeKind::Star;
      else throw Error(ErrorCode::ParseError, "unknown shape '" + std::string(value) + "'");
      has_shape = true;
      return;
    }
    const auto it = setters.find(key);
    if (it == setters.end()) {
      throw Error(ErrorCode::ParseError, "unknown key '" + std::string(key) + "'");
    }
    it->second(value);
  });
  if (!has_shape) throw Error(ErrorCode::ParseError, "missing 'shape' key");
  return spec;
}

ShapeSpec load_shape_spec(const std::filesystem::path& path) {
  return parse_shape_spec(read_text_file(path));
}

}  // namespace erythro
