#include "erythro/report_json.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace erythro {

using nlohmann::json;

namespace {

json rgb_json(const Rgb& c) { return json::array({c.r, c.g, c.b}); }

json optional_rgb_json(const std::optional<Rgb>& c) {
  return c ? rgb_json(*c) : json(nullptr);
}

Rgb rgb_from(const json& j) {
  if (!j.is_array() || j.size() != 3) throw Error(ErrorCode::ParseError, "colour must be [r,g,b]");
  return {j.at(0).get<std::uint8_t>(), j.at(1).get<std::uint8_t>(), j.at(2).get<std::uint8_t>()};
}

json roi_json(const Roi& roi) {
  return {{"x", roi.x0}, {"y", roi.y0}, {"w", roi.width}, {"h", roi.height}};
}

// Row-major runs of foreground as [start, length, start, length, ...].
json mask_json(const BinaryMask& mask) {
  json runs = json::array();
  const auto bits = mask.bits();
  std::size_t i = 0;
  while (i < bits.size()) {
    if (!bits[i]) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < bits.size() && bits[i]) ++i;
    runs.push_back(start);
    runs.push_back(i - start);
  }
  return {{"width", mask.width()}, {"height", mask.height()}, {"runs", std::move(runs)}};
}

BinaryMask mask_from(const json& j) {
  const int w = j.at("width").get<int>();
  const int h = j.at("height").get<int>();
  BinaryMask mask(w, h);
  const auto& runs = j.at("runs");
  if (runs.size() % 2 != 0) throw Error(ErrorCode::ParseError, "mask runs must come in pairs");
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), 0);
  for (std::size_t r = 0; r < runs.size(); r += 2) {
    const auto start = runs[r].get<std::size_t>();
    const auto len = runs[r + 1].get<std::size_t>();
    if (start + len > bits.size()) throw Error(ErrorCode::ParseError, "mask run out of range");
    std::fill_n(bits.begin() + static_cast<std::ptrdiff_t>(start), len, std::uint8_t{1});
  }
  return BinaryMask(w, h, std::move(bits));
}

}  // namespace

std::string serialize_report(const ErythrocyteReport& r) {
  const auto& m = r.morpho;
  const auto& c = r.color;
  json j;
  j["schema"] = kReportSchema;
  j["roi"] = roi_json(r.roi);
  j["label"] = to_string(r.label);
  j["roi_threshold"] = r.roi_threshold;
  j["morphometry"] = {
      {"area", m.area},
      {"perimeter", m.perimeter},
      {"compactness", m.compactness},
      {"barycenter", {{"x", m.barycenter.cx}, {"y", m.barycenter.cy}}},
      {"major_axis", m.major_axis},
      {"minor_axis", m.minor_axis},
      {"axis_spacing", m.axis_spacing},
      {"varconvex", m.varconvex},
      {"ncc", m.ncc ? json(*m.ncc) : json(nullptr)},
  };
  j["colorimetry"] = {
      {"red_count", c.red_count},
      {"white_count", c.white_count},
      {"pct_red", c.pct_red},
      {"pct_white", c.pct_white},
      {"mean_color", rgb_json(c.mean_color)},
      {"red_mean_color", optional_rgb_json(c.red_mean_color)},
      {"white_mean_color", optional_rgb_json(c.white_mean_color)},
      {"uniform_cell", c.uniform_cell},
  };
  j["trace"] = r.trace;
  j["cell_mask"] = mask_json(r.cell_mask);
  return j.dump();
}

ErythrocyteReport parse_report(std::string_view text) {
  try {
    const json j = json::parse(text);
    if (j.at("schema").get<std::string>() != kReportSchema) {
      throw Error(ErrorCode::ParseError, "unsupported report schema");
    }
    ErythrocyteReport r;
    const auto& roi = j.at("roi");
    r.roi = {roi.at("x").get<int>(), roi.at("y").get<int>(), roi.at("w").get<int>(),
             roi.at("h").get<int>()};
    const auto label = parse_class(j.at("label").get<std::string>());
    if (!label) throw Error(ErrorCode::ParseError, "unknown label");
    r.label = *label;
    r.roi_threshold = j.at("roi_threshold").get<int>();

    const auto& m = j.at("morphometry");
    r.morpho.area = m.at("area").get<std::size_t>();
    r.morpho.perimeter = m.at("perimeter").get<std::size_t>();
    r.morpho.compactness = m.at("compactness").get<double>();
    r.morpho.barycenter = {m.at("barycenter").at("x").get<double>(),
                           m.at("barycenter").at("y").get<double>()};
    r.morpho.major_axis = m.at("major_axis").get<double>();
    r.morpho.minor_axis = m.at("minor_axis").get<double>();
    r.morpho.axis_spacing = m.at("axis_spacing").get<double>();
    r.morpho.varconvex = m.at("varconvex").get<int>();
    if (!m.at("ncc").is_null()) r.morpho.ncc = m.at("ncc").get<int>();

    const auto& c = j.at("colorimetry");
    r.color.red_count = c.at("red_count").get<std::size_t>();
    r.color.white_count = c.at("white_count").get<std::size_t>();
    r.color.pct_red = c.at("pct_red").get<double>();
    r.color.pct_white = c.at("pct_white").get<double>();
    r.color.mean_color = rgb_from(c.at("mean_color"));
    if (!c.at("red_mean_color").is_null()) r.color.red_mean_color = rgb_from(c.at("red_mean_color"));
    if (!c.at("white_mean_color").is_null()) {
      r.color.white_mean_color = rgb_from(c.at("white_mean_color"));
    }
    r.color.uniform_cell = c.at("uniform_cell").get<bool>();

    r.trace = j.at("trace").get<std::vector<std::string>>();
    r.cell_mask = mask_from(j.at("cell_mask"));
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("report JSON: ") + e.what());
  }
}

std::string serialize_roi_error(const Roi& roi, ErrorCode code, std::string_view message) {
  json j;
  j["schema"] = kReportSchema;
  j["roi"] = roi_json(roi);
  j["error"] = {{"code", to_string(code)}, {"message", message}};
  return j.dump();
}

std::string serialize_error(ErrorCode code, std::string_view message) {
  return json{{"error", to_string(code)}, {"message", message}}.dump();
}

std::string format_report_text(const ErythrocyteReport& r) {
  const auto& m = r.morpho;
  const auto& c = r.color;
  char buf[512];
  std::ostringstream out;
  std::snprintf(buf, sizeof(buf), "ROI %d,%d,%d,%d  label %s\n", r.roi.x0, r.roi.y0, r.roi.width,
                r.roi.height, std::string(to_string(r.label)).c_str());
  out << buf;
  std::snprintf(buf, sizeof(buf),
                "  area %zu  perimeter %zu  compactness %.2f  minor %.2f  major %.2f  "
                "spacing %.2f  varconvex %d  ncc %s\n",
                m.area, m.perimeter, m.compactness, m.minor_axis, m.major_axis, m.axis_spacing,
                m.varconvex, m.ncc ? std::to_string(*m.ncc).c_str() : "-");
  out << buf;
  std::snprintf(buf, sizeof(buf),
                "  red %zu  white %zu  %%white %.2f  %%red %.2f  colour %d/%d/%d\n", c.red_count,
                c.white_count, c.pct_white, c.pct_red, c.mean_color.r, c.mean_color.g,
                c.mean_color.b);
  out << buf;
  for (const auto& step : r.trace) out << "  - " << step << '\n';
  return out.str();
}

}  // namespace erythro
