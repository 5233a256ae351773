#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <future>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "erythro/config.hpp"
#include "erythro/error.hpp"
#include "erythro/image_io.hpp"
#include "erythro/pipeline.hpp"
#include "erythro/report_json.hpp"
#include "erythro/synth.hpp"

namespace erythro::cli {

namespace {

using RoiOutcome = std::variant<ErythrocyteReport, Error>;

void diagnose(std::ostream& err, const Error& e) {
  err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
}

struct AnalyzeArgs {
  std::string image;
  std::vector<std::string> rois;
  std::string config;
  std::string out;
  std::string format;
};

AnalysisConfig resolve_config(const AnalyzeArgs& args) {
  AnalysisConfig config;
  if (!args.config.empty()) {
    config = load_config(args.config);
  } else if (const char* env = std::getenv("ERYTHRO_CONFIG"); env && *env) {
    config = load_config(env);
  }
  if (args.format == "json") config.format = OutputFormat::Json;
  if (args.format == "text") config.format = OutputFormat::Text;
  return config;
}

std::vector<RoiOutcome> analyze_all(const RasterImage& image, const std::vector<Roi>& rois,
                                    const AnalysisConfig& config) {
  auto one = [&](const Roi& roi) -> RoiOutcome {
    try {
      return analyze_roi(image, roi, config);
    } catch (const Error& e) {
      return e;
    }
  };
  std::vector<RoiOutcome> outcomes;
  if (rois.size() == 1) {
    outcomes.push_back(one(rois.front()));
    return outcomes;
  }
  std::vector<std::future<RoiOutcome>> pending;
  pending.reserve(rois.size());
  for (const Roi& roi : rois) pending.push_back(std::async(std::launch::async, one, roi));
  for (auto& f : pending) outcomes.push_back(f.get());
  return outcomes;
}

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err) {
  AnalysisConfig config;
  std::vector<Roi> rois;
  RasterImage image;
  try {
    config = resolve_config(args);
    for (const auto& text : args.rois) {
      const auto roi = parse_roi(text);
      if (!roi) throw Error(ErrorCode::ParseError, "bad --roi '" + text + "', expected X,Y,W,H");
      rois.push_back(*roi);
    }
    image = load_image(args.image);
  } catch (const Error& e) {
    diagnose(err, e);
    return kExitError;
  }

  std::ofstream file;
  if (!args.out.empty()) {
    file.open(args.out, std::ios::binary | std::ios::trunc);
    if (!file) {
      diagnose(err, Error(ErrorCode::IoFailure, "cannot write " + args.out));
      return kExitError;
    }
  }
  std::ostream& sink = args.out.empty() ? out : file;

  int status = kExitOk;
  const auto outcomes = analyze_all(image, rois, config);
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (const auto* report = std::get_if<ErythrocyteReport>(&outcomes[i])) {
      if (config.format == OutputFormat::Json) {
        sink << serialize_report(*report) << '\n';
      } else {
        sink << format_report_text(*report);
      }
      continue;
    }
    const Error& e = std::get<Error>(outcomes[i]);
    diagnose(err, e);
    if (config.format == OutputFormat::Json) {
      sink << serialize_roi_error(rois[i], e.code(), e.what()) << '\n';
    } else {
      sink << "ROI " << args.rois[i] << "  error " << to_string(e.code()) << ": " << e.what()
           << '\n';
    }
    if (e.code() == ErrorCode::NoCellFound) {
      if (status == kExitOk) status = kExitNoCell;
    } else {
      status = kExitError;
    }
  }
  sink.flush();
  if (!sink) {
    diagnose(err, Error(ErrorCode::IoFailure, "failed writing reports"));
    return kExitError;
  }
  return status;
}

int cmd_synth(const std::string& spec_path, const std::string& out_path, std::ostream& out,
              std::ostream& err) {
  try {
    const ShapeSpec spec = load_shape_spec(spec_path);
    save_image(render_shape(spec), out_path);
    out << "wrote " << out_path << " (" << spec.canvas_width << "x" << spec.canvas_height << " "
        << to_string(spec.kind) << ")\n";
    return kExitOk;
  } catch (const Error& e) {
    diagnose(err, e);
    return kExitError;
  }
}

}  // namespace

std::optional<Roi> parse_roi(std::string_view text) {
  int values[4];
  for (int i = 0; i < 4; ++i) {
    const auto comma = text.find(',');
    if ((i < 3) == (comma == std::string_view::npos)) return std::nullopt;
    const auto part = i < 3 ? text.substr(0, comma) : text;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), values[i]);
    if (ec != std::errc{} || ptr != part.data() + part.size()) return std::nullopt;
    if (i < 3) text = text.substr(comma + 1);
  }
  return Roi{values[0], values[1], values[2], values[3]};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Erythrocyte form identification from blood smear images"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one or more ROIs of an image");
  analyze_cmd->add_option("--image", analyze.image, "PNG or PPM (P6) smear image")->required();
  analyze_cmd->add_option("--roi", analyze.rois, "Region of interest X,Y,W,H (repeatable)")
      ->required();
  analyze_cmd->add_option("--config", analyze.config, "key = value configuration file");
  analyze_cmd->add_option("--out", analyze.out, "Write reports here instead of stdout");
  analyze_cmd->add_option("--format", analyze.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));

  std::string spec_path;
  std::string synth_out;
  auto* synth_cmd = app.add_subcommand("synth", "Render a synthetic cell image");
  synth_cmd->add_option("--spec", spec_path, "Shape spec file")->required();
  synth_cmd->add_option("--out", synth_out, "Output image (.png or .ppm)")->required();

  auto* selftest_cmd = app.add_subcommand("selftest", "Replay the reference measurement rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  if (analyze_cmd->parsed()) return cmd_analyze(analyze, out, err);
  if (synth_cmd->parsed()) return cmd_synth(spec_path, synth_out, out, err);
  if (selftest_cmd->parsed()) return run_selftest(out) ? kExitOk : kExitError;
  return kExitError;
}

}  // namespace erythro::cli
