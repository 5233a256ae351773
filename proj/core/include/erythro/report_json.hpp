#pragma once

#include <string>
#include <string_view>

#include "erythro/error.hpp"
#include "erythro/pipeline.hpp"

namespace erythro {

/// Single-line JSON for one report. The CLI and the HTTP service both emit
/// exactly this string, so identical inputs give byte-identical output.
std::string serialize_report(const ErythrocyteReport& report);

/// Inverse of serialize_report. Throws ParseError.
ErythrocyteReport parse_report(std::string_view json);

/// Single-line JSON record for an ROI that could not be analyzed.
std::string serialize_roi_error(const Roi& roi, ErrorCode code, std::string_view message);

/// {"error": "<code>", "message": "..."} body for service responses.
std::string serialize_error(ErrorCode code, std::string_view message);

/// Plain-text rendering for `--format text`.
std::string format_report_text(const ErythrocyteReport& report);

}  // namespace erythro
