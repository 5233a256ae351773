#pragma once

#include <iosfwd>
#include <optional>
#include <string_view>

#include "erythro/raster.hpp"

namespace erythro::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNoCell = 2;

/// Entry point of the `erythro` tool, with streams injected for testing.
///
///   analyze --image PATH --roi X,Y,W,H [--roi ...] [--config PATH]
///           [--out PATH] [--format json|text]
///   synth --spec PATH --out PATH
///   selftest
///
/// analyze exits 0 when every ROI produced a report, 2 when some ROI had no
/// cell, 1 on I/O, ROI or configuration errors. ERYTHRO_CONFIG names a
/// config file used when --config is absent.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Parses "X,Y,W,H".
std::optional<Roi> parse_roi(std::string_view text);

/// Replays the published measurement rows through the classifier and the
/// compactness formula; prints one PASS/FAIL line per check.
bool run_selftest(std::ostream& out);

}  // namespace erythro::cli
