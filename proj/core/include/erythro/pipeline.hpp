#pragma once

#include <string>
#include <vector>

#include "erythro/classifier.hpp"
#include "erythro/colorimetry.hpp"
#include "erythro/config.hpp"
#include "erythro/mask.hpp"
#include "erythro/morphometry.hpp"
#include "erythro/raster.hpp"

namespace erythro {

inline constexpr const char* kReportSchema = "erythro/1";

struct ErythrocyteReport {
  Roi roi;
  int roi_threshold = 0;  // Otsu threshold that separated cell from background
  MorphometricFeatures morpho;
  ColorimetricFeatures color;
  ErythrocyteClass label = ErythrocyteClass::Indeterminate;
  std::vector<std::string> trace;
  BinaryMask cell_mask;  // ROI-local

  friend bool operator==(const ErythrocyteReport&, const ErythrocyteReport&) = default;
};

/// Runs crop -> gray -> Otsu binarization -> 8-connected labelling -> target
/// isolation -> hole filling -> red/white partition -> features -> rules.
///
/// Throws RoiOutOfBounds for an invalid ROI and NoCellFound when the ROI has
/// no contrast or no component reaches `config.min_area`. Percentages in the
/// returned report are rounded to two decimals.
ErythrocyteReport analyze_roi(const RasterImage& image, const Roi& roi,
                              const AnalysisConfig& config = {});

}  // namespace erythro
