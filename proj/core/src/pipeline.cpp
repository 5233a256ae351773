#include "erythro/pipeline.hpp"

#include "erythro/error.hpp"
#include "erythro/segmentation.hpp"

namespace erythro {

ErythrocyteReport analyze_roi(const RasterImage& image, const Roi& roi,
                              const AnalysisConfig& config) {
  const RasterImage crop = crop_roi(image, roi);
  const GrayImage gray = to_grayscale(crop);

  const GrayHistogram hist = gray_histogram(gray);
  if (hist.occupied_bins() < 2) {
    throw Error(ErrorCode::NoCellFound, "ROI has a single gray level; nothing to isolate");
  }
  const OtsuStats split = otsu_threshold(hist);
  const BinaryMask dark = binarize(gray, split.threshold, Polarity::DarkIsForeground);
  const LabelMap labels = label_components_8(dark);
  const BinaryMask cell =
      fill_holes(isolate_target_cell(labels, roi.local_center(), config.min_area));

  const CellPartition partition = partition_cell_colors(gray, cell);

  ErythrocyteReport report;
  report.roi = roi;
  report.roi_threshold = split.threshold;
  report.morpho = compute_morphometry(cell, config.thresholds.compactness_gate);
  report.color = compute_colorimetry(crop, partition);
  report.color.pct_red = round_to(report.color.pct_red, 2);
  report.color.pct_white = round_to(report.color.pct_white, 2);

  // Decide on the values the report shows.
  Classification decision = classify(report.morpho, report.color, config.thresholds);
  report.label = decision.label;
  report.trace = std::move(decision.trace);
  report.cell_mask = cell;
  return report;
}

}  // namespace erythro
