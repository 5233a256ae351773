#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "erythro/colorimetry.hpp"
#include "erythro/morphometry.hpp"

namespace erythro {

enum class ErythrocyteClass {
  Healthy,
  Annulocyte,
  Sickle,
  Acanthocyte,
  Elliptocyte,
  Indeterminate,
};

std::string_view to_string(ErythrocyteClass label);
std::optional<ErythrocyteClass> parse_class(std::string_view name);

/// Decision thresholds. The 7 px spacing gate is tied to the acquisition
/// magnification (100x objective) and should be recalibrated for others.
struct ClassificationThresholds {
  double compactness_gate = 0.8;
  double spacing_gate = 7.0;
  double healthy_white_min = 10.0;
  double healthy_white_max = 14.0;
  double annulocyte_white_min = 33.0;
  double sickle_red_min = 91.0;
  int ncc_sickle = 2;

  /// Throws InvalidArgument if a threshold is not positive or the healthy
  /// band overlaps the annulocyte band.
  void validate() const;

  friend bool operator==(const ClassificationThresholds&,
                         const ClassificationThresholds&) = default;
};

struct Classification {
  ErythrocyteClass label = ErythrocyteClass::Indeterminate;
  /// Fired rules in evaluation order; the last entry names the label.
  std::vector<std::string> trace;
};

/// Shape first: the compactness gate splits round/oval cells from concave
/// ones. Round cells are split by axis spacing, then by pallor fraction;
/// concave cells by their concavity component count.
Classification classify(const MorphometricFeatures& morpho,
                        const ColorimetricFeatures& color,
                        const ClassificationThresholds& th = {});

}  // namespace erythro
