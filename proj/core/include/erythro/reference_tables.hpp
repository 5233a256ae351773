#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "erythro/classifier.hpp"

namespace erythro {

/// One published measurement row: a cell's colorimetric and morphometric
/// values together with the class the authors assigned.
struct ReferenceRow {
  std::string_view group;  // e.g. "healthy", "sickle"
  std::string_view id;     // row label within the group
  // colorimetry
  std::size_t red_count;
  std::size_t white_count;
  Rgb mean_color;
  std::size_t color_area;
  double pct_white;
  double pct_red;
  // morphometry
  double compactness;
  std::size_t area;
  std::size_t perimeter;
  double minor_axis;
  double major_axis;
  double axis_spacing;
  int varconvex;
  std::optional<int> ncc;
  ErythrocyteClass expected;
};

/// The sixteen rows of the healthy, annulocyte, sickle, acanthocyte and
/// elliptocyte measurement tables.
std::span<const ReferenceRow> reference_rows();

MorphometricFeatures to_morphometry(const ReferenceRow& row);
ColorimetricFeatures to_colorimetry(const ReferenceRow& row);

}  // namespace erythro
