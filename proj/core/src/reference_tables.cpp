#include "erythro/reference_tables.hpp"

#include <array>

namespace erythro {

namespace {

using C = ErythrocyteClass;

// Published per-cell measurements. The sickle H2 white percentage is printed
// as "0.8.20"; 8.20 is the value consistent with its 91.8 % red.
constexpr std::array<ReferenceRow, 16> kRows = {{
    // group, id, red, white, colour, area(c), %white, %red, compactness, area, perimeter,
    // minor, major, spacing, varconvex, ncc, class
    {"healthy", "H1", 3889, 583, {255, 222, 219}, 4472, 13.03, 86.94, 1.22, 4472, 215, 35.36, 39.22, 3.86, 0, std::nullopt, C::Healthy},
    {"healthy", "H2", 4321, 618, {255, 222, 219}, 4939, 12.51, 87.49, 1.20, 4939, 231, 37.40, 41.04, 3.63, 0, std::nullopt, C::Healthy},
    {"healthy", "H3", 4054, 643, {255, 222, 219}, 4697, 13.69, 86.31, 1.13, 4697, 228, 35.33, 41.74, 6.41, 0, std::nullopt, C::Healthy},
    {"healthy", "H4", 4253, 469, {255, 222, 219}, 4722, 10.00, 90.00, 1.20, 4722, 224, 37.02, 39.73, 2.71, 0, std::nullopt, C::Healthy},
    {"annulocyte", "H1", 2385, 1186, {255, 232, 221}, 3571, 33.26, 66.79, 0.93, 3571, 219, 30.63, 35.27, 4.64, 0, std::nullopt, C::Annulocyte},
    {"annulocyte", "H2", 1913, 1597, {255, 232, 221}, 3510, 45.50, 54.50, 1.05, 3510, 205, 30.87, 34.82, 3.95, 0, std::nullopt, C::Annulocyte},
    {"annulocyte", "H3", 2341, 1248, {255, 232, 221}, 3589, 34.77, 65.23, 0.91, 3589, 222, 29.92, 36.44, 6.52, 0, std::nullopt, C::Annulocyte},
    {"annulocyte", "H4", 2021, 1525, {255, 232, 221}, 3546, 43.00, 57.00, 1.04, 3546, 207, 29.51, 36.14, 6.63, 0, std::nullopt, C::Annulocyte},
    {"sickle", "H1", 2022, 15, {253, 214, 204}, 2037, 0.73, 99.27, 0.67, 2037, 195, 8.49, 40.49, 32.00, 1, 2, C::Sickle},
    {"sickle", "H2", 3547, 291, {255, 213, 206}, 3838, 8.20, 91.8, 0.76, 3838, 252, 12.21, 47.40, 35.19, 1, 2, C::Sickle},
    {"sickle", "H3", 3789, 2, {255, 218, 215}, 3791, 0.05, 99.95, 0.53, 3791, 300, 10.24, 45.93, 35.69, 1, 2, C::Sickle},
    {"acanthocyte", "H1", 6489, 0, {254, 222, 229}, 6489, 0.0, 100.0, 0.57, 6954, 378, 24.41, 66.43, 42.02, 1, 4, C::Acanthocyte},
    {"acanthocyte", "H2", 5785, 0, {254, 222, 229}, 5785, 0.0, 100.0, 0.78, 5785, 306, 30.30, 51.58, 21.28, 1, 6, C::Acanthocyte},
    {"elliptocyte", "H1", 2297, 1628, {255, 233, 228}, 3925, 41.45, 58.55, 0.90, 3925, 236, 23.29, 52.64, 29.36, 0, std::nullopt, C::Elliptocyte},
    {"elliptocyte", "H2", 3637, 771, {255, 233, 228}, 4408, 17.50, 82.50, 1.09, 4408, 225, 28.51, 53.51, 25.00, 0, std::nullopt, C::Elliptocyte},
    {"elliptocyte", "H3", 3449, 784, {255, 233, 228}, 4233, 18.52, 81.48, 1.02, 4233, 228, 25.00, 51.60, 26.60, 0, std::nullopt, C::Elliptocyte},
}};

}  // namespace

std::span<const ReferenceRow> reference_rows() { return kRows; }

MorphometricFeatures to_morphometry(const ReferenceRow& row) {
  MorphometricFeatures f;
  f.area = row.area;
  f.perimeter = row.perimeter;
  f.compactness = row.compactness;
  f.major_axis = row.major_axis;
  f.minor_axis = row.minor_axis;
  f.axis_spacing = row.axis_spacing;
  f.varconvex = row.varconvex;
  f.ncc = row.ncc;
  return f;
}

ColorimetricFeatures to_colorimetry(const ReferenceRow& row) {
  ColorimetricFeatures f;
  f.red_count = row.red_count;
  f.white_count = row.white_count;
  f.pct_red = row.pct_red;
  f.pct_white = row.pct_white;
  f.mean_color = row.mean_color;
  f.uniform_cell = row.white_count == 0;
  return f;
}

}  // namespace erythro
