#pragma once

#include <cstddef>
#include <optional>

#include "erythro/mask.hpp"
#include "erythro/segmentation.hpp"

namespace erythro {

struct Barycenter {
  double cx = 0.0;
  double cy = 0.0;

  friend bool operator==(const Barycenter&, const Barycenter&) = default;
};

struct Axes {
  double major = 0.0;
  double minor = 0.0;
  double spacing = 0.0;
};

struct MorphometricFeatures {
  std::size_t area = 0;
  std::size_t perimeter = 0;
  double compactness = 0.0;
  Barycenter barycenter;
  double major_axis = 0.0;
  double minor_axis = 0.0;
  double axis_spacing = 0.0;
  int varconvex = 0;
  /// Concavity component count; set only when the concavity test ran.
  std::optional<int> ncc;

  friend bool operator==(const MorphometricFeatures&,
                         const MorphometricFeatures&) = default;
};

/// Tunables of the digital shape measures. Defaults are the calibrated values.
struct MorphometryParams {
  double angle_step_deg = 1.0;
  double radial_step_px = 0.5;
  double convexity_tolerance = 0.08;  // hull deficiency above which varconvex = 1
  std::size_t concavity_min_component = 20;
};

std::size_t compute_area(const BinaryMask& cell);

/// Foreground pixels with a 4-neighbour that is background or off-grid.
/// Throws EmptyMask.
std::size_t compute_perimeter(const BinaryMask& cell);

/// 4*pi*area / perimeter^2. Throws ZeroPerimeter.
double compute_compactness(std::size_t area, std::size_t perimeter);

/// Mean foreground coordinate. May fall outside the foreground for concave
/// shapes. Throws EmptyMask.
Barycenter compute_barycenter(const BinaryMask& cell);

/// Half-length of the foreground chord through `bc` in direction `theta_rad`.
/// The line is sampled every `step` pixels in both directions up to the grid
/// diagonal; each sample landing on a foreground pixel contributes `step`.
double barycentric_semi_chord(const BinaryMask& cell, const Barycenter& bc,
                              double theta_rad, double step = 0.5);

/// Largest and smallest barycentric semi-chords over [0, 180) degrees.
/// Throws EmptyMask.
Axes compute_axes(const BinaryMask& cell, const Barycenter& bc,
                  const MorphometryParams& params = {});

/// Pixel count of the filled convex hull of the foreground pixel centres
/// (every pixel whose centre lies inside or on the hull). Throws EmptyMask.
std::size_t convex_hull_area(const BinaryMask& cell);

/// 1 when (hull_area - area) / hull_area exceeds the tolerance, else 0.
int compute_convexity(const BinaryMask& cell, const MorphometryParams& params = {});

/// Square window used by the concavity test and the labelled complement of
/// the cell inside it.
struct ConcavityWindow {
  int x0 = 0;  // window origin in mask coordinates (may be negative)
  int y0 = 0;
  double farthest_distance = 0.0;
  double half_side = 0.0;
  /// Labels over the window's pixel grid (complement.width x
  /// complement.height); cell pixels are 0. Off-mask pixels count as
  /// complement.
  LabelMap complement;
};

/// Builds the square centred on `bc` whose corners reach the farthest
/// foreground pixel (half-side = d / sqrt(2)) and labels window-minus-cell in
/// 8-connectivity. Throws EmptyMask.
ConcavityWindow concavity_window(const BinaryMask& cell, const Barycenter& bc);

/// Number of complement components in the concavity window with at least
/// `concavity_min_component` pixels.
int concavity_components(const BinaryMask& cell, const Barycenter& bc,
                         const MorphometryParams& params = {});

/// All descriptors. The concavity test runs when compactness is below
/// `concavity_gate` or the shape reads as non-convex.
MorphometricFeatures compute_morphometry(const BinaryMask& cell,
                                         double concavity_gate = 0.8,
                                         const MorphometryParams& params = {});

}  // namespace erythro
