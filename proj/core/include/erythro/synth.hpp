#pragma once

#include <string_view>

#include "erythro/raster.hpp"

namespace erythro {

enum class ShapeKind { Disk, Annulus, Ellipse, Crescent, Star };

std::string_view to_string(ShapeKind kind);

/// Parameters for a procedurally rendered cell. Lengths are in pixels.
/// Which fields apply depends on `kind`:
///   disk      radius, optional pallor_radius
///   annulus   radius, pallor_radius (required)
///   ellipse   semi_major, semi_minor, optional pallor_scale
///   crescent  radius, bite_radius, bite_offset (bite centre on +x)
///   star      radius (core), spike_radius (tips), spikes, spike_half_angle_deg
struct ShapeSpec {
  ShapeKind kind = ShapeKind::Disk;
  int canvas_width = 120;
  int canvas_height = 120;
  // Centre defaults to the canvas centre when negative.
  double center_x = -1.0;
  double center_y = -1.0;

  double radius = 38.0;
  double pallor_radius = 0.0;
  double semi_major = 26.0;
  double semi_minor = 13.0;
  double pallor_scale = 0.0;
  double bite_radius = 26.0;
  double bite_offset = 12.0;
  double spike_radius = 42.0;
  int spikes = 5;
  double spike_half_angle_deg = 12.0;
  double rotation_deg = 0.0;

  Rgb fill{255, 222, 219};
  Rgb pallor{250, 250, 250};
  Rgb background{242, 242, 242};
};

inline constexpr int kShapeMargin = 5;

/// A pixel belongs to the shape iff its centre satisfies the shape's
/// inequality. Throws ShapeOutOfCanvas when the shape's extent plus the
/// margin leaves the canvas, InvalidArgument for non-positive sizes.
RasterImage render_shape(const ShapeSpec& spec);

/// Analytic foreground area of the shape (ignores pallor).
double analytic_area(const ShapeSpec& spec);

}  // namespace erythro
