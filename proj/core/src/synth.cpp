#include "erythro/synth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "erythro/error.hpp"

namespace erythro {

namespace {

constexpr double kPi = std::numbers::pi;

double deg2rad(double deg) { return deg * kPi / 180.0; }

struct Vec {
  double x;
  double y;
};

double cross(Vec o, Vec a, Vec b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

bool in_triangle(Vec p, Vec a, Vec b, Vec c) {
  const double d1 = cross(a, b, p);
  const double d2 = cross(b, c, p);
  const double d3 = cross(c, a, p);
  const bool neg = d1 < 0 || d2 < 0 || d3 < 0;
  const bool pos = d1 > 0 || d2 > 0 || d3 > 0;
  return !(neg && pos);
}

// Area of the intersection of two disks at centre distance d.
double lens_area(double r1, double r2, double d) {
  if (d >= r1 + r2) return 0.0;
  if (d <= std::abs(r1 - r2)) return kPi * std::pow(std::min(r1, r2), 2);
  const double a1 = std::acos((d * d + r1 * r1 - r2 * r2) / (2 * d * r1));
  const double a2 = std::acos((d * d + r2 * r2 - r1 * r1) / (2 * d * r2));
  const double k = std::sqrt((-d + r1 + r2) * (d + r1 - r2) * (d - r1 + r2) * (d + r1 + r2));
  return r1 * r1 * a1 + r2 * r2 * a2 - 0.5 * k;
}

void require_positive(double v, const char* name) {
  if (!(v > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, std::string(name) + " must be positive");
  }
}

enum class Region { Outside, Body, Pallor };

class ShapeModel {
 public:
  explicit ShapeModel(const ShapeSpec& spec) : s_(spec) {
    cx_ = spec.center_x < 0 ? (spec.canvas_width - 1) / 2.0 : spec.center_x;
    cy_ = spec.center_y < 0 ? (spec.canvas_height - 1) / 2.0 : spec.center_y;
    rot_ = deg2rad(spec.rotation_deg);
    validate();
    if (s_.kind == ShapeKind::Star) build_spikes();
  }

  Region classify(int x, int y) const {
    const double dx = x - cx_;
    const double dy = y - cy_;
    switch (s_.kind) {
      case ShapeKind::Disk:
      case ShapeKind::Annulus: {
        const double d2 = dx * dx + dy * dy;
        if (d2 > s_.radius * s_.radius) return Region::Outside;
        return d2 <= s_.pallor_radius * s_.pallor_radius && s_.pallor_radius > 0
                   ? Region::Pallor
                   : Region::Body;
      }
      case ShapeKind::Ellipse: {
        const double u = dx * std::cos(rot_) + dy * std::sin(rot_);
        const double v = -dx * std::sin(rot_) + dy * std::cos(rot_);
        const double q = u * u / (s_.semi_major * s_.semi_major) +
                         v * v / (s_.semi_minor * s_.semi_minor);
        if (q > 1.0) return Region::Outside;
        const double k2 = s_.pallor_scale * s_.pallor_scale;
        return s_.pallor_scale > 0 && q <= k2 ? Region::Pallor : Region::Body;
      }
      case ShapeKind::Crescent: {
        if (dx * dx + dy * dy > s_.radius * s_.radius) return Region::Outside;
        const double bx = dx - s_.bite_offset * std::cos(rot_);
        const double by = dy - s_.bite_offset * std::sin(rot_);
        return bx * bx + by * by <= s_.bite_radius * s_.bite_radius ? Region::Outside
                                                                     : Region::Body;
      }
      case ShapeKind::Star: {
        if (dx * dx + dy * dy <= s_.radius * s_.radius) return Region::Body;
        const Vec p{dx, dy};
        for (const auto& t : spikes_) {
          if (in_triangle(p, t[0], t[1], t[2])) return Region::Body;
        }
        return Region::Outside;
      }
    }
    return Region::Outside;
  }

 private:
  void validate() const {
    double half_w = 0.0;
    double half_h = 0.0;
    switch (s_.kind) {
      case ShapeKind::Disk:
        require_positive(s_.radius, "radius");
        if (s_.pallor_radius < 0 || s_.pallor_radius >= s_.radius) {
          throw Error(ErrorCode::InvalidArgument, "pallor_radius must be in [0, radius)");
        }
        half_w = half_h = s_.radius;
        break;
      case ShapeKind::Annulus:
        require_positive(s_.radius, "radius");
        require_positive(s_.pallor_radius, "pallor_radius");
        if (s_.pallor_radius >= s_.radius) {
          throw Error(ErrorCode::InvalidArgument, "pallor_radius must be below radius");
        }
        half_w = half_h = s_.radius;
        break;
      case ShapeKind::Ellipse: {
        require_positive(s_.semi_major, "semi_major");
        require_positive(s_.semi_minor, "semi_minor");
        if (s_.pallor_scale < 0 || s_.pallor_scale >= 1) {
          throw Error(ErrorCode::InvalidArgument, "pallor_scale must be in [0, 1)");
        }
        const double c = std::cos(rot_);
        const double s = std::sin(rot_);
        half_w = std::hypot(s_.semi_major * c, s_.semi_minor * s);
        half_h = std::hypot(s_.semi_major * s, s_.semi_minor * c);
        break;
      }
      case ShapeKind::Crescent:
        require_positive(s_.radius, "radius");
        require_positive(s_.bite_radius, "bite_radius");
        require_positive(s_.bite_offset, "bite_offset");
        if (s_.bite_offset - s_.bite_radius >= s_.radius ||
            s_.bite_offset + s_.radius <= s_.bite_radius) {
          throw Error(ErrorCode::InvalidArgument, "bite must cut the disk without covering it");
        }
        half_w = half_h = s_.radius;
        break;
      case ShapeKind::Star:
        require_positive(s_.radius, "radius");
        require_positive(s_.spike_half_angle_deg, "spike_half_angle");
        if (s_.spike_radius <= s_.radius) {
          throw Error(ErrorCode::InvalidArgument, "spike_radius must exceed the core radius");
        }
        if (s_.spikes < 1 || s_.spikes > 64) {
          throw Error(ErrorCode::InvalidArgument, "spikes must be in 1..64");
        }
        half_w = half_h = s_.spike_radius;
        break;
    }
    if (s_.canvas_width <= 0 || s_.canvas_height <= 0) {
      throw Error(ErrorCode::InvalidArgument, "canvas dimensions must be positive");
    }
    const double m = kShapeMargin;
    if (cx_ - half_w < m || cy_ - half_h < m || cx_ + half_w > s_.canvas_width - 1 - m ||
        cy_ + half_h > s_.canvas_height - 1 - m) {
      throw Error(ErrorCode::ShapeOutOfCanvas,
                  std::string(to_string(s_.kind)) + " does not fit the " +
                      std::to_string(s_.canvas_width) + "x" + std::to_string(s_.canvas_height) +
                      " canvas with a " + std::to_string(kShapeMargin) + " px margin");
    }
  }

  void build_spikes() {
    const double half = deg2rad(s_.spike_half_angle_deg);
    for (int k = 0; k < s_.spikes; ++k) {
      const double phi = rot_ - kPi / 2 + 2 * kPi * k / s_.spikes;
      const Vec tip{s_.spike_radius * std::cos(phi), s_.spike_radius * std::sin(phi)};
      const Vec a{s_.radius * std::cos(phi - half), s_.radius * std::sin(phi - half)};
      const Vec b{s_.radius * std::cos(phi + half), s_.radius * std::sin(phi + half)};
      spikes_.push_back({a, tip, b});
    }
  }

  const ShapeSpec& s_;
  double cx_ = 0.0;
  double cy_ = 0.0;
  double rot_ = 0.0;
  std::vector<std::array<Vec, 3>> spikes_;
};

}  // namespace

std::string_view to_string(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::Disk: return "disk";
    case ShapeKind::Annulus: return "annulus";
    case ShapeKind::Ellipse: return "ellipse";
    case ShapeKind::Crescent: return "crescent";
    case ShapeKind::Star: return "star";
  }
  return "disk";
}

RasterImage render_shape(const ShapeSpec& spec) {
  const ShapeModel model(spec);
  std::vector<Rgb> pixels;
  pixels.reserve(static_cast<std::size_t>(spec.canvas_width) *
                 static_cast<std::size_t>(spec.canvas_height));
  for (int y = 0; y < spec.canvas_height; ++y) {
    for (int x = 0; x < spec.canvas_width; ++x) {
      switch (model.classify(x, y)) {
        case Region::Outside: pixels.push_back(spec.background); break;
        case Region::Body: pixels.push_back(spec.fill); break;
        case Region::Pallor: pixels.push_back(spec.pallor); break;
      }
    }
  }
  return RasterImage(spec.canvas_width, spec.canvas_height, std::move(pixels));
}

double analytic_area(const ShapeSpec& spec) {
  switch (spec.kind) {
    case ShapeKind::Disk:
    case ShapeKind::Annulus:
      return kPi * spec.radius * spec.radius;
    case ShapeKind::Ellipse:
      return kPi * spec.semi_major * spec.semi_minor;
    case ShapeKind::Crescent:
      return kPi * spec.radius * spec.radius -
             lens_area(spec.radius, spec.bite_radius, spec.bite_offset);
    case ShapeKind::Star: {
      const double r = spec.radius;
      const double a = deg2rad(spec.spike_half_angle_deg);
      const double triangle = r * std::sin(a) * (spec.spike_radius - r * std::cos(a));
      const double segment = 0.5 * r * r * (2 * a - std::sin(2 * a));
      return kPi * r * r + spec.spikes * (triangle - segment);
    }
  }
  return 0.0;
}

}  // namespace erythro
