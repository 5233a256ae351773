#include "erythro/morphometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <numbers>
#include <vector>

#include "erythro/error.hpp"

namespace erythro {

namespace {

void require_nonempty(const BinaryMask& cell, const char* what) {
  if (cell.count() == 0) throw Error(ErrorCode::EmptyMask, std::string(what) + ": empty mask");
}

struct Point {
  long long x;
  long long y;
};

long long cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Andrew's monotone chain; counter-clockwise, collinear points dropped.
std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(),
            [](const Point& a, const Point& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  if (pts.size() < 3) return pts;
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
  return cross(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool inside_hull(const std::vector<Point>& hull, const Point& p) {
  if (hull.size() == 1) return hull[0].x == p.x && hull[0].y == p.y;
  if (hull.size() == 2) return on_segment(hull[0], hull[1], p);
  for (std::size_t i = 0; i < hull.size(); ++i) {
    if (cross(hull[i], hull[(i + 1) % hull.size()], p) < 0) return false;
  }
  return true;
}

}  // namespace

std::size_t compute_area(const BinaryMask& cell) { return cell.count(); }

std::size_t compute_perimeter(const BinaryMask& cell) {
  require_nonempty(cell, "perimeter");
  std::size_t boundary = 0;
  for (int y = 0; y < cell.height(); ++y) {
    for (int x = 0; x < cell.width(); ++x) {
      if (!cell.at(x, y)) continue;
      if (!cell.get(x - 1, y) || !cell.get(x + 1, y) || !cell.get(x, y - 1) ||
          !cell.get(x, y + 1)) {
        ++boundary;
      }
    }
  }
  return boundary;
}

double compute_compactness(std::size_t area, std::size_t perimeter) {
  if (perimeter == 0) throw Error(ErrorCode::ZeroPerimeter, "compactness with zero perimeter");
  const double p = static_cast<double>(perimeter);
  return 4.0 * std::numbers::pi * static_cast<double>(area) / (p * p);
}

Barycenter compute_barycenter(const BinaryMask& cell) {
  require_nonempty(cell, "barycenter");
  double sx = 0.0;
  double sy = 0.0;
  std::size_t n = 0;
  for (int y = 0; y < cell.height(); ++y) {
    for (int x = 0; x < cell.width(); ++x) {
      if (!cell.at(x, y)) continue;
      sx += x;
      sy += y;
      ++n;
    }
  }
  return {sx / static_cast<double>(n), sy / static_cast<double>(n)};
}

double barycentric_semi_chord(const BinaryMask& cell, const Barycenter& bc, double theta_rad,
                              double step) {
  const double dx = std::cos(theta_rad);
  const double dy = std::sin(theta_rad);
  const double reach = std::hypot(cell.width(), cell.height()) + 1.0;
  const long long k_max = static_cast<long long>(std::ceil(reach / step));
  long long hits = 0;
  for (long long k = -k_max; k <= k_max; ++k) {
    const double t = static_cast<double>(k) * step;
    const int px = static_cast<int>(std::floor(bc.cx + t * dx + 0.5));
    const int py = static_cast<int>(std::floor(bc.cy + t * dy + 0.5));
    if (cell.get(px, py)) ++hits;
  }
  return 0.5 * static_cast<double>(hits) * step;
}

Axes compute_axes(const BinaryMask& cell, const Barycenter& bc, const MorphometryParams& params) {
  require_nonempty(cell, "axes");
  const int directions = std::max(1, static_cast<int>(std::lround(180.0 / params.angle_step_deg)));
  Axes axes;
  axes.major = 0.0;
  axes.minor = std::numeric_limits<double>::infinity();
  for (int i = 0; i < directions; ++i) {
    const double theta = i * params.angle_step_deg * std::numbers::pi / 180.0;
    const double semi = barycentric_semi_chord(cell, bc, theta, params.radial_step_px);
    axes.major = std::max(axes.major, semi);
    axes.minor = std::min(axes.minor, semi);
  }
  axes.spacing = axes.major - axes.minor;
  return axes;
}

std::size_t convex_hull_area(const BinaryMask& cell) {
  require_nonempty(cell, "convex hull");
  std::vector<Point> pts;
  long long min_x = cell.width(), max_x = -1, min_y = cell.height(), max_y = -1;
  for (int y = 0; y < cell.height(); ++y) {
    for (int x = 0; x < cell.width(); ++x) {
      if (!cell.at(x, y)) continue;
      // Only row extremes can be hull vertices.
      const bool left = !cell.get(x - 1, y);
      const bool right = !cell.get(x + 1, y);
      if (left || right) pts.push_back({x, y});
      min_x = std::min<long long>(min_x, x);
      max_x = std::max<long long>(max_x, x);
      min_y = std::min<long long>(min_y, y);
      max_y = std::max<long long>(max_y, y);
    }
  }
  const auto hull = convex_hull(std::move(pts));
  std::size_t filled = 0;
  for (long long y = min_y; y <= max_y; ++y) {
    for (long long x = min_x; x <= max_x; ++x) {
      if (inside_hull(hull, {x, y})) ++filled;
    }
  }
  return filled;
}

int compute_convexity(const BinaryMask& cell, const MorphometryParams& params) {
  const double hull = static_cast<double>(convex_hull_area(cell));
  const double area = static_cast<double>(cell.count());
  return (hull - area) / hull > params.convexity_tolerance ? 1 : 0;
}

ConcavityWindow concavity_window(const BinaryMask& cell, const Barycenter& bc) {
  require_nonempty(cell, "concavity window");
  double farthest_sq = 0.0;
  for (int y = 0; y < cell.height(); ++y) {
    for (int x = 0; x < cell.width(); ++x) {
      if (!cell.at(x, y)) continue;
      const double dx = x - bc.cx;
      const double dy = y - bc.cy;
      farthest_sq = std::max(farthest_sq, dx * dx + dy * dy);
    }
  }

  ConcavityWindow win;
  win.farthest_distance = std::sqrt(farthest_sq);
  // Corners of the square sit on the circle through the farthest point.
  win.half_side = win.farthest_distance / std::numbers::sqrt2;
  win.x0 = static_cast<int>(std::ceil(bc.cx - win.half_side - 1e-9));
  win.y0 = static_cast<int>(std::ceil(bc.cy - win.half_side - 1e-9));
  const int x1 = static_cast<int>(std::floor(bc.cx + win.half_side + 1e-9));
  const int y1 = static_cast<int>(std::floor(bc.cy + win.half_side + 1e-9));
  const int w = std::max(0, x1 - win.x0 + 1);
  const int h = std::max(0, y1 - win.y0 + 1);

  BinaryMask outside(w, h);
  for (int j = 0; j < h; ++j) {
    for (int i = 0; i < w; ++i) outside.set(i, j, !cell.get(win.x0 + i, win.y0 + j));
  }
  win.complement = label_components_8(outside);
  return win;
}

int concavity_components(const BinaryMask& cell, const Barycenter& bc,
                         const MorphometryParams& params) {
  const ConcavityWindow win = concavity_window(cell, bc);
  int significant = 0;
  for (int k = 1; k <= win.complement.component_count(); ++k) {
    if (win.complement.component_sizes[static_cast<std::size_t>(k)] >=
        params.concavity_min_component) {
      ++significant;
    }
  }
  return significant;
}

MorphometricFeatures compute_morphometry(const BinaryMask& cell, double concavity_gate,
                                         const MorphometryParams& params) {
  MorphometricFeatures f;
  f.area = compute_area(cell);
  f.perimeter = compute_perimeter(cell);
  f.compactness = compute_compactness(f.area, f.perimeter);
  f.barycenter = compute_barycenter(cell);
  const Axes axes = compute_axes(cell, f.barycenter, params);
  f.major_axis = axes.major;
  f.minor_axis = axes.minor;
  f.axis_spacing = axes.spacing;
  f.varconvex = compute_convexity(cell, params);
  if (f.compactness < concavity_gate || f.varconvex == 1) {
    f.ncc = concavity_components(cell, f.barycenter, params);
  }
  return f;
}

}  // namespace erythro
