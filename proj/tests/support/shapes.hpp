#pragma once

// Canonical synthetic cells shared by the synth, pipeline, CLI, service and
// acceptance suites.

#include <vector>

#include "erythro/classifier.hpp"
#include "erythro/raster.hpp"
#include "erythro/synth.hpp"

namespace shapes {

inline erythro::ShapeSpec healthy_disk() {
  erythro::ShapeSpec s;
  s.kind = erythro::ShapeKind::Disk;
  s.radius = 38;
  s.pallor_radius = 13;  // 169 / 1444 = 11.7 % pallor
  return s;
}

inline erythro::ShapeSpec annulus() {
  erythro::ShapeSpec s;
  s.kind = erythro::ShapeKind::Annulus;
  s.radius = 34;
  s.pallor_radius = 20;  // 400 / 1156 = 34.6 % pallor
  return s;
}

inline erythro::ShapeSpec ellipse() {
  erythro::ShapeSpec s;
  s.kind = erythro::ShapeKind::Ellipse;
  s.canvas_width = 130;
  s.canvas_height = 80;
  s.semi_major = 52;
  s.semi_minor = 26;
  s.pallor_scale = 0.4;
  return s;
}

inline erythro::ShapeSpec crescent() {
  erythro::ShapeSpec s;
  s.kind = erythro::ShapeKind::Crescent;
  s.radius = 30;
  s.bite_radius = 26;
  s.bite_offset = 12;
  return s;
}

inline erythro::ShapeSpec star() {
  erythro::ShapeSpec s;
  s.kind = erythro::ShapeKind::Star;
  s.radius = 26;
  s.spike_radius = 42;
  s.spikes = 5;
  s.spike_half_angle_deg = 12;
  return s;
}

struct Case {
  const char* name;
  erythro::ShapeSpec spec;
  erythro::ErythrocyteClass expected;
};

inline std::vector<Case> all() {
  using erythro::ErythrocyteClass;
  return {{"disk", healthy_disk(), ErythrocyteClass::Healthy},
          {"annulus", annulus(), ErythrocyteClass::Annulocyte},
          {"ellipse", ellipse(), ErythrocyteClass::Elliptocyte},
          {"crescent", crescent(), ErythrocyteClass::Sickle},
          {"star", star(), ErythrocyteClass::Acanthocyte}};
}

inline erythro::Roi whole(const erythro::ShapeSpec& s) {
  return {0, 0, s.canvas_width, s.canvas_height};
}

}  // namespace shapes
