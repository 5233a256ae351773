#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "cli.hpp"
#include "erythro/classifier.hpp"
#include "erythro/morphometry.hpp"
#include "erythro/reference_tables.hpp"

namespace erythro::cli {

namespace {

void line(std::ostream& out, bool ok, const std::string& what) {
  out << (ok ? "PASS " : "FAIL ") << what << '\n';
}

}  // namespace

bool run_selftest(std::ostream& out) {
  bool all = true;
  const ClassificationThresholds defaults;
  for (const ReferenceRow& row : reference_rows()) {
    const auto got = classify(to_morphometry(row), to_colorimetry(row), defaults).label;
    const bool ok = got == row.expected;
    all = all && ok;
    line(out, ok,
         "classify " + std::string(row.group) + " " + std::string(row.id) + " -> " +
             std::string(to_string(got)) + " (expected " + std::string(to_string(row.expected)) +
             ")");
  }

  // Printed compactness must follow from the printed area and perimeter.
  struct Check {
    std::size_t area;
    std::size_t perimeter;
    double printed;
    const char* name;
  };
  for (const Check& c : {Check{4472, 215, 1.22, "healthy H1"}, Check{3791, 300, 0.53, "sickle H3"}}) {
    const double value = compute_compactness(c.area, c.perimeter);
    const bool ok = std::abs(value - c.printed) <= 0.01;
    all = all && ok;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "compactness %s 4*pi*%zu/%zu^2 = %.4f vs %.2f", c.name, c.area,
                  c.perimeter, value, c.printed);
    line(out, ok, buf);
  }
  out << (all ? "selftest passed" : "selftest FAILED") << '\n';
  return all;
}

}  // namespace erythro::cli
