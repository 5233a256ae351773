#include "erythro/classifier.hpp"

#include <array>
#include <cstdio>

#include "erythro/error.hpp"

namespace erythro {

namespace {

template <typename... Args>
std::string fmt(const char* pattern, Args... args) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), pattern, args...);
  return buf;
}

Classification finish(Classification c, ErythrocyteClass label) {
  c.label = label;
  c.trace.push_back("label: " + std::string(to_string(label)));
  return c;
}

}  // namespace

std::string_view to_string(ErythrocyteClass label) {
  switch (label) {
    case ErythrocyteClass::Healthy: return "Healthy";
    case ErythrocyteClass::Annulocyte: return "Annulocyte";
    case ErythrocyteClass::Sickle: return "Sickle";
    case ErythrocyteClass::Acanthocyte: return "Acanthocyte";
    case ErythrocyteClass::Elliptocyte: return "Elliptocyte";
    case ErythrocyteClass::Indeterminate: return "Indeterminate";
  }
  return "Indeterminate";
}

std::optional<ErythrocyteClass> parse_class(std::string_view name) {
  constexpr std::array all = {ErythrocyteClass::Healthy,     ErythrocyteClass::Annulocyte,
                              ErythrocyteClass::Sickle,      ErythrocyteClass::Acanthocyte,
                              ErythrocyteClass::Elliptocyte, ErythrocyteClass::Indeterminate};
  for (auto c : all) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

void ClassificationThresholds::validate() const {
  if (compactness_gate <= 0 || spacing_gate <= 0 || healthy_white_min <= 0 ||
      healthy_white_max <= 0 || annulocyte_white_min <= 0 || sickle_red_min <= 0 ||
      ncc_sickle <= 0) {
    throw Error(ErrorCode::InvalidArgument, "classification thresholds must be positive");
  }
  if (healthy_white_min > healthy_white_max) {
    throw Error(ErrorCode::InvalidArgument, "healthy white band is inverted");
  }
  if (healthy_white_max >= annulocyte_white_min) {
    throw Error(ErrorCode::InvalidArgument,
                "healthy white band must end below the annulocyte minimum");
  }
}

Classification classify(const MorphometricFeatures& morpho, const ColorimetricFeatures& color,
                        const ClassificationThresholds& th) {
  Classification c;

  if (morpho.compactness >= th.compactness_gate) {
    c.trace.push_back(fmt("compactness %.2f >= %.2f: round or oval outline", morpho.compactness,
                          th.compactness_gate));
    if (morpho.axis_spacing > th.spacing_gate) {
      c.trace.push_back(fmt("axis spacing %.2f px > %.2f px: elliptical", morpho.axis_spacing,
                            th.spacing_gate));
      if (color.pct_white >= th.annulocyte_white_min) {
        c.trace.push_back(fmt("white %.2f%% >= %.2f%%: annulocyte-like pallor also present",
                              color.pct_white, th.annulocyte_white_min));
      }
      return finish(std::move(c), ErythrocyteClass::Elliptocyte);
    }
    c.trace.push_back(fmt("axis spacing %.2f px <= %.2f px: circular", morpho.axis_spacing,
                          th.spacing_gate));

    if (color.pct_white >= th.healthy_white_min && color.pct_white <= th.healthy_white_max) {
      c.trace.push_back(fmt("white %.2f%% within healthy band [%.2f%%, %.2f%%]", color.pct_white,
                            th.healthy_white_min, th.healthy_white_max));
      return finish(std::move(c), ErythrocyteClass::Healthy);
    }
    if (color.pct_white >= th.annulocyte_white_min) {
      c.trace.push_back(fmt("white %.2f%% >= %.2f%%: enlarged central pallor", color.pct_white,
                            th.annulocyte_white_min));
      return finish(std::move(c), ErythrocyteClass::Annulocyte);
    }
    if (color.pct_white > th.healthy_white_max) {
      c.trace.push_back(fmt("white %.2f%% between healthy max %.2f%% and annulocyte min: "
                            "hypochromic tendency",
                            color.pct_white, th.healthy_white_max));
    } else {
      c.trace.push_back(fmt("white %.2f%% below healthy min %.2f%%: pallor reduced",
                            color.pct_white, th.healthy_white_min));
    }
    return finish(std::move(c), ErythrocyteClass::Indeterminate);
  }

  c.trace.push_back(fmt("compactness %.2f < %.2f: non-convex outline, concavity test",
                        morpho.compactness, th.compactness_gate));
  if (!morpho.ncc) {
    c.trace.push_back("concavity component count unavailable");
    return finish(std::move(c), ErythrocyteClass::Indeterminate);
  }
  const int ncc = *morpho.ncc;
  if (ncc == th.ncc_sickle) {
    c.trace.push_back("NCC " + std::to_string(ncc) + " == " + std::to_string(th.ncc_sickle) +
                      ": falciform");
    if (color.pct_red >= th.sickle_red_min) {
      c.trace.push_back(fmt("red %.2f%% >= %.2f%% corroborates sickle", color.pct_red,
                            th.sickle_red_min));
    } else {
      c.trace.push_back(fmt("red %.2f%% < %.2f%%: colour does not corroborate sickle",
                            color.pct_red, th.sickle_red_min));
    }
    return finish(std::move(c), ErythrocyteClass::Sickle);
  }
  if (ncc > th.ncc_sickle) {
    c.trace.push_back("NCC " + std::to_string(ncc) + " > " + std::to_string(th.ncc_sickle) +
                      ": spiculated");
    return finish(std::move(c), ErythrocyteClass::Acanthocyte);
  }
  c.trace.push_back("NCC " + std::to_string(ncc) + " < " + std::to_string(th.ncc_sickle) +
                    ": no concavity pattern");
  return finish(std::move(c), ErythrocyteClass::Indeterminate);
}

}  // namespace erythro
