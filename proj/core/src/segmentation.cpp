#include "erythro/segmentation.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <string>

#include "erythro/error.hpp"

namespace erythro {

namespace {

constexpr std::array<PixelCoord, 8> kNeighbours8 = {{
    {-1, -1}, {0, -1}, {1, -1}, {-1, 0}, {1, 0}, {-1, 1}, {0, 1}, {1, 1},
}};
constexpr std::array<PixelCoord, 4> kNeighbours4 = {{{0, -1}, {-1, 0}, {1, 0}, {0, 1}}};

template <std::size_t N>
LabelMap label_components(const BinaryMask& mask,
                          const std::array<PixelCoord, N>& neighbours) {
  LabelMap out;
  out.width = mask.width();
  out.height = mask.height();
  out.labels.assign(mask.size(), 0);
  out.component_sizes.assign(1, 0);

  const int w = mask.width();
  const int h = mask.height();
  auto idx = [w](int x, int y) {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(w) +
           static_cast<std::size_t>(x);
  };

  std::deque<PixelCoord> queue;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!mask.at(x, y) || out.labels[idx(x, y)] != 0) continue;
      const int label = static_cast<int>(out.component_sizes.size());
      std::size_t size = 0;
      out.labels[idx(x, y)] = label;
      queue.push_back({x, y});
      while (!queue.empty()) {
        const PixelCoord p = queue.front();
        queue.pop_front();
        ++size;
        for (const PixelCoord& d : neighbours) {
          const int nx = p.x + d.x;
          const int ny = p.y + d.y;
          if (!mask.get(nx, ny) || out.labels[idx(nx, ny)] != 0) continue;
          out.labels[idx(nx, ny)] = label;
          queue.push_back({nx, ny});
        }
      }
      out.component_sizes.push_back(size);
    }
  }
  return out;
}

std::vector<bool> border_touching(const LabelMap& labels) {
  std::vector<bool> touches(labels.component_sizes.size(), false);
  for (int x = 0; x < labels.width; ++x) {
    touches[static_cast<std::size_t>(labels.at(x, 0))] = true;
    touches[static_cast<std::size_t>(labels.at(x, labels.height - 1))] = true;
  }
  for (int y = 0; y < labels.height; ++y) {
    touches[static_cast<std::size_t>(labels.at(0, y))] = true;
    touches[static_cast<std::size_t>(labels.at(labels.width - 1, y))] = true;
  }
  return touches;
}

void require_same_size(const GrayImage& img, const BinaryMask& mask) {
  if (img.width() != mask.width() || img.height() != mask.height()) {
    throw Error(ErrorCode::DimensionMismatch, "mask and image dimensions differ");
  }
}

}  // namespace

GrayHistogram GrayHistogram::of_masked(const GrayImage& img, const BinaryMask& mask) {
  require_same_size(img, mask);
  GrayHistogram hist;
  const auto values = img.values();
  const auto bits = mask.bits();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (bits[i]) {
      ++hist.counts[values[i]];
      ++hist.total;
    }
  }
  return hist;
}

int GrayHistogram::occupied_bins() const noexcept {
  return static_cast<int>(
      std::count_if(counts.begin(), counts.end(), [](std::uint64_t c) { return c > 0; }));
}

GrayHistogram gray_histogram(const GrayImage& img) {
  if (img.empty()) throw Error(ErrorCode::EmptyImage, "histogram of an empty image");
  GrayHistogram hist;
  for (std::uint8_t v : img.values()) ++hist.counts[v];
  hist.total = img.values().size();
  return hist;
}

OtsuStats otsu_stats_at(const GrayHistogram& hist, int threshold) {
  if (threshold < 0 || threshold > 254) {
    throw Error(ErrorCode::InvalidArgument, "threshold must be in 0..254");
  }
  std::uint64_t n1 = 0;
  std::uint64_t s1 = 0;
  std::uint64_t n = 0;
  std::uint64_t s = 0;
  for (int v = 0; v < 256; ++v) {
    const auto c = hist.counts[static_cast<std::size_t>(v)];
    n += c;
    s += c * static_cast<std::uint64_t>(v);
    if (v <= threshold) {
      n1 += c;
      s1 += c * static_cast<std::uint64_t>(v);
    }
  }
  const std::uint64_t n2 = n - n1;
  if (n1 == 0 || n2 == 0) {
    throw Error(ErrorCode::NoSeparation,
                "threshold " + std::to_string(threshold) + " leaves a class empty");
  }

  OtsuStats st;
  st.threshold = threshold;
  const double total = static_cast<double>(n);
  st.p1 = static_cast<double>(n1) / total;
  st.p2 = static_cast<double>(n2) / total;
  st.mu1 = static_cast<double>(s1) / static_cast<double>(n1);
  st.mu2 = static_cast<double>(s - s1) / static_cast<double>(n2);

  double ss1 = 0.0;
  double ss2 = 0.0;
  for (int v = 0; v < 256; ++v) {
    const double c = static_cast<double>(hist.counts[static_cast<std::size_t>(v)]);
    if (v <= threshold) {
      ss1 += c * (v - st.mu1) * (v - st.mu1);
    } else {
      ss2 += c * (v - st.mu2) * (v - st.mu2);
    }
  }
  st.var_within = (ss1 + ss2) / total;
  const double diff = st.mu1 - st.mu2;
  st.var_between = st.p1 * st.p2 * diff * diff;
  return st;
}

OtsuStats otsu_threshold(const GrayHistogram& hist) {
  if (hist.occupied_bins() < 2) {
    throw Error(ErrorCode::NoSeparation, "all pixels share a single gray level");
  }
  std::uint64_t n = 0;
  std::uint64_t s = 0;
  for (int v = 0; v < 256; ++v) {
    n += hist.counts[static_cast<std::size_t>(v)];
    s += hist.counts[static_cast<std::size_t>(v)] * static_cast<std::uint64_t>(v);
  }

  // Running integer sums keep the criterion bit-identical across empty bins,
  // so plateaus tie exactly and the first maximiser is kept.
  std::uint64_t n1 = 0;
  std::uint64_t s1 = 0;
  int best_t = -1;
  double best = -1.0;
  const double total = static_cast<double>(n);
  for (int t = 0; t < 255; ++t) {
    n1 += hist.counts[static_cast<std::size_t>(t)];
    s1 += hist.counts[static_cast<std::size_t>(t)] * static_cast<std::uint64_t>(t);
    const std::uint64_t n2 = n - n1;
    if (n1 == 0 || n2 == 0) continue;
    const double p1 = static_cast<double>(n1) / total;
    const double p2 = static_cast<double>(n2) / total;
    const double mu1 = static_cast<double>(s1) / static_cast<double>(n1);
    const double mu2 = static_cast<double>(s - s1) / static_cast<double>(n2);
    const double between = p1 * p2 * (mu1 - mu2) * (mu1 - mu2);
    if (between > best) {
      best = between;
      best_t = t;
    }
  }
  return otsu_stats_at(hist, best_t);
}

BinaryMask binarize(const GrayImage& img, int threshold, Polarity polarity) {
  if (threshold < 0 || threshold > 254) {
    throw Error(ErrorCode::InvalidArgument, "threshold must be in 0..254");
  }
  std::vector<std::uint8_t> bits;
  bits.reserve(img.values().size());
  for (std::uint8_t v : img.values()) {
    const bool dark = v <= threshold;
    bits.push_back(polarity == Polarity::DarkIsForeground ? dark : !dark);
  }
  return BinaryMask(img.width(), img.height(), std::move(bits));
}

LabelMap label_components_8(const BinaryMask& mask) {
  return label_components(mask, kNeighbours8);
}

LabelMap label_components_4(const BinaryMask& mask) {
  return label_components(mask, kNeighbours4);
}

BinaryMask LabelMap::component_mask(int label) const {
  std::vector<std::uint8_t> bits(labels.size());
  std::transform(labels.begin(), labels.end(), bits.begin(),
                 [label](int l) { return static_cast<std::uint8_t>(l == label); });
  return BinaryMask(width, height, std::move(bits));
}

bool LabelMap::touches_border(int label) const {
  if (label <= 0 || label > component_count()) return false;
  return border_touching(*this)[static_cast<std::size_t>(label)];
}

BinaryMask isolate_target_cell(const LabelMap& labels, PixelCoord roi_center,
                               std::size_t min_area) {
  const auto touches = border_touching(labels);
  std::vector<int> interior;
  std::vector<int> all;
  for (int k = 1; k <= labels.component_count(); ++k) {
    if (labels.component_sizes[static_cast<std::size_t>(k)] < min_area) continue;
    all.push_back(k);
    if (!touches[static_cast<std::size_t>(k)]) interior.push_back(k);
  }
  if (all.empty()) {
    throw Error(ErrorCode::NoCellFound,
                "no component of at least " + std::to_string(min_area) + " pixels");
  }
  const std::vector<int>& pool = interior.empty() ? all : interior;

  int chosen = 0;
  const bool center_inside = roi_center.x >= 0 && roi_center.y >= 0 &&
                             roi_center.x < labels.width && roi_center.y < labels.height;
  if (center_inside) {
    const int at_center = labels.at(roi_center.x, roi_center.y);
    if (std::find(pool.begin(), pool.end(), at_center) != pool.end()) chosen = at_center;
  }
  if (chosen == 0) {
    chosen = *std::max_element(pool.begin(), pool.end(), [&](int a, int b) {
      return labels.component_sizes[static_cast<std::size_t>(a)] <
             labels.component_sizes[static_cast<std::size_t>(b)];
    });
  }
  return labels.component_mask(chosen);
}

BinaryMask fill_holes(const BinaryMask& mask) {
  std::vector<std::uint8_t> inverted(mask.bits().begin(), mask.bits().end());
  for (auto& b : inverted) b = b ? 0 : 1;
  const LabelMap background =
      label_components_4(BinaryMask(mask.width(), mask.height(), std::move(inverted)));
  const auto outside = border_touching(background);

  BinaryMask filled = mask;
  for (int y = 0; y < mask.height(); ++y) {
    for (int x = 0; x < mask.width(); ++x) {
      const int l = background.at(x, y);
      if (l != 0 && !outside[static_cast<std::size_t>(l)]) filled.set(x, y, true);
    }
  }
  return filled;
}

CellPartition partition_cell_colors(const GrayImage& gray, const BinaryMask& cell) {
  const GrayHistogram hist = GrayHistogram::of_masked(gray, cell);
  if (hist.total == 0) throw Error(ErrorCode::EmptyMask, "cell mask is empty");

  CellPartition part;
  part.cell_mask = cell;
  if (hist.occupied_bins() < 2) {
    part.uniform = true;
    part.red_mask = cell;
    part.white_mask = BinaryMask(cell.width(), cell.height());
    return part;
  }

  part.threshold = otsu_threshold(hist).threshold;
  part.red_mask = BinaryMask(cell.width(), cell.height());
  part.white_mask = BinaryMask(cell.width(), cell.height());
  for (int y = 0; y < cell.height(); ++y) {
    for (int x = 0; x < cell.width(); ++x) {
      if (!cell.at(x, y)) continue;
      if (gray.at(x, y) <= part.threshold) {
        part.red_mask.set(x, y, true);
      } else {
        part.white_mask.set(x, y, true);
      }
    }
  }
  return part;
}

}  // namespace erythro
