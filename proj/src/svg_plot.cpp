#include "klstab/svg_plot.hpp"

#include "klstab/regions.hpp"

#include <algorithm>
#include <array>

namespace klstab {

namespace {

constexpr i64 kCell = 14;
constexpr i64 kLeft = 64;
constexpr i64 kTop = 44;

struct Swatch {
  const char* cls;
  const char* color;
  const char* label;
};

constexpr std::array<Swatch, 7> kSwatches = {{
    {"r0", "#c0504d", "R0: no (k,l)-stable bundles"},
    {"r1", "#4f81bd", "R1: (k,l)-stable implies stable"},
    {"r2", "#9bbb59", "R2: stable implies (k,l)-stable"},
    {"r1r2", "#8064a2", "R1 and R2"},
    {"r3k", "#f79646", "R3k"},
    {"r3l", "#f2d249", "R3l"},
    {"gap", "#d9d9d9", "band decided by the degree"},
}};

const Swatch& cell_swatch(const RegionFlags& f) {
  if (f.in_R0) return kSwatches[0];
  if (f.in_R1 && f.in_R2) return kSwatches[3];
  if (f.in_R1) return kSwatches[1];
  if (f.in_R2) return kSwatches[2];
  if (f.in_R3k) return kSwatches[4];
  if (f.in_R3l) return kSwatches[5];
  return kSwatches[6];
}

void append(std::string& s, const std::string& piece) { s += piece; }

std::string num(i64 v) { return std::to_string(v); }

}  // namespace

std::string region_plot_svg(i64 n, i64 g, i64 window) {
  if (n < 2) throw std::invalid_argument("region_plot_svg: rank must be at least 2");
  if (g < 2) throw std::invalid_argument("region_plot_svg: genus must be at least 2");
  const i64 w = window > 0 ? window : n * g;
  if (w > 200) throw std::invalid_argument("region_plot_svg: window too large");

  const i64 grid = 2 * w + 1;
  const i64 plot = grid * kCell;
  const i64 legend_top = kTop + plot + 34;
  const i64 width = kLeft + plot + 36;
  const i64 height = legend_top + static_cast<i64>(kSwatches.size()) * 20 + 16;

  const auto px = [&](i64 k) { return kLeft + (k + w) * kCell; };
  const auto py = [&](i64 l) { return kTop + (w - l) * kCell; };
  const auto cx = [&](i64 k) { return px(k) + kCell / 2; };
  const auto cy = [&](i64 l) { return py(l) + kCell / 2; };

  std::string svg;
  svg.reserve(static_cast<size_t>(grid * grid) * 64 + 4096);
  append(svg, "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) +
                  "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) + " " +
                  num(height) + "\">\n");
  append(svg, "<rect width=\"" + num(width) + "\" height=\"" + num(height) +
                  "\" fill=\"#ffffff\"/>\n");
  append(svg, "<text x=\"" + num(kLeft) + "\" y=\"28\" font-family=\"monospace\" "
              "font-size=\"16\">(k,l)-stability regions, rank n=" + num(n) +
                  ", genus g=" + num(g) + "</text>\n");

  // One square per lattice point, coloured by region membership.
  for (i64 l = w; l >= -w; --l) {
    for (i64 k = -w; k <= w; ++k) {
      const Swatch& sw = cell_swatch(classify_region(n, g, KL{k, l}));
      append(svg, "<rect class=\"" + std::string(sw.cls) + "\" x=\"" + num(px(k)) + "\" y=\"" +
                      num(py(l)) + "\" width=\"" + num(kCell) + "\" height=\"" + num(kCell) +
                      "\" fill=\"" + sw.color + "\" stroke=\"#ffffff\" stroke-width=\"1\"/>\n");
    }
  }

  // Bounding lines a1 = c and a2 = c for c in {0, (n-1)(g-1), (n-1)g}.
  // Each family has an integer direction vector, so end points stay exact.
  const i64 mid = (n - 1) * (g - 1);
  const i64 hi = (n - 1) * g;
  const std::array<std::pair<i64, const char*>, 3> levels = {{
      {0, ""},
      {mid, " stroke-dasharray=\"7 4\""},
      {hi, " stroke-dasharray=\"2 4\""},
  }};
  const i64 families = n == 2 ? 1 : 2;  // both forms coincide for n = 2
  for (i64 fam = 0; fam < families; ++fam) {
    for (const auto& [c, dash] : levels) {
      // family 0: k(n-1) + l = c, points (t, c - (n-1)t)
      // family 1: k + (n-1)l = c, points (c - (n-1)t, t)
      const i64 a = n - 1;
      const i64 t_lo = std::max(-w, ceil_div(c - w, a));
      const i64 t_hi = std::min(w, floor_div(c + w, a));
      if (t_lo > t_hi) continue;
      const i64 x1 = fam == 0 ? t_lo : c - a * t_lo;
      const i64 y1 = fam == 0 ? c - a * t_lo : t_lo;
      const i64 x2 = fam == 0 ? t_hi : c - a * t_hi;
      const i64 y2 = fam == 0 ? c - a * t_hi : t_hi;
      append(svg, "<line x1=\"" + num(cx(x1)) + "\" y1=\"" + num(cy(y1)) + "\" x2=\"" +
                      num(cx(x2)) + "\" y2=\"" + num(cy(y2)) +
                      "\" stroke=\"#1a1a1a\" stroke-width=\"2\"" + dash + "/>\n");
    }
  }

  // Axis labels and window extents.
  append(svg, "<text x=\"" + num(cx(0) - 4) + "\" y=\"" + num(kTop + plot + 24) +
                  "\" font-family=\"monospace\" font-size=\"13\">k</text>\n");
  append(svg, "<text x=\"" + num(kLeft - 26) + "\" y=\"" + num(cy(0) + 4) +
                  "\" font-family=\"monospace\" font-size=\"13\">l</text>\n");
  append(svg, "<text x=\"" + num(px(-w)) + "\" y=\"" + num(kTop + plot + 24) +
                  "\" font-family=\"monospace\" font-size=\"13\">" + num(-w) + "</text>\n");
  append(svg, "<text x=\"" + num(px(w)) + "\" y=\"" + num(kTop + plot + 24) +
                  "\" font-family=\"monospace\" font-size=\"13\">" + num(w) + "</text>\n");

  i64 y = legend_top;
  for (const Swatch& sw : kSwatches) {
    append(svg, "<rect class=\"legend\" x=\"" + num(kLeft) + "\" y=\"" + num(y) +
                    "\" width=\"14\" height=\"14\" fill=\"" + std::string(sw.color) +
                    "\" stroke=\"#666666\"/>\n");
    append(svg, "<text x=\"" + num(kLeft + 22) + "\" y=\"" + num(y + 12) +
                    "\" font-family=\"monospace\" font-size=\"13\">" + sw.label + "</text>\n");
    y += 20;
  }
  append(svg, "</svg>\n");
  return svg;
}

}  // namespace klstab
