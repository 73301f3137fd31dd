// SPDX-License-Identifier: MIT
#include "rppvm/render.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "rppvm/sliding.hpp"

namespace rppvm {

namespace {

// Fixed two-decimal formatting; snprintf with "%.2f" ignores the global C++
// locale and the "C" locale is never changed by this program.
std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v == 0.0 ? 0.0 : v);
  return buf;
}

int default_half_width(const Partition& lambda, int hw) {
  return hw > 0 ? hw : maya_min_half_width(lambda) + 1;
}

std::string svg_open(double w, double h) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(w) +
         "\" height=\"" + num(h) + "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n";
}

struct Pt {
  double x, y;
};

std::string polygon(const std::vector<Pt>& pts, const std::string& attrs) {
  std::string s = "  <polygon points=\"";
  for (size_t i = 0; i < pts.size(); ++i) s += (i ? " " : "") + num(pts[i].x) + "," + num(pts[i].y);
  return s + "\" " + attrs + "/>\n";
}

}  // namespace

std::string render_maya_ascii(const Partition& lambda, int half_width) {
  return "…" + to_string(maya(lambda, default_half_width(lambda, half_width))) + "…";
}

std::string render_maya_svg(const Partition& lambda, int half_width) {
  MayaDiagram m = maya(lambda, default_half_width(lambda, half_width));
  const double step = 20, r = 7;
  const double w = step * double(m.sites.size() + 2), h = 40;
  std::string out = svg_open(w, h);
  for (size_t s = 0; s < m.sites.size(); ++s) {
    double cx = step * double(s + 1) + step / 2;
    out += "  <circle cx=\"" + num(cx) + "\" cy=\"20.00\" r=\"" + num(r) + "\" " +
           (m.sites[s] ? "fill=\"black\"" : "fill=\"white\" stroke=\"black\"") + "/>\n";
  }
  double cx = step * double(m.half_width + 1);
  out += "  <line x1=\"" + num(cx) + "\" y1=\"5.00\" x2=\"" + num(cx) +
         "\" y2=\"35.00\" stroke=\"red\" stroke-width=\"2\"/>\n";
  return out + "</svg>\n";
}

std::string render_tiling_svg(const RPP& r) {
  const Partition& shape = r.shape();
  int maxh = 0;
  for (const auto& row : r.rows())
    for (int v : row) maxh = std::max(maxh, v);
  const double s = 30, c30 = 0.8660254037844386;
  const int W = shape.part(1), H = shape.length();
  // Orthogonal projection along (1,1,-1): screen x from col - row, screen y
  // (downwards) from -(col + row + 2·height).
  const double ox = s * c30 * (H + 1), top = s * (double(W + H) / 2 + maxh + 1);
  auto P = [&](double x, double y, double z) -> Pt {
    return {ox + s * c30 * (x - y), top - s * (x + y + 2 * z) / 2};
  };
  const double w = s * c30 * (W + H + 2), h = top + s;
  auto height = [&](int row, int col) { return r.at_or_zero({row, col}); };
  std::string out = svg_open(w, h);
  const std::string top_style = "fill=\"#d9a0d9\" stroke=\"black\" stroke-width=\"1\"";
  const std::string left_style = "fill=\"#a0522d\" stroke=\"black\" stroke-width=\"1\"";
  const std::string front_style = "fill=\"#f2c14e\" stroke=\"black\" stroke-width=\"1\"";
  // Back to front so nearer faces are painted last.
  std::vector<Cell> cells = shape.cells();
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    int sa = a.row + a.col, sb = b.row + b.col;
    return sa != sb ? sa > sb : a < b;
  });
  for (const Cell& c : cells) {
    const int x0 = c.col - 1, y0 = c.row - 1, z = height(c.row, c.col);
    out += polygon({P(x0, y0, z), P(x0 + 1, y0, z), P(x0 + 1, y0 + 1, z), P(x0, y0 + 1, z)},
                   "class=\"top\" " + top_style);
    for (int k = height(c.row, c.col - 1); k < z; ++k)
      out += polygon({P(x0, y0, k), P(x0, y0 + 1, k), P(x0, y0 + 1, k + 1), P(x0, y0, k + 1)},
                     "class=\"left\" " + left_style);
    for (int k = height(c.row - 1, c.col); k < z; ++k)
      out += polygon({P(x0, y0, k), P(x0 + 1, y0, k), P(x0 + 1, y0, k + 1), P(x0, y0, k + 1)},
                     "class=\"front\" " + front_style);
  }
  return out + "</svg>\n";
}

namespace {

std::string ascii_field(const Partition& shape, const SliceSequence& s,
                        const std::set<std::pair<int, int>>& marks, int hi) {
  LozengeField f = lozenge_field(shape, s, hi);
  std::ostringstream out;
  const int strips = static_cast<int>(f.pattern.size());
  out << "      ";
  for (Rel rel : f.pattern) out << (rel == Rel::Below ? 'w' : 'g');
  out << "\n";
  for (int j = f.hi - 1; j >= f.lo; --j) {
    char label[16];
    std::snprintf(label, sizeof label, "%4d  ", j);
    out << label;
    for (int k = 1; k <= strips; ++k) {
      if (marks.count({k, j})) {
        out << '*';
        continue;
      }
      switch (f.at(k, j)) {
        case Lozenge::Rising: out << '/'; break;
        case Lozenge::Falling: out << '\\'; break;
        case Lozenge::Flat: out << '='; break;
      }
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace

std::string render_tiling_ascii(const RPP& r) {
  if (r.shape().empty()) return "(empty shape)\n";
  SliceSequence s = to_slices(r);
  return ascii_field(r.shape(), s, {}, pair_window_hi(s, s));
}

std::string render_pair_ascii(const PairRPP& p) {
  if (p.shape.empty()) return "(empty shape)\n";
  SliceSequence sb = to_slices(p.blue), sr = to_slices(p.red);
  std::set<std::pair<int, int>> marks;
  for (const auto& c : coupled_pairs(p)) marks.insert({c.strip, c.column});
  int hi = pair_window_hi(sb, sr);
  return "blue\n" + ascii_field(p.shape, sb, marks, hi) + "red\n" + ascii_field(p.shape, sr, marks, hi);
}

std::string render_pair_svg(const PairRPP& p) {
  ColoredPathSystem ps = paths_of(p);
  std::vector<CoupledPair> cps = coupled_pairs(p);
  const int strips = static_cast<int>(ps.blue.pattern.size());
  // Collect every polyline vertex to size the canvas.
  int ymin = 0, ymax = 0;
  std::vector<std::vector<std::pair<int, int>>> blue, red;
  for (int i = 1; i <= ps.blue.count(); ++i) {
    blue.push_back(ps.blue.polyline(i));
    red.push_back(ps.red.polyline(i));
  }
  for (const auto* fam : {&blue, &red})
    for (const auto& line : *fam)
      for (auto [x, y] : line) {
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
      }
  for (const auto& c : cps) {
    ymin = std::min(ymin, 4 * c.column + 2 * c.strip);
    ymax = std::max(ymax, 4 * c.column + 2 * c.strip + 2);
  }
  const double s = 12, pad = 20;
  auto X = [&](double x) { return pad + s * x; };
  auto Y = [&](double y) { return pad + s * (ymax - y); };
  std::string out = svg_open(2 * pad + s * 2 * strips, 2 * pad + s * (ymax - ymin));
  for (int k = 0; k <= strips; ++k)
    out += "  <line x1=\"" + num(X(2 * k)) + "\" y1=\"" + num(Y(ymax)) + "\" x2=\"" + num(X(2 * k)) +
           "\" y2=\"" + num(Y(ymin)) + "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  for (const auto& c : cps) {
    double cy = 4 * c.column + 2 * c.strip + 1;
    out += "  <rect class=\"coupled\" data-type=\"" + std::to_string(c.type) + "\" x=\"" +
           num(X(2 * c.strip - 2)) + "\" y=\"" + num(Y(cy + 1)) + "\" width=\"" + num(2 * s) +
           "\" height=\"" + num(2 * s) + "\" fill=\"#ffd54f\" fill-opacity=\"0.7\"/>\n";
  }
  auto draw = [&](const std::vector<std::vector<std::pair<int, int>>>& fam, const char* color,
                  const char* cls, double dx) {
    for (const auto& line : fam) {
      std::string pts;
      for (size_t n = 0; n < line.size(); ++n)
        pts += (n ? " " : "") + num(X(line[n].first) + dx) + "," + num(Y(line[n].second));
      out += std::string("  <polyline class=\"") + cls + "\" points=\"" + pts +
             "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"2\" stroke-opacity=\"0.8\"/>\n";
    }
  };
  // Offset the red paths slightly so shared segments stay visible.
  draw(blue, "#1f4fd1", "blue", -1.5);
  draw(red, "#d11f1f", "red", 1.5);
  return out + "</svg>\n";
}

}  // namespace rppvm
