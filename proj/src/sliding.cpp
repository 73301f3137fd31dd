// SPDX-License-Identifier: MIT
#include "rppvm/sliding.hpp"

#include <algorithm>

#include "rppvm/qt_series.hpp"

namespace rppvm {

namespace {

int strip_count(const Partition& lambda) {
  int d = 0;
  while (lambda.part(d + 1) >= d + 1) ++d;
  return d;
}

// Closed vertical run of path i inside strip k, in polyline units.
std::pair<int, int> mid_run(const PathFamily& f, int i, int k) {
  auto y = [&](int s) { return 4 * f.column(i, s) + 2 * s + 2; };
  int a = y(k - 1), b = y(k);
  return a < b ? std::pair{a + 1, b - 1} : std::pair{b + 1, a - 1};
}

}  // namespace

int PathFamily::column(int i, int k) const {
  int h = i <= count() ? heights[size_t(i - 1)][size_t(k)] : 0;
  return centers[size_t(k)] + h - i;
}

std::vector<std::pair<int, int>> PathFamily::polyline(int i) const {
  std::vector<std::pair<int, int>> pts;
  const int n1 = static_cast<int>(pattern.size());
  auto y = [&](int s) { return 4 * column(i, s) + 2 * s + 2; };
  pts.emplace_back(0, y(0));
  for (int k = 1; k <= n1; ++k) {
    auto [lo, hi] = mid_run(*this, i, k);
    bool up = y(k) > y(k - 1);
    pts.emplace_back(2 * k - 1, up ? lo : hi);
    pts.emplace_back(2 * k - 1, up ? hi : lo);
    pts.emplace_back(2 * k, y(k));
  }
  return pts;
}

PathFamily paths_of(const RPP& r) {
  PathFamily f;
  f.shape = r.shape();
  SliceSequence s = to_slices(r);
  f.pattern = s.pattern;
  f.centers.push_back(0);
  for (Rel rel : s.pattern) f.centers.push_back(f.centers.back() - (rel == Rel::Above ? 1 : 0));
  const int d = strip_count(f.shape);
  f.heights.assign(size_t(d), std::vector<int>(s.slices.size(), 0));
  for (int i = 1; i <= d; ++i)
    for (size_t k = 0; k < s.slices.size(); ++k) f.heights[size_t(i - 1)][k] = s.slices[k].part(i);
  return f;
}

ColoredPathSystem paths_of(const PairRPP& p) { return {paths_of(p.blue), paths_of(p.red)}; }

std::optional<T0Violation> t0_violation(const PairRPP& p) {
  const ColoredPathSystem ps = paths_of(p);
  const PathFamily& b = ps.blue;
  const PathFamily& r = ps.red;
  const int slices = static_cast<int>(b.centers.size());
  for (int i = 1; i <= b.count(); ++i) {
    for (int k = 0; k < slices; ++k) {
      if (b.column(i, k) > r.column(i, k)) return T0Violation{i, k, "blue above red"};
      if (b.column(i, k) <= r.column(i + 1, k))
        return T0Violation{i, k, "blue meets next red"};
    }
    for (int k = 1; k < slices; ++k) {
      auto mb = mid_run(b, i, k), mr = mid_run(r, i, k);
      // Two runs of positive length sharing a positive-length piece.
      if (mb.first < mb.second && mr.first < mr.second &&
          std::min(mb.second, mr.second) > std::max(mb.first, mr.first))
        return T0Violation{i, k, "shared vertical run"};
      auto mn = mid_run(r, i + 1, k);
      if (mb.first <= mn.second) return T0Violation{i, k, "blue meets next red"};
    }
  }
  return std::nullopt;
}

std::vector<Cell> nonzero_forced_cells(const PairRPP& p) {
  std::vector<Cell> out;
  for (const Cell& c : p.shape.cells()) {
    int m = strip_index(p.shape, c);
    if (c.row <= m || c.col <= m)
      if (p.blue.at(c) != 0) out.push_back(c);
    if (m >= 2 && (c.row <= m - 1 || c.col <= m - 1))
      if (p.red.at(c) != 0) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RPP slide(const PairRPP& p) {
  if (auto v = t0_violation(p))
    throw Error(std::string("pair has coupled lozenges (") + v->rule + " on path " +
                std::to_string(v->path) + ")");
  if (auto bad = nonzero_forced_cells(p); !bad.empty())
    throw Error("nonzero entry in a cell forced to zero at t = 0: (" +
                std::to_string(bad.front().row) + "," + std::to_string(bad.front().col) + ")");
  std::vector<std::vector<int>> rows;
  for (int r = 1; r <= p.shape.length(); ++r) {
    rows.emplace_back();
    for (int c = 1; c <= p.shape.part(r); ++c) {
      int m = strip_index(p.shape, {r, c});
      int v = m % 2 == 1 ? p.red.at_or_zero({r + (m - 1) / 2, c + (m - 1) / 2})
                         : p.blue.at_or_zero({r + m / 2, c + m / 2});
      rows.back().push_back(v);
    }
  }
  RPP out = validate(p.shape, std::move(rows));
  if (out.volume() != p.blue.volume() + p.red.volume())
    throw Error("sliding lost volume");
  return out;
}

PairRPP unslide(const RPP& rpp) {
  const Partition& shape = rpp.shape();
  std::vector<std::vector<int>> blue, red;
  for (int r = 1; r <= shape.length(); ++r) {
    blue.emplace_back();
    red.emplace_back();
    for (int c = 1; c <= shape.part(r); ++c) {
      int i = strip_index(shape, {r, c});
      blue.back().push_back(r > i && c > i ? rpp.at({r - i, c - i}) : 0);
      int s = i - 1;
      red.back().push_back(r > s && c > s ? rpp.at({r - s, c - s}) : 0);
    }
  }
  return make_pair_rpp(validate(shape, std::move(blue)), validate(shape, std::move(red)));
}

T0CountReport verify_t0_counting(const Partition& lambda, int N) {
  T0CountReport rep;
  rep.shape = lambda;
  rep.N = N;
  const size_t len = size_t(N + 1);
  rep.g0_pairs.assign(len, 0);
  rep.rpps.assign(len, 0);
  rep.single_series.assign(len, 0);
  rep.pair_series_t0.assign(len, 0);
  std::vector<RPP> all = enumerate(lambda, N);
  for (const auto& a : all) {
    rep.rpps[size_t(a.volume())] += 1;
    for (const auto& b : all) {
      int v = a.volume() + b.volume();
      if (v <= N && g_via_lozenges(make_pair_rpp(a, b)) == 0) rep.g0_pairs[size_t(v)] += 1;
    }
  }
  QTSeries single = hook_product_single(lambda, N), pair = hook_product_pair(lambda, N);
  for (int n = 0; n <= N; ++n) {
    rep.single_series[size_t(n)] = static_cast<long long>(single.coeff(n, 0));
    rep.pair_series_t0[size_t(n)] = static_cast<long long>(pair.coeff(n, 0));
  }
  return rep;
}

}  // namespace rppvm
