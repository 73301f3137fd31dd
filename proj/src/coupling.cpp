// SPDX-License-Identifier: MIT
#include "rppvm/coupling.hpp"

#include <algorithm>
#include <thread>

namespace rppvm {

int gray_type(const VertexState& v) {
  if (v == states::empty) return 1;
  if (v == states::turn_right) return 2;
  if (v == states::horizontal) return 3;
  if (v == states::vertical) return 4;
  if (v == states::turn_up) return 5;
  throw Error("disallowed vertex state " + state_name(v));
}

const std::array<std::array<std::pair<int, int>, 5>, 5>& gray_table_verbatim() {
  // Rows: blue state, columns: red state, both in the order
  // empty, vertical, horizontal, turn-right, turn-up.
  static const std::array<std::array<std::pair<int, int>, 5>, 5> table{{
      {{{2, 1}, {2, 1}, {1, 0}, {1, 0}, {2, 1}}},
      {{{2, 1}, {2, 1}, {1, 0}, {1, 0}, {2, 1}}},
      {{{1, 0}, {1, 1}, {0, 0}, {0, 0}, {1, 1}}},
      {{{1, 0}, {1, 1}, {0, 0}, {0, 0}, {1, 1}}},
      {{{2, 1}, {2, 1}, {1, 0}, {1, 0}, {2, 1}}},
  }};
  return table;
}

void check_gray_table_consistency() {
  const Monomial x{1, 0}, t{0, 1};
  for (const auto& b : states::all)
    for (const auto& r : states::all) {
      ColoredVertexState s{b, r};
      if (!(colored_gray_from_types(s, x, t) == colored_gray_from_table(s, x, t)))
        throw Error("two-color gray table disagrees with its type factorization at blue " +
                    state_name(b) + ", red " + state_name(r));
    }
}

template <class V>
std::optional<V> colored_row_weight_explicit(RowKind kind, const std::pair<Partition, Partition>& mu,
                                             const std::pair<Partition, Partition>& lambda,
                                             const V& x, const V& t, int ell, int window) {
  int lo = -ell;
  int bottom_center = kind == RowKind::White ? 0 : 1;
  int need = std::max({bottom_center + mu.first.part(1), bottom_center + mu.second.part(1),
                       lambda.first.part(1), lambda.second.part(1)}) + 1;
  if (window < need) throw Error("window too narrow for the row boundaries");
  auto blue = fill_row(kind, interface_occupancy(mu.first, bottom_center, lo, window),
                       interface_occupancy(lambda.first, 0, lo, window));
  auto red = fill_row(kind, interface_occupancy(mu.second, bottom_center, lo, window),
                      interface_occupancy(lambda.second, 0, lo, window));
  if (!blue || !red) return std::nullopt;
  V w = unit_like(x);
  for (size_t j = 0; j < blue->size(); ++j)
    w = w * colored_row_vertex_weight(kind, ColoredVertexState{(*blue)[j], (*red)[j]}, x, t);
  return w;
}

template std::optional<Monomial> colored_row_weight_explicit(
    RowKind, const std::pair<Partition, Partition>&, const std::pair<Partition, Partition>&,
    const Monomial&, const Monomial&, int, int);
template std::optional<Rational> colored_row_weight_explicit(
    RowKind, const std::pair<Partition, Partition>&, const std::pair<Partition, Partition>&,
    const Rational&, const Rational&, int, int);

// ---- colored Yang-Baxter ----------------------------------------------------

namespace {

int code(const VertexState& v) {
  return int(v.bottom) | int(v.left) << 1 | int(v.top) << 2 | int(v.right) << 3;
}
int code(const CrossState& s) { return int(s.a) | int(s.b) << 1 | int(s.c) << 2 | int(s.d) << 3; }

VertexState vertex_from(int code4) {
  return {bool(code4 & 1), bool(code4 & 2), bool(code4 & 4), bool(code4 & 8)};
}
CrossState cross_from(int code4) {
  return {bool(code4 & 1), bool(code4 & 2), bool(code4 & 4), bool(code4 & 8)};
}

// Weights of every colored vertex or cross, indexed by blue code | red code << 4;
// disallowed states carry weight zero.
struct ColoredTables {
  std::array<Rational, 256> xvert, yvert, cross;
  std::array<bool, 256> xok{}, yok{}, cok{};

  ColoredTables(YbeKind kind, const ColoredYbeSample& s, CrossParam param) {
    const RowKind xkind = kind == YbeKind::WhiteWhite ? RowKind::White : RowKind::Gray;
    const Rational z = cross_param_value(param, s);
    for (int c = 0; c < 256; ++c) {
      VertexState b = vertex_from(c & 15), r = vertex_from(c >> 4);
      bool vok = allowed(b) && allowed(r);
      xok[size_t(c)] = yok[size_t(c)] = vok;
      xvert[size_t(c)] = vok ? colored_row_vertex_weight(xkind, {b, r}, s.x, s.t) : Rational(0);
      yvert[size_t(c)] = vok ? colored_white_weight({b, r}, s.y, s.t) : Rational(0);
      CrossState cb = cross_from(c & 15), cr = cross_from(c >> 4);
      bool ok = allowed(cb) && allowed(cr);
      cok[size_t(c)] = ok;
      cross[size_t(c)] = ok ? colored_cross_weight(ColoredCrossState{cb, cr}, z, s.t) : Rational(0);
    }
  }
};

// Pack one colored vertex from four colored edge values (bit 0 blue, bit 1 red).
int vcode(int bottom, int left, int top, int right) {
  auto col = [&](int bit) {
    return code(VertexState{bool(bottom >> bit & 1), bool(left >> bit & 1), bool(top >> bit & 1),
                            bool(right >> bit & 1)});
  };
  return col(0) | col(1) << 4;
}
int ccode(int a, int b, int c, int d) {
  auto col = [&](int bit) {
    return code(CrossState{bool(a >> bit & 1), bool(b >> bit & 1), bool(c >> bit & 1),
                           bool(d >> bit & 1)});
  };
  return col(0) | col(1) << 4;
}

std::pair<Rational, Rational> sides(const ColoredTables& T, const ColoredBoundary& bd) {
  const int i1 = bd[0], i2 = bd[1], i3 = bd[2], j1 = bd[3], j2 = bd[4], j3 = bd[5];
  Rational lhs = 0, rhs = 0;
  for (int u = 0; u < 4; ++u)
    for (int w = 0; w < 4; ++w)
      for (int m = 0; m < 4; ++m) {
        // Same geometry as the one-color ybe_sides.
        int c = ccode(i1, i2, u, w), bx = vcode(i3, w, m, j1), ty = vcode(m, u, j3, j2);
        if (T.cok[size_t(c)] && T.xok[size_t(bx)] && T.yok[size_t(ty)])
          lhs += T.cross[size_t(c)] * T.xvert[size_t(bx)] * T.yvert[size_t(ty)];
        int by = vcode(i3, i2, m, w), tx = vcode(m, i1, j3, u), c2 = ccode(u, w, j2, j1);
        if (T.yok[size_t(by)] && T.xok[size_t(tx)] && T.cok[size_t(c2)])
          rhs += T.yvert[size_t(by)] * T.xvert[size_t(tx)] * T.cross[size_t(c2)];
      }
  return {lhs, rhs};
}

}  // namespace

CrossParam default_cross_param(YbeKind kind) {
  return kind == YbeKind::WhiteWhite ? CrossParam::Ratio : CrossParam::Product;
}

Rational cross_param_value(CrossParam p, const ColoredYbeSample& s) {
  switch (p) {
    case CrossParam::Ratio: return s.y / s.x;
    case CrossParam::Product: return s.y * s.x;
    case CrossParam::ProductT: return s.y * s.x * s.t;
  }
  throw Error("unknown cross parameter");
}

std::string to_string(CrossParam p) {
  switch (p) {
    case CrossParam::Ratio: return "z=y/x";
    case CrossParam::Product: return "z=yx";
    case CrossParam::ProductT: return "z=yxt";
  }
  return "?";
}

std::pair<Rational, Rational> colored_ybe_sides(YbeKind kind, const ColoredBoundary& b,
                                                const ColoredYbeSample& s, CrossParam param) {
  return sides(ColoredTables(kind, s, param), b);
}

ColoredYbeReport verify_colored_ybe(YbeKind kind, const std::vector<ColoredYbeSample>& samples,
                                    CrossParam param) {
  ColoredYbeReport rep;
  rep.kind = kind;
  rep.param = param;
  rep.samples = samples.size();
  std::vector<ColoredTables> tables;
  for (const auto& s : samples) tables.emplace_back(kind, s, param);
  for (int code12 = 0; code12 < 4096; ++code12) {
    ColoredBoundary bd{};
    for (int e = 0; e < 6; ++e) bd[size_t(e)] = (code12 >> (2 * e)) & 3;
    ++rep.boundaries_checked;
    for (size_t s = 0; s < samples.size(); ++s) {
      auto [l, r] = sides(tables[s], bd);
      if (l != r) rep.violations.push_back({bd, s, l, r});
    }
  }
  return rep;
}

// ---- pairs ---------------------------------------------------------------------

PairRPP make_pair_rpp(const RPP& blue, const RPP& red) {
  if (!(blue.shape() == red.shape()))
    throw Error("a pair needs two RPPs of the same shape, got " + to_string(blue.shape()) +
                " and " + to_string(red.shape()));
  return {blue.shape(), blue, red};
}

namespace {

std::vector<int> centers_of(const std::vector<Rel>& pattern) {
  std::vector<int> c{0};
  for (Rel r : pattern) c.push_back(c.back() - (r == Rel::Above ? 1 : 0));
  return c;
}

}  // namespace

int pair_window_hi(const SliceSequence& blue, const SliceSequence& red) {
  auto centers = centers_of(blue.pattern);
  int hi = 1;
  for (size_t k = 0; k < centers.size(); ++k)
    hi = std::max({hi, centers[k] + blue.slices[k].part(1) + 2,
                   centers[k] + red.slices[k].part(1) + 2});
  return hi;
}

Monomial pair_config_weight(const PairRPP& p) {
  SliceSequence sb = to_slices(p.blue), sr = to_slices(p.red);
  int hi = pair_window_hi(sb, sr);
  VertexConfig cb = config_from_slices(p.shape, sb, hi);
  VertexConfig cr = config_from_slices(p.shape, sr, hi);
  if (cb.hi != cr.hi) throw Error("colors ended up on different windows");
  Monomial w;
  const Monomial t{0, 1};
  for (size_t i = 0; i < cb.kinds.size(); ++i) {
    Monomial x{specialization_exponent(cb.kinds[i], int(i) + 1), 0};
    for (size_t j = 0; j < cb.states[i].size(); ++j)
      w *= colored_row_vertex_weight(cb.kinds[i], {cb.states[i][j], cr.states[i][j]}, x, t);
  }
  return w;
}

int g_via_vertex(const PairRPP& p) {
  std::int64_t ell = p.shape.length();
  std::int64_t g = pair_config_weight(p).b - ell * (ell - 1) / 2;
  if (g < 0) throw Error("negative interaction count; the vertex weights are inconsistent");
  return static_cast<int>(g);
}

// ---- lozenges ----------------------------------------------------------------

LozengeField lozenge_field(const Partition& shape, const SliceSequence& s, int hi) {
  LozengeField f;
  f.pattern = s.pattern;
  f.lo = -shape.length();
  f.hi = hi;
  f.centers = centers_of(s.pattern);
  for (size_t k = 0; k < s.slices.size(); ++k) {
    std::vector<int> cols;
    const int C = f.centers[k];
    for (int i = 1; i <= C - f.lo; ++i) cols.push_back(C + s.slices[k].part(i) - i);
    f.particles.push_back(std::move(cols));
  }
  return f;
}

Lozenge LozengeField::at(int strip, int column) const {
  const auto& left = particles[size_t(strip - 1)];
  const auto& right = particles[size_t(strip)];
  if (std::find(right.begin(), right.end(), column) != right.end()) return Lozenge::Flat;
  auto upto = [column](const std::vector<int>& v) {
    return std::count_if(v.begin(), v.end(), [column](int c) { return c <= column; });
  };
  auto carried = upto(left) - upto(right);
  if (carried == 1) return Lozenge::Falling;
  if (carried == 0) return Lozenge::Rising;
  throw Error("slices do not interlace; no lozenge tiling exists");
}

namespace {

std::vector<CoupledPair> coupled_from_slices(const Partition& shape, const SliceSequence& sb,
                                             const SliceSequence& sr) {
  std::vector<CoupledPair> out;
  if (shape.empty()) return out;
  int hi = pair_window_hi(sb, sr);
  LozengeField fb = lozenge_field(shape, sb, hi), fr = lozenge_field(shape, sr, hi);
  for (int k = 1; k <= static_cast<int>(sb.pattern.size()); ++k) {
    bool hole_strip = sb.pattern[size_t(k - 1)] == Rel::Below;
    for (int j = fb.lo; j < hi; ++j) {
      Lozenge b = fb.at(k, j), r = fr.at(k, j);
      int type = 0;
      if (hole_strip && b == Lozenge::Falling && r == Lozenge::Flat) type = 1;
      if (hole_strip && b == Lozenge::Falling && r == Lozenge::Falling) type = 2;
      if (!hole_strip && b == Lozenge::Rising && r == Lozenge::Rising) type = 3;
      if (!hole_strip && b == Lozenge::Flat && r == Lozenge::Rising) type = 4;
      if (type) out.push_back({k, j, type});
    }
  }
  return out;
}

}  // namespace

std::vector<CoupledPair> coupled_pairs(const PairRPP& p) {
  return coupled_from_slices(p.shape, to_slices(p.blue), to_slices(p.red));
}

int g_via_lozenges(const PairRPP& p) { return static_cast<int>(coupled_pairs(p).size()); }

QTSeries pair_genfun_bruteforce(const Partition& lambda, int N, int jobs) {
  std::vector<RPP> all = enumerate(lambda, N);
  std::vector<SliceSequence> slices;
  for (const auto& r : all) slices.push_back(to_slices(r));
  jobs = std::max(1, jobs);
  std::vector<QTSeries> partial(size_t(jobs), QTSeries{N});
  auto work = [&](int shard) {
    for (size_t i = size_t(shard); i < all.size(); i += size_t(jobs))
      for (size_t j = 0; j < all.size(); ++j) {
        int v = all[i].volume() + all[j].volume();
        if (v > N) continue;
        int g = static_cast<int>(coupled_from_slices(lambda, slices[i], slices[j]).size());
        partial[size_t(shard)].add_term(v, g, 1);
      }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int s = 0; s < jobs; ++s) pool.emplace_back(work, s);
    for (auto& th : pool) th.join();
  }
  QTSeries total(N);
  for (const auto& s : partial) total = total + s;
  return total;
}

QTSeries single_genfun_bruteforce(const Partition& lambda, int N) {
  QTSeries s(N);
  for_each_rpp(lambda, N, [&](const RPP& r) { s.add_term(r.volume(), 0, 1); });
  return s;
}

}  // namespace rppvm
