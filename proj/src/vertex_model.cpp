// SPDX-License-Identifier: MIT
#include "rppvm/vertex_model.hpp"

#include <algorithm>
#include <functional>

namespace rppvm {

bool allowed(const VertexState& v) {
  if (int(v.bottom) + int(v.left) != int(v.top) + int(v.right)) return false;
  return !(v.bottom && v.left);  // the doubly occupied vertex is excluded
}

int state_index(const VertexState& v) {
  for (size_t i = 0; i < states::all.size(); ++i)
    if (states::all[i] == v) return static_cast<int>(i);
  throw Error("disallowed vertex state " + state_name(v));
}

std::string state_name(const VertexState& v) {
  if (v == states::empty) return "empty";
  if (v == states::vertical) return "vertical";
  if (v == states::horizontal) return "horizontal";
  if (v == states::turn_right) return "turn-right";
  if (v == states::turn_up) return "turn-up";
  return std::string("(b") + (v.bottom ? "1" : "0") + " l" + (v.left ? "1" : "0") + " t" +
         (v.top ? "1" : "0") + " r" + (v.right ? "1" : "0") + ")";
}

bool allowed(const CrossState& s) {
  if (int(s.a) + int(s.b) != int(s.c) + int(s.d)) return false;
  return !(s.b && s.c && !s.a && !s.d);  // a lone strand may not climb from b to c
}

std::vector<bool> interface_occupancy(const Partition& mu, int center, int lo, int hi) {
  int count = center - lo;
  if (count < 0 || mu.length() > count)
    throw Error("interface " + to_string(mu) + " does not fit left of its center");
  std::vector<bool> occ(static_cast<size_t>(hi - lo), false);
  for (int i = 1; i <= count; ++i) {
    int col = center + mu.part(i) - i;
    if (col >= hi) throw Error("window too narrow for interface " + to_string(mu));
    occ[static_cast<size_t>(col - lo)] = true;
  }
  return occ;
}

std::optional<std::vector<VertexState>> fill_row(RowKind kind, const std::vector<bool>& bottom,
                                                 const std::vector<bool>& top) {
  std::vector<VertexState> row;
  row.reserve(bottom.size());
  bool h = false;
  for (size_t j = 0; j < bottom.size(); ++j) {
    int out_right = int(h) + int(bottom[j]) - int(top[j]);
    if (out_right < 0 || out_right > 1) return std::nullopt;
    VertexState v{bottom[j], h, top[j], out_right == 1};
    if (!allowed(v)) return std::nullopt;
    row.push_back(v);
    h = v.right;
  }
  if (h != (kind == RowKind::Gray)) return std::nullopt;
  return row;
}

template <class V>
std::optional<V> row_weight_explicit(RowKind kind, const Partition& mu, const Partition& lambda,
                                     const V& x, int ell, int window) {
  int lo = -ell;
  int bottom_center = kind == RowKind::White ? 0 : 1;
  // The last column must already be tail: empty for white, a horizontal
  // pass-through for gray. Both need it free of boundary particles.
  int need = std::max(bottom_center + mu.part(1), lambda.part(1)) + 1;
  if (window < need) throw Error("window too narrow for the row boundaries");
  auto bottom = interface_occupancy(mu, bottom_center, lo, window);
  auto top = interface_occupancy(lambda, 0, lo, window);
  auto row = fill_row(kind, bottom, top);
  if (!row) return std::nullopt;
  return row_product(kind, *row, x);
}

template std::optional<Monomial> row_weight_explicit(RowKind, const Partition&, const Partition&,
                                                     const Monomial&, int, int);
template std::optional<Rational> row_weight_explicit(RowKind, const Partition&, const Partition&,
                                                     const Rational&, int, int);

VertexConfig config_from_slices(const Partition& shape, const SliceSequence& s, int min_hi) {
  VertexConfig c;
  c.shape = shape;
  c.interfaces = s.slices;
  c.lo = -shape.length();
  c.centers.push_back(0);
  for (Rel r : s.pattern) {
    c.kinds.push_back(row_kind(r));
    c.centers.push_back(c.centers.back() - (r == Rel::Above ? 1 : 0));
  }
  c.hi = std::max(1, min_hi);
  for (size_t k = 0; k < c.interfaces.size(); ++k)
    c.hi = std::max(c.hi, c.centers[k] + c.interfaces[k].part(1) + 2);
  for (size_t i = 0; i < c.kinds.size(); ++i) {
    auto bottom = interface_occupancy(c.interfaces[i], c.centers[i], c.lo, c.hi);
    auto top = interface_occupancy(c.interfaces[i + 1], c.centers[i + 1], c.lo, c.hi);
    auto row = fill_row(c.kinds[i], bottom, top);
    if (!row) throw Error("slice sequence admits no vertex filling at row " + std::to_string(i + 1));
    // Tail check: the last column is empty (white) or horizontal (gray),
    // both weight 1, so nothing is lost by stopping the window here.
    VertexState tail = c.kinds[i] == RowKind::White ? states::empty : states::horizontal;
    if (row->back() != tail) throw Error("vertex window too narrow");
    c.states.push_back(std::move(*row));
  }
  return c;
}

VertexConfig rpp_to_config(const RPP& r) { return config_from_slices(r.shape(), to_slices(r)); }

std::vector<int> row_exponents(const VertexConfig& c) {
  std::vector<int> e;
  for (size_t i = 0; i < c.kinds.size(); ++i)
    e.push_back(static_cast<int>(row_product(c.kinds[i], c.states[i], Monomial{1, 0}).a));
  return e;
}

int specialization_exponent(RowKind kind, int row) { return kind == RowKind::Gray ? row : -row; }

Monomial config_weight_q(const RPP& r) {
  VertexConfig c = rpp_to_config(r);
  auto e = row_exponents(c);
  Monomial w;
  for (size_t i = 0; i < e.size(); ++i)
    w.a += static_cast<std::int64_t>(e[i]) * specialization_exponent(c.kinds[i], int(i) + 1);
  return w;
}

Monomial A_lambda(const Partition& lambda) {
  int ell = lambda.length();
  std::int64_t s = 0;
  for (int i = 1; i <= ell; ++i) s += std::int64_t(lambda.part(i) + ell - i + 1) * (i - 1);
  return {-s, 0};
}

// ---- Yang-Baxter -------------------------------------------------------------

std::pair<Rational, Rational> ybe_sides(YbeKind kind, const std::array<bool, 6>& bd,
                                        const Rational& x, const Rational& y) {
  const bool i1 = bd[0], i2 = bd[1], i3 = bd[2], j1 = bd[3], j2 = bd[4], j3 = bd[5];
  const RowKind xkind = kind == YbeKind::WhiteWhite ? RowKind::White : RowKind::Gray;
  const Rational z = kind == YbeKind::WhiteWhite ? y / x : y * x;
  auto vw = [](RowKind k, const VertexState& v, const Rational& p) -> Rational {
    return allowed(v) ? row_vertex_weight(k, v, p) : Rational(0);
  };
  auto cw = [&](const CrossState& s) -> Rational {
    return allowed(s) ? cross_weight(s, z) : Rational(0);
  };
  Rational lhs = 0, rhs = 0;
  for (int bits = 0; bits < 8; ++bits) {
    bool u = bits & 1, w = bits & 2, m = bits & 4;
    // Left side: u, w are the cross's right-top and right-bottom ends.
    lhs += cw({i1, i2, u, w}) * vw(xkind, {i3, w, m, j1}, x) *
           vw(RowKind::White, {m, u, j3, j2}, y);
    // Right side: u, w are the top and bottom vertices' right edges.
    rhs += vw(RowKind::White, {i3, i2, m, w}, y) * vw(xkind, {m, i1, j3, u}, x) *
           cw({u, w, j2, j1});
  }
  return {lhs, rhs};
}

YbeReport verify_ybe(YbeKind kind, const std::vector<std::pair<Rational, Rational>>& samples) {
  YbeReport rep;
  rep.kind = kind;
  rep.samples = samples.size();
  for (int b = 0; b < 64; ++b) {
    std::array<bool, 6> bd{};
    for (int e = 0; e < 6; ++e) bd[size_t(e)] = (b >> e) & 1;
    ++rep.boundaries_checked;
    for (size_t s = 0; s < samples.size(); ++s) {
      auto [l, r] = ybe_sides(kind, bd, samples[s].first, samples[s].second);
      if (l != r) rep.violations.push_back({bd, s, l, r});
    }
  }
  return rep;
}

// ---- commutation -------------------------------------------------------------

namespace {

// Every partition with at most `len` parts, each at most `cap`.
void partitions_in_box(int len, int cap, std::vector<int>& cur,
                       const std::function<void(const Partition&)>& f) {
  f(Partition(cur));
  if (static_cast<int>(cur.size()) == len) return;
  int top = cur.empty() ? cap : cur.back();
  for (int v = 1; v <= top; ++v) {
    cur.push_back(v);
    partitions_in_box(len, cap, cur, f);
    cur.pop_back();
  }
}

std::optional<Rational> two_rows(RowKind lower, const Rational& xl, RowKind upper,
                                 const Rational& xu, const Partition& mu, int c0,
                                 const Partition& nu, int c1, const Partition& lambda, int c2,
                                 int lo, int hi) {
  auto r1 = fill_row(lower, interface_occupancy(mu, c0, lo, hi), interface_occupancy(nu, c1, lo, hi));
  if (!r1) return std::nullopt;
  auto r2 = fill_row(upper, interface_occupancy(nu, c1, lo, hi),
                     interface_occupancy(lambda, c2, lo, hi));
  if (!r2) return std::nullopt;
  return row_product(lower, *r1, xl) * row_product(upper, *r2, xu);
}

}  // namespace

CommutationReport verify_commutation(const Partition& mu, const Partition& lambda,
                                     const Rational& x, const Rational& y, int window,
                                     int paths) {
  int P = paths >= 0 ? paths : std::max(mu.length(), lambda.length() + 1);
  if (mu.length() > P || lambda.length() > P - 1 || P < 1)
    throw Error("boundaries do not fit the requested number of paths");
  int m = std::max(mu.part(1), lambda.part(1));
  if (window < m + 3) throw Error("window too narrow for the commutation check");
  const int lo = -P, hi = window;
  CommutationReport rep;
  rep.gray_below = 0;
  rep.white_below_scaled = 0;
  std::vector<int> cur;

  // Gray x below white y: the middle interface has P-1 paths and is
  // contained in both boundaries, so the sum is finite.
  partitions_in_box(P - 1, std::min(mu.part(1), lambda.part(1)), cur, [&](const Partition& nu) {
    if (auto w = two_rows(RowKind::Gray, x, RowKind::White, y, mu, 0, nu, -1, lambda, -1, lo, hi))
      rep.gray_below += *w;
  });

  // White y below gray x: the first part of the middle interface is free
  // above m. Sum the remaining parts at nu_1 = m and check that one more
  // unit costs exactly xy, so the full sum is this partial sum / (1 - xy).
  partitions_in_box(P - 1, std::min(mu.part(1), lambda.part(1)), cur, [&](const Partition& rest) {
    std::vector<int> at_m{m}, at_m1{m + 1};
    at_m.insert(at_m.end(), rest.parts().begin(), rest.parts().end());
    at_m1.insert(at_m1.end(), rest.parts().begin(), rest.parts().end());
    auto w0 = two_rows(RowKind::White, y, RowKind::Gray, x, mu, 0, Partition(at_m), 0, lambda, -1,
                       lo, hi);
    auto w1 = two_rows(RowKind::White, y, RowKind::Gray, x, mu, 0, Partition(at_m1), 0, lambda, -1,
                       lo, hi);
    if (w0.has_value() != w1.has_value() || (w0 && *w1 != *w0 * x * y)) rep.tail_ratio_ok = false;
    if (w0) rep.white_below_scaled += *w0;
  });
  return rep;
}

}  // namespace rppvm
