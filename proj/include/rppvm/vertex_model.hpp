// SPDX-License-Identifier: MIT
// One-color five-vertex model: white, gray and cross vertices, row
// transfer weights, Yang-Baxter checks and the RPP ↔ configuration map.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rppvm/exact.hpp"
#include "rppvm/partitions.hpp"
#include "rppvm/rpp.hpp"

namespace rppvm {

struct VertexState {
  bool bottom = false, left = false, top = false, right = false;
  friend bool operator==(const VertexState&, const VertexState&) = default;
};

namespace states {
inline constexpr VertexState empty{false, false, false, false};
inline constexpr VertexState vertical{true, false, true, false};
inline constexpr VertexState horizontal{false, true, false, true};
inline constexpr VertexState turn_right{true, false, false, true};  // in bottom, out right
inline constexpr VertexState turn_up{false, true, true, false};     // in left, out top
// Table order used by every weight table in the library.
inline constexpr std::array<VertexState, 5> all{empty, vertical, horizontal, turn_right, turn_up};
}  // namespace states

bool allowed(const VertexState& v);
int state_index(const VertexState& v);  // position in states::all
std::string state_name(const VertexState& v);

enum class RowKind { White, Gray };
inline RowKind row_kind(Rel r) { return r == Rel::Below ? RowKind::White : RowKind::Gray; }

// White: x exactly when the path leaves through the right edge.
template <class V>
V white_weight(const VertexState& v, const V& x) {
  if (!allowed(v)) throw Error("disallowed vertex state " + state_name(v));
  return v.right ? x : unit_like(x);
}

// Gray is the complement: 1 where white has x and x where white has 1.
template <class V>
V gray_weight(const VertexState& v, const V& x) {
  if (!allowed(v)) throw Error("disallowed vertex state " + state_name(v));
  return v.right ? unit_like(x) : x;
}

template <class V>
V row_vertex_weight(RowKind k, const VertexState& v, const V& x) {
  return k == RowKind::White ? white_weight(v, x) : gray_weight(v, x);
}

// Cross vertex ends: a left-top, b left-bottom, c right-top, d right-bottom.
struct CrossState {
  bool a = false, b = false, c = false, d = false;
  friend bool operator==(const CrossState&, const CrossState&) = default;
};
bool allowed(const CrossState& s);
// The straight strand from a to d, alone.
inline bool nw_se_alone(const CrossState& s) { return s.a && s.d && !s.b && !s.c; }

template <class V>
V cross_weight(const CrossState& s, const V& z) {
  if (!allowed(s)) throw Error("disallowed crossing state");
  V one = unit_like(z);
  if (!s.a && !s.b) return one;              // empty
  if (s.a && s.b) return z;                  // both strands
  if (s.a && s.d) return one - z;            // a to d
  if (s.a) return z;                         // a to c
  return one;                                // b to d
}

// ---- rows -----------------------------------------------------------------

// Occupancy of one row interface on absolute columns [lo, hi). The Maya
// center sits between columns center-1 and center; the interface carries
// center - lo particles, the i-th at column center + mu_i - i.
std::vector<bool> interface_occupancy(const Partition& mu, int center, int lo, int hi);

// Unique filling of a row given bottom and top occupancy. No path enters on
// the left; a white row has no right exit, a gray row exactly one. Returns
// nothing if no filling exists.
std::optional<std::vector<VertexState>> fill_row(RowKind kind, const std::vector<bool>& bottom,
                                                 const std::vector<bool>& top);

template <class V>
V row_product(RowKind kind, const std::vector<VertexState>& row, const V& x) {
  V w = unit_like(x);
  for (const auto& v : row) w = w * row_vertex_weight(kind, v, x);
  return w;
}

// Closed forms: white x^{|λ|-|μ|} if μ ⪯ λ, gray x^{|μ|-|λ|+ℓ} if λ ⪯ μ.
// ℓ counts columns left of the top Maya center.
template <class V>
std::optional<V> row_weight_closed(RowKind kind, const Partition& mu, const Partition& lambda,
                                   const V& x, int ell) {
  if (kind == RowKind::White) {
    if (!interlaces(mu, lambda)) return std::nullopt;
    return power(x, lambda.size() - mu.size());
  }
  if (!interlaces(lambda, mu)) return std::nullopt;
  return power(x, mu.size() - lambda.size() + ell);
}

// Vertex-by-vertex weight on columns [-ell, window) relative to the top
// center. The bottom center is the top center for white rows and one column
// to its right for gray rows. Throws if the window cannot hold the
// boundaries.
template <class V>
std::optional<V> row_weight_explicit(RowKind kind, const Partition& mu, const Partition& lambda,
                                     const V& x, int ell, int window);

// ---- configurations -------------------------------------------------------

struct VertexConfig {
  Partition shape;
  std::vector<RowKind> kinds;         // bottom-up, row i is kinds[i-1]
  std::vector<Partition> interfaces;  // interface k sits above row k
  std::vector<int> centers;           // absolute Maya center of each interface
  int lo = 0, hi = 0;                 // window columns [lo, hi)
  std::vector<std::vector<VertexState>> states;  // [row][column - lo]
};

// min_hi widens the window, so two colors can share one column range.
VertexConfig config_from_slices(const Partition& shape, const SliceSequence& s, int min_hi = 0);
VertexConfig rpp_to_config(const RPP& r);

// Per-row exponents e_i with w(C) = prod x_i^{e_i}; read vertex by vertex.
std::vector<int> row_exponents(const VertexConfig& c);
// Exponent of q in x_i = q^{+i} (gray row i) or q^{-i} (white row i).
int specialization_exponent(RowKind kind, int row);
Monomial config_weight_q(const RPP& r);  // Monomial.a is the q-exponent
Monomial A_lambda(const Partition& lambda);

// ---- Yang-Baxter and commutation ------------------------------------------

enum class YbeKind { WhiteWhite, WhiteGray };

struct YbeDiscrepancy {
  std::array<bool, 6> boundary{};  // i1, i2, i3, j1, j2, j3
  size_t sample = 0;
  Rational lhs, rhs;
};

struct YbeReport {
  YbeKind kind{};
  size_t samples = 0;
  size_t boundaries_checked = 0;
  std::vector<YbeDiscrepancy> violations;
  bool ok() const { return violations.empty(); }
};

// Both sides of the YBE for one boundary. Left: the cross feeds the left
// edges of the top (y) and bottom (x) vertices; right: the vertices come
// first (bottom y, top x) and feed the cross. White-gray uses a gray vertex
// for the x parameter on both sides.
std::pair<Rational, Rational> ybe_sides(YbeKind kind, const std::array<bool, 6>& boundary,
                                        const Rational& x, const Rational& y);
YbeReport verify_ybe(YbeKind kind, const std::vector<std::pair<Rational, Rational>>& samples);

struct CommutationReport {
  Rational gray_below;         // gray x under white y, exit right from the bottom row
  Rational white_below_scaled; // (1 - xy) · (white y under gray x)
  bool tail_ratio_ok = true;   // each extra unit of the free top part costs exactly xy
  bool ok() const { return tail_ratio_ok && gray_below == white_below_scaled; }
};

// Two-row commutation with bottom boundary mu and top boundary lambda. The
// bottom interface has `paths` particles (default max(ℓ(μ), ℓ(λ)+1)); the
// window extends `window` columns right of the bottom center.
CommutationReport verify_commutation(const Partition& mu, const Partition& lambda,
                                     const Rational& x, const Rational& y, int window,
                                     int paths = -1);

}  // namespace rppvm
