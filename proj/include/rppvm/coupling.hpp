// SPDX-License-Identifier: MIT
// Two-color vertex model (blue = color 1, red = color 2), the interaction
// statistic g of a pair of RPPs, and the pair generating function.
#pragma once

#include <array>
#include <string>
#include <optional>
#include <utility>
#include <vector>

#include "rppvm/qt_series.hpp"
#include "rppvm/rpp.hpp"
#include "rppvm/vertex_model.hpp"

namespace rppvm {

struct ColoredVertexState {
  VertexState blue, red;
  friend bool operator==(const ColoredVertexState&, const ColoredVertexState&) = default;
};

// L_{x t^δ}(blue) L_x(red) with δ = 1 when any red path touches the vertex:
// a blue path leaving to the right pays t if red is present.
template <class V>
V colored_white_weight(const ColoredVertexState& s, const V& x, const V& t) {
  bool red_present = s.red != states::empty;
  return white_weight(s.blue, red_present ? x * t : x) * white_weight(s.red, x);
}

// Gray vertex types as used by the per-color gray factorization.
// 1 empty, 2 turn-right, 3 horizontal, 4 vertical, 5 turn-up.
int gray_type(const VertexState& v);

// Per-color product. Color i gets x t^{α_i+β_i} for types 1, 4, 5 and t^{β_i}
// for types 2, 3; α_i counts higher colors of type 1 and β_i higher colors
// of type 4 or 5. Only blue has a higher color.
template <class V>
V colored_gray_from_types(const ColoredVertexState& s, const V& x, const V& t) {
  auto factor = [&](const VertexState& v, int alpha, int beta) {
    int ty = gray_type(v);
    bool with_x = ty == 1 || ty == 4 || ty == 5;
    return with_x ? x * power(t, alpha + beta) : power(t, beta);
  };
  int red_ty = gray_type(s.red);
  int alpha = red_ty == 1 ? 1 : 0;
  int beta = red_ty == 4 || red_ty == 5 ? 1 : 0;
  return factor(s.blue, alpha, beta) * factor(s.red, 0, 0);
}

// Exponents (of x, of t) of the two-color gray table, [blue][red] in the
// order of states::all, exactly as tabulated.
const std::array<std::array<std::pair<int, int>, 5>, 5>& gray_table_verbatim();

template <class V>
V colored_gray_from_table(const ColoredVertexState& s, const V& x, const V& t) {
  auto [ex, et] = gray_table_verbatim()[size_t(state_index(s.blue))][size_t(state_index(s.red))];
  return power(x, ex) * power(t, et);
}

// Throws if the tabulated gray weights and the type factorization disagree
// anywhere. Called once before the first gray weight is handed out.
void check_gray_table_consistency();

template <class V>
V colored_gray_weight(const ColoredVertexState& s, const V& x, const V& t) {
  static const bool checked = (check_gray_table_consistency(), true);
  (void)checked;
  return colored_gray_from_types(s, x, t);
}

template <class V>
V colored_row_vertex_weight(RowKind k, const ColoredVertexState& s, const V& x, const V& t) {
  return k == RowKind::White ? colored_white_weight(s, x, t) : colored_gray_weight(s, x, t);
}

struct ColoredCrossState {
  CrossState blue, red;
};

// R_{z/t^r}(blue) R_z(red), r = 1 when red runs alone from a to d.
template <class V>
V colored_cross_weight(const ColoredCrossState& s, const V& z, const V& t) {
  V zb = nw_se_alone(s.red) ? z * inv(t) : z;
  return cross_weight(s.blue, zb) * cross_weight(s.red, z);
}

// Row weight of a two-color row, computed vertex by vertex with the same
// window convention as row_weight_explicit.
template <class V>
std::optional<V> colored_row_weight_explicit(RowKind kind, const std::pair<Partition, Partition>& mu,
                                             const std::pair<Partition, Partition>& lambda,
                                             const V& x, const V& t, int ell, int window);

// Colored YBE. Each boundary edge carries a subset of {blue, red}, encoded
// as bit 0 = blue, bit 1 = red, in the order i1, i2, i3, j1, j2, j3.
using ColoredBoundary = std::array<int, 6>;

struct ColoredYbeSample {
  Rational x, y, t;
};

struct ColoredYbeDiscrepancy {
  ColoredBoundary boundary{};
  size_t sample = 0;
  Rational lhs, rhs;
};

// Spectral parameter of the colored cross. Ratio is y/x, Product is yx,
// ProductT is yxt. The two-color gray vertex equals x^2 t times a white vertex
// at 1/(xt), which is why ProductT appears for the white-gray equation.
enum class CrossParam { Ratio, Product, ProductT };
CrossParam default_cross_param(YbeKind kind);  // Ratio for white-white, Product for white-gray
Rational cross_param_value(CrossParam p, const ColoredYbeSample& s);
std::string to_string(CrossParam p);

struct ColoredYbeReport {
  YbeKind kind{};
  CrossParam param{};
  size_t samples = 0;
  size_t boundaries_checked = 0;
  std::vector<ColoredYbeDiscrepancy> violations;
  bool ok() const { return violations.empty(); }
};

std::pair<Rational, Rational> colored_ybe_sides(YbeKind kind, const ColoredBoundary& b,
                                                const ColoredYbeSample& s, CrossParam param);
ColoredYbeReport verify_colored_ybe(YbeKind kind, const std::vector<ColoredYbeSample>& samples,
                                    CrossParam param);
inline ColoredYbeReport verify_colored_ybe(YbeKind kind,
                                           const std::vector<ColoredYbeSample>& samples) {
  return verify_colored_ybe(kind, samples, default_cross_param(kind));
}

// ---- pairs of RPPs ----------------------------------------------------------

struct PairRPP {
  Partition shape;
  RPP blue, red;
  friend bool operator==(const PairRPP&, const PairRPP&) = default;
};

PairRPP make_pair_rpp(const RPP& blue, const RPP& red);

// w(C) with x_i = q^{±i}; Monomial.a is the q-exponent, .b the t-exponent.
Monomial pair_config_weight(const PairRPP& p);
// t-degree of pair_config_weight minus ℓ(ℓ-1)/2.
int g_via_vertex(const PairRPP& p);

// Lozenge seen across the right edge of one column inside a strip between
// two slices. Rising: the tile climbs from left slice to right slice (no
// path crossing in the vertex picture). Falling: the tile drops half a unit
// (a path moves one column right). Flat: half of a horizontal lozenge
// centered on the right slice (a particle there).
enum class Lozenge { Rising, Falling, Flat };

struct CoupledPair {
  int strip = 0;   // 1..n+1, between slices strip-1 and strip
  int column = 0;  // absolute column
  int type = 0;    // 1..4
};

// Per-color lozenge classification straight from a slice sequence.
struct LozengeField {
  std::vector<Rel> pattern;
  int lo = 0, hi = 0;
  std::vector<int> centers;
  std::vector<std::vector<int>> particles;  // per slice, absolute columns, path order
  Lozenge at(int strip, int column) const;
};

LozengeField lozenge_field(const Partition& shape, const SliceSequence& s, int hi);
// Common right end of the window for the two colors of a pair.
int pair_window_hi(const SliceSequence& blue, const SliceSequence& red);
std::vector<CoupledPair> coupled_pairs(const PairRPP& p);
int g_via_lozenges(const PairRPP& p);

// Σ q^{|Λ|+|Λ'|} t^{g} over pairs with total volume ≤ N; jobs > 1 splits the
// blue RPPs across threads.
QTSeries pair_genfun_bruteforce(const Partition& lambda, int N, int jobs = 1);
// Σ q^{|Λ|} over RPPs of volume ≤ N.
QTSeries single_genfun_bruteforce(const Partition& lambda, int N);

}  // namespace rppvm
