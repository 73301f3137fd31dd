// SPDX-License-Identifier: MIT
// The t = 0 regime: border-strip paths, the constraints that make a pair
// free of coupled lozenges, and the sliding bijection onto single RPPs.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rppvm/coupling.hpp"
#include "rppvm/rpp.hpp"

namespace rppvm {

// One color's border-strip paths. Path i (1 = outermost strip, drawn
// highest) sits at slice k on column C_k + h - i of the vertex picture,
// where h is the entry of strip i on that diagonal (0 off the strip) and
// C_k is the slice center. Each gray strip moves the center one column left.
struct PathFamily {
  Partition shape;
  std::vector<Rel> pattern;
  std::vector<int> centers;              // C_0 .. C_{n+1}
  std::vector<std::vector<int>> heights;  // heights[i-1][k]
  int count() const { return static_cast<int>(heights.size()); }
  int column(int i, int k) const;        // any i ≥ 1, zero height past count()
  // Integer polyline: slice k at (2k, 4·column + 2k + 2); inside strip k the
  // path runs one diagonal unit, a vertical run at x = 2k - 1, one diagonal
  // unit.
  std::vector<std::pair<int, int>> polyline(int i) const;
};

struct ColoredPathSystem {
  PathFamily blue, red;
};

PathFamily paths_of(const RPP& r);
ColoredPathSystem paths_of(const PairRPP& p);

// Which constraint failed first, for diagnostics. Empty when none did.
struct T0Violation {
  int path = 0;
  int strip = 0;  // slice index for slice checks, strip index for mid-strip checks
  const char* rule = nullptr;
};

// Blue path i weakly below red path i without a common vertical run, and
// strictly above red path i+1.
std::optional<T0Violation> t0_violation(const PairRPP& p);
inline bool check_t0_constraints(const PairRPP& p) { return !t0_violation(p).has_value(); }

// Entries that sliding pushes off the diagram: blue strip i and red strip
// i+1 in the first i rows or columns. All must be zero when t = 0.
std::vector<Cell> nonzero_forced_cells(const PairRPP& p);

// Red strip i fills strip 2i-1 after moving i-1 steps down-left; blue strip
// i fills strip 2i after moving i steps. Throws if p violates the
// constraints or has a nonzero entry in a forced-zero cell.
RPP slide(const PairRPP& p);
// Alternate coloring of the strips of r, shifted back up-right and padded
// with zeros.
PairRPP unslide(const RPP& r);

struct T0CountReport {
  Partition shape;
  int N = 0;
  std::vector<long long> g0_pairs;      // by total volume 0..N
  std::vector<long long> rpps;
  std::vector<long long> single_series;  // coefficients of hook_product_single
  std::vector<long long> pair_series_t0; // t^0 coefficients of hook_product_pair
  bool ok() const {
    return g0_pairs == rpps && rpps == single_series && single_series == pair_series_t0;
  }
};

T0CountReport verify_t0_counting(const Partition& lambda, int N);

}  // namespace rppvm
