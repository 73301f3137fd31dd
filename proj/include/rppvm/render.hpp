// SPDX-License-Identifier: MIT
// Static pictures. Output is a pure function of the input: no timestamps,
// no locale-dependent number formatting, and a fixed element order.
#pragma once

#include <string>

#include "rppvm/coupling.hpp"
#include "rppvm/partitions.hpp"
#include "rppvm/rpp.hpp"

namespace rppvm {

// "…●●○|○…" over the window of the given half width (0 picks the smallest
// window with one spare site on each side).
std::string render_maya_ascii(const Partition& lambda, int half_width = 0);
std::string render_maya_svg(const Partition& lambda, int half_width = 0);

// Stacks of unit cubes seen from the low corner: one top lozenge per cell
// plus the unit wall lozenges where the filling steps up. The zero filling
// draws only the tops.
std::string render_tiling_svg(const RPP& r);

// Lozenge field in slice coordinates: one text row per column of the vertex
// picture (top row = rightmost column), one character per strip. '/' is a
// rising tile, '\' a falling one and '=' a flat one. Coupled pairs, when a
// partner color is given, show as '*'.
std::string render_tiling_ascii(const RPP& r);
std::string render_pair_ascii(const PairRPP& p);

// Both colors' border-strip paths drawn over each other in slice
// coordinates, with each coupled pair marked by an element of class
// "coupled".
std::string render_pair_svg(const PairRPP& p);

}  // namespace rppvm
