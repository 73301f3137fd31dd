// SPDX-License-Identifier: MIT
// Integer partitions and Young-diagram geometry in French coordinates:
// row 1 is the bottom row, column 1 the leftmost, both 1-based.
#pragma once

#include <compare>
#include <string>
#include <vector>

#include "rppvm/exact.hpp"  // Error

namespace rppvm {

struct Cell {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const Cell&, const Cell&) = default;
  int content() const { return col - row; }
};

class Partition {
 public:
  Partition() = default;
  // Accepts trailing zeros and drops them; rejects negative or increasing
  // entries.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  // 1-based, zero beyond the stored length.
  int part(int i) const {
    return i >= 1 && i <= length() ? parts_[static_cast<size_t>(i - 1)] : 0;
  }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  bool contains(const Cell& c) const {
    return c.row >= 1 && c.col >= 1 && c.col <= part(c.row);
  }
  // Cells ordered row by row from the bottom, left to right.
  std::vector<Cell> cells() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

std::string to_string(const Partition& p);

Partition conjugate(const Partition& lambda);

// All partitions of n, largest first in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);
// All nonempty partitions of size 1..n, by size then as above.
std::vector<Partition> partitions_up_to(int n);

// mu ⪯ lambda: lambda_1 ≥ mu_1 ≥ lambda_2 ≥ mu_2 ≥ ... with zero extension.
bool interlaces(const Partition& mu, const Partition& lambda);

int arm(const Partition& lambda, const Cell& c);
int leg(const Partition& lambda, const Cell& c);
int hook(const Partition& lambda, const Cell& c);

// Particle/hole reading of the Russian profile. Site s of the window sits
// at offset s - half_width + 1/2 from the center; the i-th particle of
// lambda lies at offset lambda_i - i + 1/2.
struct MayaDiagram {
  int half_width = 0;
  std::vector<bool> sites;  // true = particle

  // Offset k + 1/2 for integer k.
  bool particle_at(int k) const;
  int center_index() const { return half_width; }
};

MayaDiagram maya(const Partition& lambda, int half_width);
// Smallest half_width accepted by maya().
int maya_min_half_width(const Partition& lambda);
// Inverse of maya(): each particle contributes the number of holes to its
// left. Throws if the window tails are not constant.
Partition partition_from_maya(const MayaDiagram& m);
// "●○●|○..." with the bar at the center.
std::string to_string(const MayaDiagram& m);

struct BorderStrip {
  int index = 0;            // 1 = outermost
  std::vector<Cell> cells;  // top-left end first
};

// Index of the border strip containing c: the largest m with
// (row+m-1, col+m-1) still inside lambda.
int strip_index(const Partition& lambda, const Cell& c);
std::vector<BorderStrip> border_strips(const Partition& lambda);

}  // namespace rppvm
