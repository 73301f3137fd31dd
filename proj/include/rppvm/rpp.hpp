// SPDX-License-Identifier: MIT
// Reverse plane partitions and their reading along diagonal slices.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rppvm/partitions.hpp"

namespace rppvm {

// Filling of a Young diagram by nonnegative integers, weakly increasing
// along rows (left to right) and columns (bottom to top). rows[0] is the
// bottom row.
class RPP {
 public:
  RPP() = default;

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int at(const Cell& c) const {
    return rows_[static_cast<size_t>(c.row - 1)][static_cast<size_t>(c.col - 1)];
  }
  // Zero outside the diagram; handy for the shift maps of sliding.
  int at_or_zero(const Cell& c) const { return shape_.contains(c) ? at(c) : 0; }
  int volume() const;
  // Rows bottom-up, concatenated. Defines the enumeration order.
  std::vector<int> reading_word() const;

  friend bool operator==(const RPP&, const RPP&) = default;
  friend RPP validate(const Partition& shape, std::vector<std::vector<int>> rows);

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

RPP validate(const Partition& shape, std::vector<std::vector<int>> rows);
RPP zero_rpp(const Partition& shape);
std::string to_string(const RPP& r);

// ⪯ and ⪰ between consecutive slices.
enum class Rel { Below, Above };
inline const char* symbol(Rel r) { return r == Rel::Below ? "⪯" : "⪰"; }

// Relations I_0..I_n for n = lambda_1 + lambda'_1 - 1: I_k is ⪯ exactly when
// the Maya diagram of lambda has a hole at offset -lambda'_1 + k + 1/2.
std::vector<Rel> interaction_pattern(const Partition& lambda);
// Inverse of interaction_pattern; throws if the word is not of that form.
Partition shape_from_pattern(const std::vector<Rel>& pattern);

struct SliceSequence {
  std::vector<Rel> pattern;        // I_0..I_n
  std::vector<Partition> slices;   // lambda^(0) = ∅, ..., lambda^(n+1) = ∅
  friend bool operator==(const SliceSequence&, const SliceSequence&) = default;
};

std::string to_string(const SliceSequence& s);

// Number of cells of lambda on slice k (content -lambda'_1 + k).
int diagonal_length(const Partition& lambda, int k);

SliceSequence to_slices(const RPP& r);
RPP from_slices(const SliceSequence& s);

// Every RPP of the shape with volume ≤ N, sorted by reading word. Built
// slice by slice along the interlacing chain.
std::vector<RPP> enumerate(const Partition& lambda, int N);
void for_each_rpp(const Partition& lambda, int N, const std::function<void(const RPP&)>& f);

}  // namespace rppvm
