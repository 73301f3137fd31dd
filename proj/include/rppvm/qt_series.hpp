// SPDX-License-Identifier: MIT
// Truncated bivariate power series in q and t with exact integer
// coefficients. Only q is truncated; t-degrees are kept as they come.
#pragma once

#include <map>
#include <string>
#include <utility>

#include "rppvm/exact.hpp"
#include "rppvm/partitions.hpp"

namespace rppvm {

class QTSeries {
 public:
  using Key = std::pair<int, int>;  // (q-degree, t-degree)

  explicit QTSeries(int trunc_q);
  static QTSeries one(int trunc_q);

  int trunc_q() const { return trunc_q_; }
  const std::map<Key, BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(int n, int k) const;
  // Sum over k of the coefficient of q^n t^k.
  BigInt q_coeff(int n) const;

  // Terms with n > trunc_q are dropped silently; this is what truncation
  // means.
  void add_term(int n, int k, const BigInt& c);

  QTSeries slice_at_t_zero() const;

  friend bool operator==(const QTSeries&, const QTSeries&) = default;
  friend QTSeries operator+(const QTSeries& a, const QTSeries& b);
  friend QTSeries operator*(const QTSeries& a, const QTSeries& b);

 private:
  int trunc_q_;
  std::map<Key, BigInt> coeffs_;
};

QTSeries mul(const QTSeries& a, const QTSeries& b);
// 1/(1 - q^a t^b) truncated at q^N.
QTSeries geometric_inverse(int a, int b, int N);
QTSeries hook_product_single(const Partition& lambda, int N);
QTSeries hook_product_pair(const Partition& lambda, int N);

// "1 + 2q + q^2 t" style rendering for humans.
std::string to_string(const QTSeries& s);

}  // namespace rppvm
