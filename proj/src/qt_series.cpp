// SPDX-License-Identifier: MIT
#include "rppvm/qt_series.hpp"

#include <sstream>

namespace rppvm {

QTSeries::QTSeries(int trunc_q) : trunc_q_(trunc_q) {
  if (trunc_q < 0) throw Error("series truncation must be nonnegative");
}

QTSeries QTSeries::one(int trunc_q) {
  QTSeries s(trunc_q);
  s.add_term(0, 0, 1);
  return s;
}

BigInt QTSeries::coeff(int n, int k) const {
  auto it = coeffs_.find({n, k});
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

BigInt QTSeries::q_coeff(int n) const {
  BigInt total = 0;
  for (auto it = coeffs_.lower_bound({n, 0}); it != coeffs_.end() && it->first.first == n; ++it)
    total += it->second;
  return total;
}

void QTSeries::add_term(int n, int k, const BigInt& c) {
  if (n < 0 || k < 0) throw Error("series exponents must be nonnegative");
  if (n > trunc_q_ || c == 0) return;
  BigInt& slot = coeffs_[{n, k}];
  slot += c;
  if (slot == 0) coeffs_.erase({n, k});
}

QTSeries QTSeries::slice_at_t_zero() const {
  QTSeries out(trunc_q_);
  for (const auto& [key, c] : coeffs_)
    if (key.second == 0) out.add_term(key.first, 0, c);
  return out;
}

QTSeries operator+(const QTSeries& a, const QTSeries& b) {
  if (a.trunc_q_ != b.trunc_q_) throw Error("mismatched series truncation");
  QTSeries out = a;
  for (const auto& [key, c] : b.coeffs_) out.add_term(key.first, key.second, c);
  return out;
}

QTSeries operator*(const QTSeries& a, const QTSeries& b) {
  if (a.trunc_q_ != b.trunc_q_) throw Error("mismatched series truncation");
  QTSeries out(a.trunc_q_);
  for (const auto& [ka, ca] : a.coeffs_)
    for (const auto& [kb, cb] : b.coeffs_) {
      if (ka.first + kb.first > out.trunc_q_) break;  // b is sorted by q-degree
      out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    }
  return out;
}

QTSeries mul(const QTSeries& a, const QTSeries& b) { return a * b; }

QTSeries geometric_inverse(int a, int b, int N) {
  if (a < 1) throw Error("geometric_inverse needs a positive q-exponent");
  if (b < 0) throw Error("geometric_inverse needs a nonnegative t-exponent");
  QTSeries s(N);
  for (int m = 0; a * m <= N; ++m) s.add_term(a * m, b * m, 1);
  return s;
}

QTSeries hook_product_single(const Partition& lambda, int N) {
  QTSeries s = QTSeries::one(N);
  for (const Cell& c : lambda.cells()) s = s * geometric_inverse(hook(lambda, c), 0, N);
  return s;
}

QTSeries hook_product_pair(const Partition& lambda, int N) {
  QTSeries s = QTSeries::one(N);
  for (const Cell& c : lambda.cells()) {
    int h = hook(lambda, c);
    s = s * geometric_inverse(h, 0, N) * geometric_inverse(h, 1, N);
  }
  return s;
}

std::string to_string(const QTSeries& s) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : s.coeffs()) {
    if (!first) os << " + ";
    first = false;
    bool bare = key.first == 0 && key.second == 0;
    std::string mono = bare ? "" : to_string(Monomial{key.first, key.second}, "q", "t");
    if (bare)
      os << c;
    else if (c == 1)
      os << mono;
    else
      os << c << ' ' << mono;
  }
  if (first) os << '0';
  os << " + O(q^" << s.trunc_q() + 1 << ')';
  return os.str();
}

}  // namespace rppvm
