// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "oracles/oracles.hpp"
#include "rppvm/vertex_model.hpp"

using namespace rppvm;

namespace {
const Monomial X{1, 0};
Monomial xpow(int e) { return {e, 0}; }
}  // namespace

TEST_CASE("single vertex weights") {
  CHECK(white_weight(states::empty, X) == xpow(0));
  CHECK(white_weight(states::turn_right, X) == xpow(1));
  CHECK(white_weight(states::vertical, X) == xpow(0));
  CHECK(white_weight(states::horizontal, X) == xpow(1));
  CHECK(gray_weight(states::empty, X) == xpow(1));
  CHECK(gray_weight(states::horizontal, X) == xpow(0));
  const Rational x(3, 7);
  for (const auto& v : states::all) CHECK(gray_weight(v, x) == x * white_weight(v, Rational(1) / x));
  CHECK_THROWS_AS(white_weight(VertexState{true, true, false, false}, X), Error);
  int allowed_count = 0;
  for (int m = 0; m < 16; ++m) allowed_count += allowed(VertexState{bool(m & 1), bool(m & 2), bool(m & 4), bool(m & 8)});
  CHECK(allowed_count == 5);
}

TEST_CASE("cross weights") {
  const Rational z(2, 9);
  CHECK(cross_weight(CrossState{}, z) == 1);
  CHECK(cross_weight(CrossState{true, false, false, true}, z) == 1 - z);  // a to d alone
  CHECK(cross_weight(CrossState{true, true, true, true}, z) == z);
  CHECK(cross_weight(CrossState{true, false, true, false}, z) == z);
  CHECK(cross_weight(CrossState{false, true, false, true}, z) == 1);
  CHECK_FALSE(allowed(CrossState{false, true, true, false}));
}

TEST_CASE("row weights") {
  CHECK(*row_weight_explicit(RowKind::White, Partition{1, 1}, Partition{3, 1, 1}, X, 3, 6) == xpow(3));
  CHECK(*row_weight_explicit(RowKind::Gray, Partition{3, 1, 1}, Partition{2, 1}, X, 4, 7) == xpow(6));
  CHECK(*row_weight_explicit(RowKind::White, Partition{2, 1}, Partition{2, 1}, X, 3, 6) == xpow(0));
  CHECK_FALSE(row_weight_explicit(RowKind::White, Partition{2}, Partition{1}, X, 3, 6).has_value());
  // Explicit vertex products agree with the closed forms everywhere.
  std::vector<Partition> ps{Partition{}};
  for (auto& p : partitions_up_to(4)) ps.push_back(p);
  for (const auto& mu : ps)
    for (const auto& la : ps)
      for (RowKind k : {RowKind::White, RowKind::Gray}) {
        auto e = row_weight_explicit(k, mu, la, X, 5, 8);
        auto c = row_weight_closed(k, mu, la, X, 5);
        REQUIRE(e.has_value() == c.has_value());
        if (e) CHECK(*e == *c);
      }
}

TEST_CASE("configuration weights") {
  RPP ex = validate(Partition{4, 3, 1}, {{0, 1, 3, 4}, {1, 1, 4}, {3}});
  VertexConfig c = rpp_to_config(ex);
  // x1^3 x2^4 x4^4 x5^3 x6 x7^4; this is the value that satisfies the
  // volume identity below.
  CHECK(row_exponents(c) == std::vector<int>{3, 4, 0, 4, 3, 1, 4});
  CHECK(config_weight_q(ex) == Monomial{26, 0});
  CHECK(A_lambda(Partition{4, 3, 1}) == Monomial{-9, 0});
  CHECK(A_lambda(Partition{}) == Monomial{0, 0});
  CHECK(A_lambda(Partition{1}) == Monomial{0, 0});
  CHECK(config_weight_q(ex) * A_lambda(ex.shape()) == Monomial{ex.volume(), 0});
  CHECK(config_weight_q(zero_rpp(Partition{})) == Monomial{0, 0});
  for (int n = 0; n <= 5; ++n)
    CHECK(config_weight_q(validate(Partition{1}, {{n}})) == Monomial{n, 0});
  for (const auto& lam : partitions_up_to(5))
    CHECK(config_weight_q(zero_rpp(lam)) * A_lambda(lam) == Monomial{0, 0});
}

TEST_CASE("raising one entry multiplies the weight by q") {
  for (const auto& lam : partitions_up_to(4))
    for (const RPP& r : enumerate(lam, 4)) {
      const Monomial w = config_weight_q(r);
      for (const Cell& cell : lam.cells()) {
        oracle::Filling f = r.rows();
        if (!oracle::increment(lam.parts(), f, cell.row, cell.col)) continue;
        CHECK(config_weight_q(validate(lam, f)) == w * Monomial{1, 0});
      }
    }
}

TEST_CASE("Yang-Baxter equation, one color") {
  const Rational x(2, 3), y(1, 5);
  // i1 = j2 = 1, everything else empty.
  auto [l, r] = ybe_sides(YbeKind::WhiteWhite, {true, false, false, false, true, false}, x, y);
  CHECK(l == y);
  CHECK(r == y);
  auto [l0, r0] = ybe_sides(YbeKind::WhiteWhite, {}, x, y);
  CHECK(l0 == r0);
  CHECK(l0 == 1);
  for (YbeKind k : {YbeKind::WhiteWhite, YbeKind::WhiteGray}) {
    YbeReport rep = verify_ybe(k, {{x, y}, {Rational(-5, 2), Rational(7, 3)}});
    CHECK(rep.boundaries_checked == 64);
    CHECK(rep.ok());
  }
  // The sweep is not vacuous: some boundary carries nonzero weight.
  bool some_nonzero = false;
  for (int m = 0; m < 64; ++m) {
    std::array<bool, 6> b{};
    for (int i = 0; i < 6; ++i) b[size_t(i)] = m >> i & 1;
    auto [a, c] = ybe_sides(YbeKind::WhiteGray, b, x, y);
    some_nonzero = some_nonzero || a != 0;
  }
  CHECK(some_nonzero);
}

TEST_CASE("gray and white rows commute up to (1 - xy)") {
  const Rational x(1, 2), y(1, 3);
  CHECK(verify_commutation(Partition{}, Partition{}, x, y, 6).ok());
  CommutationReport one = verify_commutation(Partition{1}, Partition{1}, x, y, 8);
  CHECK(one.ok());
  CHECK(one.gray_below != 0);
  std::vector<Partition> ps{Partition{}};
  for (auto& p : partitions_up_to(3)) ps.push_back(p);
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<size_t> pick(0, ps.size() - 1);
  for (int trial = 0; trial < 20; ++trial) {
    const Partition& mu = ps[pick(rng)];
    const Partition& la = ps[pick(rng)];
    CAPTURE(to_string(mu));
    CAPTURE(to_string(la));
    CHECK(verify_commutation(mu, la, x, y, 9).ok());
  }
}
