// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles/oracles.hpp"
#include "rppvm/coupling.hpp"

using namespace rppvm;

namespace {
const Monomial X{1, 0}, T{0, 1};

PairRPP worked_pair() {
  return make_pair_rpp(validate(Partition{3, 2, 1}, {{0, 1, 1}, {1, 3}, {2}}),
                       validate(Partition{3, 2, 1}, {{1, 2, 3}, {1, 2}, {2}}));
}
}  // namespace

TEST_CASE("two-color white table matches the tabulated figure") {
  for (size_t b = 0; b < 5; ++b)
    for (size_t r = 0; r < 5; ++r) {
      auto [ex, et] = oracle::white_table_verbatim()[b][r];
      CHECK(colored_white_weight(ColoredVertexState{states::all[b], states::all[r]}, X, T) ==
            Monomial{ex, et});
    }
  CHECK(colored_white_weight({states::horizontal, states::horizontal}, X, T) == Monomial{2, 1});
  CHECK(colored_white_weight({states::empty, states::empty}, X, T) == Monomial{0, 0});
}

TEST_CASE("two-color gray table") {
  CHECK_NOTHROW(check_gray_table_consistency());
  CHECK(colored_gray_weight({states::empty, states::empty}, X, T) == Monomial{2, 1});
  CHECK(colored_gray_weight({states::horizontal, states::horizontal}, X, T) == Monomial{0, 0});
  // gray(x) = x^2 t · white(1/(xt)) state by state.
  for (const auto& [x, t] : {std::pair{Rational(1, 2), Rational(2, 5)},
                              std::pair{Rational(-3, 7), Rational(5, 3)},
                              std::pair{Rational(4), Rational(1, 9)}})
    for (const auto& b : states::all)
      for (const auto& r : states::all) {
        ColoredVertexState s{b, r};
        CHECK(colored_gray_weight(s, x, t) ==
              x * x * t * colored_white_weight(s, Rational(1) / (x * t), t));
      }
}

TEST_CASE("two-color cross weights") {
  const Rational z(3, 7), t(2, 5);
  CHECK(colored_cross_weight(ColoredCrossState{}, z, t) == 1);
  CrossState alone{true, false, false, true};
  CHECK(colored_cross_weight(ColoredCrossState{{}, alone}, z, t) == 1 - z);
  CHECK(colored_cross_weight(ColoredCrossState{alone, alone}, z, t) == (1 - z / t) * (1 - z));
}

TEST_CASE("two-color row weights of the worked rows") {
  auto w = colored_row_weight_explicit(RowKind::White, {Partition{2, 1}, Partition{1}},
                                       {Partition{4, 2}, Partition{4, 1}}, X, T, 2, 7);
  REQUIRE(w.has_value());
  CHECK(*w == Monomial{7, 3});
  auto g = colored_row_weight_explicit(RowKind::Gray, {Partition{3, 1, 1}, Partition{2, 1}},
                                       {Partition{1, 1}, Partition{1, 1}}, X, T, 2, 7);
  REQUIRE(g.has_value());
  CHECK(*g == Monomial{8, 3});
}

TEST_CASE("two-color Yang-Baxter equation") {
  const ColoredYbeSample s{Rational(1, 2), Rational(1, 3), Rational(2, 5)};
  // Blue enters at i1 and crosses alone, red enters the x vertex from below,
  // both leave at j1: x^2 t (1 - y/x) on both sides.
  auto [l, r] = colored_ybe_sides(YbeKind::WhiteWhite, {1, 0, 2, 3, 0, 0}, s, CrossParam::Ratio);
  CHECK(l == s.x * s.x * s.t * (1 - s.y / s.x));
  CHECK(r == l);
  auto [l0, r0] = colored_ybe_sides(YbeKind::WhiteGray, {}, s, CrossParam::Product);
  CHECK(l0 == r0);

  CHECK(verify_colored_ybe(YbeKind::WhiteWhite, {s}).ok());
  CHECK(verify_colored_ybe(YbeKind::WhiteGray, {s}, CrossParam::ProductT).ok());
  // With the product yx the white-gray equation fails (see README).
  ColoredYbeReport stated = verify_colored_ybe(YbeKind::WhiteGray, {s});
  CHECK(stated.param == CrossParam::Product);
  CHECK(stated.boundaries_checked == 4096);
  CHECK_FALSE(stated.ok());

  // At t = 1 every colored side factors into one-color sides.
  const ColoredYbeSample s1{Rational(1, 2), Rational(1, 3), Rational(1)};
  for (int m = 0; m < 4096; m += 7) {
    ColoredBoundary b{};
    std::array<bool, 6> blue{}, red{};
    for (int i = 0; i < 6; ++i) {
      b[size_t(i)] = (m >> (2 * i)) & 3;
      blue[size_t(i)] = b[size_t(i)] & 1;
      red[size_t(i)] = b[size_t(i)] & 2;
    }
    for (YbeKind k : {YbeKind::WhiteWhite, YbeKind::WhiteGray}) {
      auto [cl, cr] = colored_ybe_sides(k, b, s1, default_cross_param(k));
      auto [bl, br] = ybe_sides(k, blue, s1.x, s1.y);
      auto [rl, rr] = ybe_sides(k, red, s1.x, s1.y);
      CHECK(cl == bl * rl);
      CHECK(cr == br * rr);
    }
  }
}

TEST_CASE("interaction statistic of the worked pair") {
  PairRPP p = worked_pair();
  Monomial w = pair_config_weight(p);
  Monomial A = A_lambda(p.shape);
  CHECK(w * A * A == Monomial{8 + 11, 6 + 3});
  CHECK(g_via_vertex(p) == 6);
  CHECK(g_via_lozenges(p) == 6);
  auto cps = coupled_pairs(p);
  REQUIRE(cps.size() == 6);
  int types[5] = {0, 0, 0, 0, 0};
  for (const auto& c : cps) ++types[c.type];
  CHECK(types[1] == 1);
  CHECK(types[2] == 3);
  CHECK(types[3] == 2);
  CHECK(types[4] == 0);
}

TEST_CASE("trivial pairs") {
  PairRPP z = make_pair_rpp(zero_rpp(Partition{1}), zero_rpp(Partition{1}));
  CHECK(g_via_vertex(z) == 0);
  CHECK(g_via_lozenges(z) == 0);
  PairRPP e = make_pair_rpp(zero_rpp(Partition{}), zero_rpp(Partition{}));
  CHECK(pair_config_weight(e) == Monomial{0, 0});
  CHECK_THROWS_AS(make_pair_rpp(zero_rpp(Partition{1}), zero_rpp(Partition{2})), Error);
}

TEST_CASE("g from vertices equals g from lozenges") {
  long long n = 0;
  for (const auto& lam : partitions_up_to(4)) {
    std::vector<RPP> all = enumerate(lam, 5);
    for (const RPP& b : all)
      for (const RPP& c : all) {
        if (b.volume() + c.volume() > 5) continue;
        PairRPP p = make_pair_rpp(b, c);
        CHECK(g_via_vertex(p) == g_via_lozenges(p));
        ++n;
      }
  }
  CHECK(n > 500);
}

TEST_CASE("pair generating function") {
  QTSeries one = pair_genfun_bruteforce(Partition{1}, 2);
  QTSeries want(2);
  for (auto [n, k] : {std::pair{0, 0}, {1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}}) want.add_term(n, k, 1);
  CHECK(one == want);
  CHECK(pair_genfun_bruteforce(Partition{}, 4) == QTSeries::one(4));
  CHECK(pair_genfun_bruteforce(Partition{2, 1}, 6) == hook_product_pair(Partition{2, 1}, 6));
  // Thread count does not change the result.
  CHECK(pair_genfun_bruteforce(Partition{2, 1}, 6, 3) == pair_genfun_bruteforce(Partition{2, 1}, 6, 1));
  // Against the test-side schoolbook expansion.
  auto ref = oracle::pair_series({2, 2}, 6);
  QTSeries got = pair_genfun_bruteforce(Partition{2, 2}, 6);
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= 6; ++k) CHECK(got.coeff(n, k) == ref[size_t(n)][size_t(k)]);
}
