// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles/oracles.hpp"
#include "rppvm/sliding.hpp"

using namespace rppvm;

namespace {
const Partition L{4, 4, 3, 3, 1};

PairRPP worked_input() {
  return make_pair_rpp(validate(L, {{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 2}, {0, 1, 4}, {0}}),
                       validate(L, {{0, 0, 0, 3}, {0, 0, 2, 4}, {0, 1, 4}, {2, 4, 4}, {3}}));
}
RPP worked_output() { return validate(L, {{0, 0, 1, 3}, {1, 2, 2, 4}, {1, 4, 4}, {2, 4, 4}, {3}}); }
}  // namespace

TEST_CASE("border-strip paths") {
  // The filling drawn with its three paths.
  RPP r = worked_output();
  PathFamily f = paths_of(r);
  REQUIRE(f.count() == 3);
  auto strips = border_strips(L);
  for (int i = 1; i <= 3; ++i)
    for (const Cell& c : strips[size_t(i - 1)].cells) {
      // Slice k holds content -ℓ' + k; ℓ' = 5 here.
      int k = c.content() + 5;
      CHECK(f.heights[size_t(i - 1)][size_t(k)] == r.at(c));
    }
  // Zero filling: every path sits at height zero, packed against the centers.
  PathFamily z = paths_of(zero_rpp(L));
  for (int i = 1; i <= z.count(); ++i)
    for (size_t k = 0; k < z.centers.size(); ++k) CHECK(z.column(i, int(k)) == z.centers[k] - i);
  // One cell with entry n: one path, height n at the single diagonal.
  PathFamily one = paths_of(validate(Partition{1}, {{4}}));
  REQUIRE(one.count() == 1);
  CHECK(one.heights[0] == std::vector<int>{0, 4, 0});
  // Polylines alternate slice points and vertical runs.
  CHECK(f.polyline(1).size() == 1 + 3 * f.pattern.size());
}

TEST_CASE("t = 0 constraints") {
  CHECK(check_t0_constraints(worked_input()));
  PairRPP six = make_pair_rpp(validate(Partition{3, 2, 1}, {{0, 1, 1}, {1, 3}, {2}}),
                              validate(Partition{3, 2, 1}, {{1, 2, 3}, {1, 2}, {2}}));
  CHECK_FALSE(check_t0_constraints(six));
  CHECK(check_t0_constraints(make_pair_rpp(zero_rpp(L), zero_rpp(L))));
  // The path constraints hold exactly when there is no coupled pair.
  long long pairs = 0;
  for (const auto& lam : partitions_up_to(4)) {
    std::vector<RPP> all = enumerate(lam, 6);
    for (const RPP& b : all)
      for (const RPP& c : all) {
        if (b.volume() + c.volume() > 6) continue;
        PairRPP p = make_pair_rpp(b, c);
        bool g0 = g_via_lozenges(p) == 0;
        CHECK(check_t0_constraints(p) == g0);
        if (g0) CHECK(nonzero_forced_cells(p).empty());
        ++pairs;
      }
  }
  CHECK(pairs == 2044);
}

TEST_CASE("sliding the worked pair") {
  CHECK(slide(worked_input()) == worked_output());
  CHECK(unslide(worked_output()) == worked_input());
  CHECK(slide(make_pair_rpp(zero_rpp(L), zero_rpp(L))) == zero_rpp(L));
  CHECK(unslide(zero_rpp(L)) == make_pair_rpp(zero_rpp(L), zero_rpp(L)));
  PairRPP six = make_pair_rpp(validate(Partition{3, 2, 1}, {{0, 1, 1}, {1, 3}, {2}}),
                              validate(Partition{3, 2, 1}, {{1, 2, 3}, {1, 2}, {2}}));
  CHECK_THROWS_AS(slide(six), Error);
}

TEST_CASE("sliding is a volume-preserving bijection at small size") {
  for (const auto& lam : partitions_up_to(4)) {
    std::vector<RPP> all = enumerate(lam, 5);
    for (const RPP& b : all)
      for (const RPP& c : all) {
        if (b.volume() + c.volume() > 5) continue;
        PairRPP p = make_pair_rpp(b, c);
        if (g_via_lozenges(p) != 0) continue;
        RPP s = slide(p);  // validates internally
        CHECK(s.volume() == b.volume() + c.volume());
        CHECK(unslide(s) == p);
      }
    for (const RPP& r : all) {
      PairRPP p = unslide(r);
      CHECK(g_via_lozenges(p) == 0);
      CHECK(slide(p) == r);
    }
  }
  for (const RPP& r : enumerate(Partition{2, 2}, 6)) CHECK(slide(unslide(r)) == r);
}

TEST_CASE("t = 0 counting") {
  T0CountReport one = verify_t0_counting(Partition{1}, 6);
  CHECK(one.ok());
  CHECK(one.g0_pairs == std::vector<long long>(7, 1));
  T0CountReport sq = verify_t0_counting(Partition{2, 2}, 8);
  CHECK(sq.ok());
  T0CountReport hook31 = verify_t0_counting(Partition{3, 1}, 6);
  CHECK(hook31.ok());
  // Independent count of RPPs of (3,1) per volume.
  std::vector<long long> ref(7, 0);
  for (const auto& f : oracle::rpps({3, 1}, 6)) ++ref[size_t(oracle::volume(f))];
  CHECK(hook31.rpps == ref);
}
