// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles/oracles.hpp"
#include "rppvm/rpp.hpp"

using namespace rppvm;

TEST_CASE("validation") {
  RPP r = validate(Partition{4, 3, 2}, {{0, 0, 3, 5}, {1, 2, 4}, {1, 2}});
  CHECK(r.volume() == 18);
  CHECK(zero_rpp(Partition{3, 3, 1}).volume() == 0);
  CHECK_THROWS_AS(validate(Partition{2}, {{2, 1}}), Error);
  CHECK_THROWS_AS(validate(Partition{1, 1}, {{2}, {1}}), Error);  // column decreases upward
  CHECK_THROWS_AS(validate(Partition{2, 1}, {{0, 0}}), Error);    // wrong row count
  CHECK_THROWS_AS(validate(Partition{2, 1}, {{0}, {0}}), Error);  // wrong row length
  CHECK_THROWS_AS(validate(Partition{1}, {{-1}}), Error);
  try {
    validate(Partition{2, 2}, {{0, 3}, {1, 2}});
    FAIL("expected an error");
  } catch (const Error& e) {
    // The offending pair is named.
    CHECK(std::string(e.what()).find("(row 1, col 2)") != std::string::npos);
  }
}

TEST_CASE("interaction patterns") {
  using enum Rel;
  CHECK(interaction_pattern(Partition{4, 3, 1}) ==
        std::vector<Rel>{Below, Above, Below, Below, Above, Below, Above});
  CHECK(interaction_pattern(Partition{1}) == std::vector<Rel>{Below, Above});
  CHECK(interaction_pattern(Partition{2, 2}) == std::vector<Rel>{Below, Below, Above, Above});
  for (const auto& p : partitions_up_to(8)) {
    auto pat = interaction_pattern(p);
    CHECK(int(pat.size()) == p.part(1) + p.length());
    CHECK(std::count(pat.begin(), pat.end(), Above) == p.length());
    CHECK(shape_from_pattern(pat) == p);
  }
  CHECK_THROWS_AS(shape_from_pattern({Above, Below}), Error);
}

TEST_CASE("slices of the worked configuration") {
  RPP r = validate(Partition{4, 3, 1}, {{0, 1, 3, 4}, {1, 1, 4}, {3}});
  SliceSequence s = to_slices(r);
  const std::vector<Partition> want{Partition{},     Partition{3}, Partition{1}, Partition{1},
                                    Partition{4, 1}, Partition{3}, Partition{4}, Partition{}};
  CHECK(s.slices == want);
  CHECK(s.pattern == interaction_pattern(r.shape()));
  CHECK(to_string(s) == "∅ ⪯ (3) ⪰ (1) ⪯ (1) ⪯ (4,1) ⪰ (3) ⪯ (4) ⪰ ∅");
  CHECK(from_slices(s) == r);
  SliceSequence zero = to_slices(zero_rpp(Partition{3, 2}));
  for (const auto& p : zero.slices) CHECK(p.empty());
}

TEST_CASE("slice sequences round-trip and interlace as the pattern says") {
  for (const auto& lam : partitions_up_to(5))
    for (const RPP& r : enumerate(lam, 5)) {
      SliceSequence s = to_slices(r);
      REQUIRE(s.slices.size() == s.pattern.size() + 1);
      for (size_t k = 0; k < s.pattern.size(); ++k) {
        const auto& a = s.slices[k].parts();
        const auto& b = s.slices[k + 1].parts();
        CHECK((s.pattern[k] == Rel::Below ? oracle::interlaces(a, b) : oracle::interlaces(b, a)));
      }
      CHECK(from_slices(s) == r);
    }
  SliceSequence bad = to_slices(validate(Partition{1}, {{2}}));
  bad.slices[1] = Partition{5, 5};
  CHECK_THROWS_AS(from_slices(bad), Error);
}

TEST_CASE("enumeration matches cellwise backtracking") {
  CHECK(enumerate(Partition{1}, 4).size() == 5);
  CHECK(enumerate(Partition{}, 7).size() == 1);
  std::vector<int> per_volume(3, 0);
  for (const RPP& r : enumerate(Partition{2, 1}, 2)) ++per_volume[size_t(r.volume())];
  CHECK(per_volume == std::vector<int>{1, 2, 3});

  for (const auto& lam : partitions_up_to(5)) {
    std::vector<RPP> got = enumerate(lam, 6);
    std::set<std::vector<std::vector<int>>> mine, theirs;
    for (const RPP& r : got) mine.insert(r.rows());
    CHECK(mine.size() == got.size());  // no duplicates
    for (const auto& f : oracle::rpps(lam.parts(), 6)) theirs.insert(f);
    CHECK(mine == theirs);
    CHECK(std::is_sorted(got.begin(), got.end(), [](const RPP& a, const RPP& b) {
      return a.reading_word() < b.reading_word();
    }));
  }
}
