// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "rppvm/json_io.hpp"
#include "rppvm/render.hpp"

using namespace rppvm;

namespace {
size_t count(const std::string& hay, const std::string& needle) {
  size_t n = 0;
  for (size_t at = hay.find(needle); at != std::string::npos; at = hay.find(needle, at + 1)) ++n;
  return n;
}
PairRPP worked_pair() {
  return make_pair_rpp(validate(Partition{3, 2, 1}, {{0, 1, 1}, {1, 3}, {2}}),
                       validate(Partition{3, 2, 1}, {{1, 2, 3}, {1, 2}, {2}}));
}
}  // namespace

TEST_CASE("JSON round trips") {
  CHECK(to_json(Partition{4, 3, 1}).dump() == "[4,3,1]");
  CHECK(partition_from_json(parse_json("[4,3,1,0]")) == Partition{4, 3, 1});
  CHECK(to_json(Cell{2, 3}).dump() == R"({"row":2,"col":3})");
  CHECK(cell_from_json(parse_json(R"({"col":3,"row":2})")) == Cell{2, 3});
  RPP r = validate(Partition{2, 1}, {{0, 2}, {1}});
  CHECK(to_json(r).dump() == R"({"shape":[2,1],"rows":[[0,2],[1]]})");
  CHECK(rpp_from_json(to_json(r)) == r);
  PairRPP p = worked_pair();
  CHECK(pair_from_json(to_json(p)) == p);
  // Colors may also be given as bare rows under the shared shape.
  CHECK(pair_from_json(parse_json(
            R"({"shape":[3,2,1],"blue":[[0,1,1],[1,3],[2]],"red":[[1,2,3],[1,2],[2]]})")) == p);
  QTSeries s = hook_product_pair(Partition{1}, 2);
  CHECK(to_json(s).dump() == R"({"trunc_q":2,"coeffs":[[0,0,1],[1,0,1],[1,1,1],[2,0,1],[2,1,1],[2,2,1]]})");
  CHECK(series_from_json(to_json(s)) == s);
  QTSeries big(1);
  big.add_term(1, 0, BigInt("123456789012345678901234567890"));
  CHECK(series_from_json(to_json(big)) == big);
}

TEST_CASE("JSON errors") {
  CHECK_THROWS_AS(parse_json("[1,"), Error);
  CHECK_THROWS_AS(partition_from_json(parse_json("[1,2]")), Error);
  CHECK_THROWS_AS(partition_from_json(parse_json(R"({"a":1})")), Error);
  CHECK_THROWS_AS(rpp_from_json(parse_json(R"({"shape":[2],"rows":[[2,1]]})")), Error);
  CHECK_THROWS_AS(rpp_from_json(parse_json(R"({"shape":[2]})")), Error);
  CHECK_THROWS_AS(series_from_json(parse_json(R"({"trunc_q":2,"coeffs":[[0,0]]})")), Error);
}

TEST_CASE("Maya rendering") {
  std::string m = render_maya_ascii(Partition{4, 3, 2, 2, 1});
  CHECK(m == "…●●○●○●●|○●○●○○○…");
  // The figure reads ●●○●○●● | ○●○●○○ from -6.5 to 5.5.
  CHECK(m.find("●●○●○●●|○●○●○○") != std::string::npos);
  std::string svg = render_maya_svg(Partition{4, 3, 2, 2, 1});
  CHECK(count(svg, "<circle") == 14);
  CHECK(count(svg, "fill=\"black\"") == 7);
}

TEST_CASE("tiling pictures") {
  std::string zero = render_tiling_svg(zero_rpp(Partition{3, 2}));
  CHECK(count(zero, "class=\"top\"") == 5);
  CHECK(count(zero, "class=\"left\"") == 0);
  CHECK(count(zero, "class=\"front\"") == 0);
  RPP r = validate(Partition{2, 1}, {{1, 2}, {3}});
  std::string svg = render_tiling_svg(r);
  CHECK(count(svg, "class=\"top\"") == 3);
  // Left walls: 1 (cell 1,1) + 1 (cell 1,2 over 1,1) + 3 (cell 2,1).
  CHECK(count(svg, "class=\"left\"") == 5);
  // Front walls: 1 + 2 + 2 (cell 2,1 over cell 1,1).
  CHECK(count(svg, "class=\"front\"") == 5);
  CHECK(svg == render_tiling_svg(r));
  CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
  std::string ascii = render_tiling_ascii(r);
  CHECK(ascii.find("wgwg") != std::string::npos);
}

TEST_CASE("pair pictures mark every coupled pair") {
  PairRPP p = worked_pair();
  std::string svg = render_pair_svg(p);
  CHECK(count(svg, "class=\"coupled\"") == 6);
  CHECK(count(svg, "class=\"blue\"") == 2);
  CHECK(count(svg, "class=\"red\"") == 2);
  CHECK(svg == render_pair_svg(p));
  std::string ascii = render_pair_ascii(p);
  CHECK(count(ascii, "*") == 12);  // six pairs, marked in both color panels
  PairRPP z = make_pair_rpp(zero_rpp(Partition{2, 1}), zero_rpp(Partition{2, 1}));
  CHECK(count(render_pair_svg(z), "class=\"coupled\"") == 0);
}
