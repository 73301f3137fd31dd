// SPDX-License-Identifier: MIT
#include "rppvm/json_io.hpp"

#include <limits>

namespace rppvm {

namespace {

const char* kind_name(YbeKind k) { return k == YbeKind::WhiteWhite ? "white-white" : "white-gray"; }
const char* kind_name(RowKind k) { return k == RowKind::White ? "white" : "gray"; }

Json big_to_json(const BigInt& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return c.str();
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw Error("expected an integer coefficient, got " + j.dump());
}

int int_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw Error(std::string(what) + ": expected an integer, got " + j.dump());
  return j.get<int>();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(std::string("missing field \"") + key + "\" in " + j.dump());
  return j.at(key);
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
}

Json to_json(const Partition& p) { return p.parts(); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw Error("partition must be a JSON array, got " + j.dump());
  std::vector<int> parts;
  for (const auto& e : j) parts.push_back(int_from_json(e, "partition part"));
  try {
    return Partition(parts);
  } catch (const Error& e) {
    throw Error(std::string("bad partition ") + j.dump() + ": " + e.what());
  }
}

Json to_json(const Cell& c) { return Json{{"row", c.row}, {"col", c.col}}; }

Cell cell_from_json(const Json& j) {
  return {int_from_json(field(j, "row"), "row"), int_from_json(field(j, "col"), "col")};
}

Json to_json(const RPP& r) { return Json{{"shape", to_json(r.shape())}, {"rows", r.rows()}}; }

namespace {
RPP rows_from_json(const Partition& shape, const Json& rows) {
  if (!rows.is_array()) throw Error("rows must be an array of arrays");
  std::vector<std::vector<int>> out;
  for (const auto& row : rows) {
    if (!row.is_array()) throw Error("rows must be an array of arrays");
    out.emplace_back();
    for (const auto& e : row) out.back().push_back(int_from_json(e, "entry"));
  }
  return validate(shape, std::move(out));
}

// A color of a pair is either a full {shape, rows} object or just its rows.
RPP color_from_json(const Partition& shape, const Json& j) {
  return j.is_array() ? rows_from_json(shape, j) : rpp_from_json(j);
}
}  // namespace

RPP rpp_from_json(const Json& j) {
  return rows_from_json(partition_from_json(field(j, "shape")), field(j, "rows"));
}

Json to_json(const PairRPP& p) {
  return Json{{"shape", to_json(p.shape)}, {"blue", to_json(p.blue)}, {"red", to_json(p.red)}};
}

PairRPP pair_from_json(const Json& j) {
  Partition shape = partition_from_json(field(j, "shape"));
  PairRPP p = make_pair_rpp(color_from_json(shape, field(j, "blue")), color_from_json(shape, field(j, "red")));
  if (p.shape != shape) throw Error("pair shape disagrees with its blue/red shapes");
  return p;
}

Json to_json(const QTSeries& s) {
  Json coeffs = Json::array();
  for (const auto& [key, c] : s.coeffs()) coeffs.push_back(Json::array({key.first, key.second, big_to_json(c)}));
  return Json{{"trunc_q", s.trunc_q()}, {"coeffs", coeffs}};
}

QTSeries series_from_json(const Json& j) {
  QTSeries s(int_from_json(field(j, "trunc_q"), "trunc_q"));
  for (const auto& t : field(j, "coeffs")) {
    if (!t.is_array() || t.size() != 3) throw Error("series term must be [n,k,c], got " + t.dump());
    s.add_term(int_from_json(t[0], "n"), int_from_json(t[1], "k"), big_from_json(t[2]));
  }
  return s;
}

Json to_json(const VertexConfig& c) {
  Json kinds = Json::array(), interfaces = Json::array();
  for (RowKind k : c.kinds) kinds.push_back(kind_name(k));
  for (const auto& p : c.interfaces) interfaces.push_back(to_json(p));
  return Json{{"shape", to_json(c.shape)}, {"row_kinds", kinds}, {"interfaces", interfaces},
              {"centers", c.centers},      {"lo", c.lo},          {"hi", c.hi}};
}

Json to_json(const YbeReport& r) {
  Json v = Json::array();
  for (const auto& d : r.violations)
    v.push_back(Json{{"boundary", d.boundary}, {"sample", d.sample},
                     {"lhs", to_string(d.lhs)}, {"rhs", to_string(d.rhs)}});
  return Json{{"kind", kind_name(r.kind)}, {"samples", r.samples},
              {"boundaries_checked", r.boundaries_checked}, {"ok", r.ok()}, {"discrepancies", v}};
}

Json to_json(const ColoredYbeReport& r) {
  Json v = Json::array();
  for (const auto& d : r.violations)
    v.push_back(Json{{"boundary", d.boundary}, {"sample", d.sample},
                     {"lhs", to_string(d.lhs)}, {"rhs", to_string(d.rhs)}});
  return Json{{"kind", kind_name(r.kind)}, {"cross", to_string(r.param)}, {"samples", r.samples},
              {"boundaries_checked", r.boundaries_checked}, {"ok", r.ok()},
              {"violation_count", r.violations.size()}, {"discrepancies", v}};
}

Json to_json(const CommutationReport& r) {
  return Json{{"gray_below", to_string(r.gray_below)},
              {"white_below_scaled", to_string(r.white_below_scaled)},
              {"tail_ratio_ok", r.tail_ratio_ok}, {"ok", r.ok()}};
}

Json to_json(const T0CountReport& r) {
  return Json{{"shape", to_json(r.shape)},        {"N", r.N},
              {"g0_pairs", r.g0_pairs},           {"rpps", r.rpps},
              {"single_series", r.single_series}, {"pair_series_t0", r.pair_series_t0},
              {"ok", r.ok()}};
}

Json to_json(const CoupledPair& c) {
  return Json{{"strip", c.strip}, {"column", c.column}, {"type", c.type}};
}

}  // namespace rppvm
