// SPDX-License-Identifier: MIT
// JSON encodings used by the command-line tool. Readers validate fully and
// report malformed input as rppvm::Error.
#pragma once

#include <string>

#include "json.hpp"
#include "rppvm/coupling.hpp"
#include "rppvm/qt_series.hpp"
#include "rppvm/rpp.hpp"
#include "rppvm/sliding.hpp"
#include "rppvm/vertex_model.hpp"

namespace rppvm {

using Json = nlohmann::ordered_json;

Json parse_json(const std::string& text);

Json to_json(const Partition& p);                  // [4,3,1]
Partition partition_from_json(const Json& j);
Json to_json(const Cell& c);                       // {"row":i,"col":j}
Cell cell_from_json(const Json& j);
Json to_json(const RPP& r);                        // {"shape":[..],"rows":[[bottom],..]}
RPP rpp_from_json(const Json& j);
Json to_json(const PairRPP& p);                    // {"shape":[..],"blue":{..},"red":{..}}
PairRPP pair_from_json(const Json& j);
// {"trunc_q":N,"coeffs":[[n,k,c],..]} sorted by (n,k). Coefficients beyond
// 64 bits are written as decimal strings.
Json to_json(const QTSeries& s);
QTSeries series_from_json(const Json& j);

Json to_json(const VertexConfig& c);
Json to_json(const YbeReport& r);
Json to_json(const ColoredYbeReport& r);
Json to_json(const CommutationReport& r);
Json to_json(const T0CountReport& r);
Json to_json(const CoupledPair& c);

}  // namespace rppvm
