#pragma once

// JSON encodings of the public data types.
//
//   RootVector           {"0":2,"1":2}
//   Partition            [7,6,5,4]
//   MultiPartition       [[3,2,1],[]]   (level one encodes as a Partition)
//   Node                 [r,c,m]
//   StandardTableau      {"shape": ..., "rows": [[entries per row] per component]}
//   SStd+ tableau        {"shape": ..., "fill": [[label per node] per row]}
//   LaurentPoly          [[-1,1],[1,1]]

#include <json.hpp>

#include "klr/cartan.hpp"
#include "klr/graded.hpp"
#include "klr/morita.hpp"
#include "klr/partitions.hpp"
#include "klr/semistandard.hpp"
#include "klr/tableaux.hpp"

namespace klr::json {

using nlohmann::json;

json encode(const RootVector& v);
json encode(const Partition& p);
json encode(const MultiPartition& mp);
json encode(const Node& a);
json encode(const StandardTableau& t);
json encode(const SemistandardTableauPlus& t);
json encode(const SegmentData& s);
json encode(const LaurentPoly& p);
json encode(const BlockBridge& b);
json encode(const BridgeReport& r);

RootVector decode_root_vector(const json& j);
Partition decode_partition(const json& j);
/// Accepts a flat array (level one) or an array of arrays.
MultiPartition decode_multipartition(const json& j);
StandardTableau decode_tableau(const json& j);
LaurentPoly decode_laurent(const json& j);

}  // namespace klr::json
