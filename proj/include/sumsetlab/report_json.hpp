#pragma once

#include "json.hpp"
#include "sumsetlab/abelian_verify.hpp"
#include "sumsetlab/constructions.hpp"
#include "sumsetlab/sl2.hpp"

namespace sumsetlab {

// Fixed-order JSON renderings of the verification reports. Field order is
// part of the output contract.
using Json = nlohmann::ordered_json;

Json to_json(const BoundValue& b);
Json to_json(const PlunneckeReport& r);
Json to_json(const Theorem1Report& r);
Json to_json(const PigeonholeReport& r);
Json to_json(const KpnUpper& u);
Json to_json(const KpnReport& r);
Json to_json(const Example1Report& r);
Json to_json(const QuasirandomInfo& q);
Json to_json(const RuzsaReport& r);
Json to_json(const GowersReport& r);
Json to_json(const Theorem4Bound& b);
Json to_json(const Theorem4Report& r);
Json to_json(const Remark12Report& r);

}  // namespace sumsetlab
