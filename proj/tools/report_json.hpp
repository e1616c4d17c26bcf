#pragma once

#include <json.hpp>

#include "ineq/cbs_discrete.hpp"
#include "ineq/cbs_integral.hpp"
#include "ineq/dft.hpp"
#include "ineq/elliptic.hpp"
#include "ineq/iterated.hpp"
#include "ineq/means.hpp"
#include "ineq/young.hpp"

namespace ineq::cli {

using nlohmann::ordered_json;

ordered_json to_json(const ChainReport& r);
ordered_json to_json(const AxiomReport& r);
ordered_json to_json(const HFunctionCheck& r);
ordered_json to_json(const YoungComparison& r);
ordered_json to_json(const BoundsReport& r);
ordered_json to_json(const UncertaintyReport& r);
ordered_json to_json(const OrderVerdict& v);
ordered_json to_json(const IterationResult& r);

}  // namespace ineq::cli
