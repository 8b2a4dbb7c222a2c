#pragma once

#include <json.hpp>

#include "kdom/bounds.hpp"
#include "kdom/constructions.hpp"
#include "kdom/fuzz.hpp"
#include "kdom/graph.hpp"
#include "kdom/solver.hpp"

namespace kdom {

using Json = nlohmann::ordered_json;

/// Schema tag written at the top of every CLI document.
inline constexpr const char* kSchema = "kdom/1";

/// Distances serialize as integers, with null for kInfinity.
Json distance_json(Dist d);

Json to_json(const Certificate& cert);
Json to_json(const Metrics& metrics, const Graph& g);
Json to_json(const BoundsReport& report);
Json to_json(const ProductBoundReport& report);
Json to_json(const SpanningTreeResult& result);
Json to_json(const CycleWitness& witness);
/// Wall time goes under a separate "timing" key, everything else is a
/// pure function of the configuration.
Json to_json(const FuzzReport& report);

}  // namespace kdom
