#pragma once

#include <string>

#include <json.hpp>

#include "polylab/bounds.hpp"
#include "polylab/hdx.hpp"
#include "polylab/link.hpp"
#include "polylab/polygraph.hpp"
#include "polylab/spectral.hpp"
#include "polylab/spectrum.hpp"

namespace polylab {

inline constexpr const char* kSchema = "polygraph-lab/1";

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json big_to_json(const BigInt& x);

Json to_json(const SpectrumReport& r);
Json to_json(const LinkReport& r);
Json to_json(const LocalGapBounds& r);
Json to_json(const EmlResult& r);
Json to_json(const WitnessReport& r);
Json to_json(const OverlapBound& r);
Json to_json(const AuxReport& r);

// Sidecar for a polygraph edge list: {"base", "S", "a_S", "b_S", "girth_safe"}.
Json polygraph_sidecar(const Polygraph& p, const std::string& base_name);

std::string tradeoff_table_csv(const TradeoffTable& t);
Json tradeoff_table_json(const TradeoffTable& t);

}  // namespace polylab
