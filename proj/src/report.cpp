#include "polylab/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace polylab {

Json big_to_json(const BigInt& x) {
  if (x <= BigInt(std::numeric_limits<std::int64_t>::max()) && x >= BigInt(std::numeric_limits<std::int64_t>::min())) {
    return x.convert_to<std::int64_t>();
  }
  return x.str();
}

namespace {

Json number_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

}  // namespace

Json to_json(const SpectrumReport& r) {
  Json j;
  j["n"] = r.n;
  j["d"] = r.d;
  Json ev = Json::array();
  for (const auto& g : r.eigenvalues) ev.push_back({{"value", g.value}, {"mult", g.mult}});
  j["eigenvalues"] = ev;
  j["lambda2"] = number_or_null(r.lambda2);
  j["lambda_min"] = number_or_null(r.lambda_min);
  j["normalized_gap"] = number_or_null(r.normalized_gap);
  if (!r.complete) j["complete"] = false;
  return j;
}

Json to_json(const LocalGapBounds& r) {
  return Json{{"p", r.p},         {"q", r.q},         {"d", r.d},
              {"b_S", big_to_json(r.b_S)}, {"beta1", r.beta1}, {"beta2", r.beta2},
              {"gamma", r.gamma}, {"log_beta2", r.log_beta2}, {"log_path_count", r.log_path_count}};
}

Json to_json(const LinkReport& r) {
  Json j;
  j["S"] = r.S.entries();
  j["d"] = r.d;
  j["a_S"] = big_to_json(r.a_S);
  j["b_S"] = big_to_json(r.b_S);
  j["connected"] = r.connected;
  j["diameter"] = r.diameter == kUnreachable ? Json(nullptr) : Json(r.diameter);
  j["spectrum"] = r.spectrum ? to_json(*r.spectrum) : Json(nullptr);
  j["beta1"] = r.gap_bounds ? Json(r.gap_bounds->beta1) : Json(nullptr);
  j["beta2"] = r.gap_bounds ? Json(r.gap_bounds->beta2) : Json(nullptr);
  j["gamma"] = r.gap_bounds ? Json(r.gap_bounds->gamma) : Json(nullptr);
  return j;
}

Json to_json(const EmlResult& r) {
  return Json{{"lower", r.lower}, {"upper", r.upper}, {"observed", number_or_null(r.observed)}};
}

Json to_json(const WitnessReport& r) {
  return Json{{"property_1_checked", r.property_1_checked},
              {"violations", r.violations},
              {"odd_cycle", r.odd_cycle},
              {"is_cut", r.is_cut},
              {"set_size", r.set_size}};
}

Json to_json(const OverlapBound& r) {
  return Json{{"mu", r.mu},
              {"edges_ab", r.edges_ab},
              {"midpoint_mass", r.midpoint_mass},
              {"edges_mc", r.edges_mc},
              {"triangles", r.triangles},
              {"total_triangles", r.total_triangles},
              {"fraction", r.fraction},
              {"w_max", r.w_max}};
}

Json to_json(const AuxReport& r) {
  Json hist = Json::object();
  for (const auto& [deg, count] : r.degree_histogram) hist[std::to_string(deg)] = count;
  return Json{{"vertices", r.graph.num_vertices()},
              {"edges", r.graph.num_edges()},
              {"degree_histogram", hist},
              {"connected", r.connected},
              {"lambda2", number_or_null(r.lambda2)},
              {"lambda_min", number_or_null(r.lambda_min)},
              {"normalized_gap", number_or_null(r.normalized_gap)},
              {"iterative", r.iterative}};
}

Json polygraph_sidecar(const Polygraph& p, const std::string& base_name) {
  return Json{{"schema", kSchema},
              {"base", base_name},
              {"S", p.S().entries()},
              {"a_S", big_to_json(p.a_S())},
              {"b_S", big_to_json(p.b_S())},
              {"girth_safe", p.girth_safe()}};
}

std::string tradeoff_table_csv(const TradeoffTable& t) {
  std::ostringstream out;
  out << "a_minus_b_minus_1";
  for (int b = kTableFirst; b <= kTableLast; ++b) out << ",b=" << b;
  out << '\n' << std::fixed << std::setprecision(6);
  for (int row = 0; row < 7; ++row) {
    out << row + kTableFirst;
    for (int col = 0; col < 7; ++col) out << ',' << t[row][col];
    out << '\n';
  }
  return out.str();
}

Json tradeoff_table_json(const TradeoffTable& t) {
  Json rows = Json::array();
  for (int row = 0; row < 7; ++row) {
    Json cells = Json::array();
    for (int col = 0; col < 7; ++col) cells.push_back(t[row][col]);
    rows.push_back({{"a_minus_b_minus_1", row + kTableFirst}, {"cells", cells}});
  }
  Json cols = Json::array();
  for (int b = kTableFirst; b <= kTableLast; ++b) cols.push_back(b);
  return Json{{"schema", kSchema}, {"columns_b", cols}, {"rows", rows}};
}

}  // namespace polylab
