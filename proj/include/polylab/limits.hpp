#pragma once

#include <cstdint>

namespace polylab {

inline constexpr const char* kMaxVerticesEnv = "POLYGRAPH_LAB_MAX_VERTICES";

struct SizeLimits {
  std::int64_t polygraph_vertices = 2'000'000;
  std::int64_t polygraph_edge_slots = 500'000'000;
  std::int64_t link_vertices = 100'000;
  std::int64_t dense_spectrum = 20'000;
  std::int64_t aux_dense_edges = 50'000;
  int desai_rao_vertices = 14;
  int edge_expansion_vertices = 24;
  int b_positive_m = 8;
};

// Defaults, with the vertex caps replaced by POLYGRAPH_LAB_MAX_VERTICES when it is set.
SizeLimits default_limits();

}  // namespace polylab
