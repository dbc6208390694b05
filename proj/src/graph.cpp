#include "polylab/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace polylab {

SimpleGraph SimpleGraph::from_edges(Vertex n, std::span<const Edge> edges) {
  require(n >= 0, ErrorCode::kInvalidArgument, "vertex count must be non-negative");
  std::vector<std::vector<Vertex>> adjacency(static_cast<std::size_t>(n));
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      fail(ErrorCode::kIndexOutOfRange,
           "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) fail(ErrorCode::kSelfLoop, "self-loop at vertex " + std::to_string(u));
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  return from_adjacency(adjacency);
}

SimpleGraph SimpleGraph::from_adjacency(const std::vector<std::vector<Vertex>>& adjacency) {
  std::vector<std::int64_t> offsets(adjacency.size() + 1, 0);
  for (std::size_t v = 0; v < adjacency.size(); ++v) {
    offsets[v + 1] = offsets[v] + static_cast<std::int64_t>(adjacency[v].size());
  }
  std::vector<Vertex> targets(static_cast<std::size_t>(offsets.back()));
  for (std::size_t v = 0; v < adjacency.size(); ++v) {
    auto first = targets.begin() + offsets[v];
    std::copy(adjacency[v].begin(), adjacency[v].end(), first);
    std::sort(first, targets.begin() + offsets[v + 1]);
  }
  return from_csr(std::move(offsets), std::move(targets));
}

SimpleGraph SimpleGraph::from_csr(std::vector<std::int64_t> offsets, std::vector<Vertex> targets) {
  SimpleGraph g;
  g.offsets_ = std::move(offsets);
  g.targets_ = std::move(targets);
  g.validate();
  return g;
}

void SimpleGraph::validate() const {
  const Vertex n = num_vertices();
  require(!offsets_.empty() && offsets_.front() == 0 &&
              offsets_.back() == static_cast<std::int64_t>(targets_.size()),
          ErrorCode::kInvalidArgument, "malformed adjacency offsets");
  for (Vertex v = 0; v < n; ++v) {
    auto nb = neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const Vertex w = nb[i];
      if (w < 0 || w >= n) fail(ErrorCode::kIndexOutOfRange, "neighbor index " + std::to_string(w) + " out of range");
      if (w == v) fail(ErrorCode::kSelfLoop, "self-loop at vertex " + std::to_string(v));
      if (i > 0 && nb[i - 1] >= w) {
        if (nb[i - 1] == w) {
          fail(ErrorCode::kDuplicateEdge,
               "duplicate edge (" + std::to_string(std::min(v, w)) + ", " + std::to_string(std::max(v, w)) + ")");
        }
        fail(ErrorCode::kInvalidArgument, "neighbor list of vertex " + std::to_string(v) + " is not sorted");
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : neighbors(v)) {
      if (!has_edge(w, v)) fail(ErrorCode::kInvalidArgument, "adjacency is not symmetric");
    }
  }
}

bool SimpleGraph::has_edge(Vertex u, Vertex v) const { return slot(u, v) >= 0; }

std::int64_t SimpleGraph::slot(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return -1;
  return it - nb.begin();
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(num_edges()));
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::optional<Vertex> SimpleGraph::common_degree() const {
  if (num_vertices() == 0) return Vertex{0};
  const Vertex d = degree(0);
  for (Vertex v = 1; v < num_vertices(); ++v) {
    if (degree(v) != d) return std::nullopt;
  }
  return d;
}

RegularGraph::RegularGraph(SimpleGraph graph) : SimpleGraph(std::move(graph)) {
  auto d = common_degree();
  if (!d) {
    Vertex lo = std::numeric_limits<Vertex>::max();
    Vertex hi = 0;
    for (Vertex v = 0; v < num_vertices(); ++v) {
      lo = std::min(lo, degree(v));
      hi = std::max(hi, degree(v));
    }
    fail(ErrorCode::kNonRegular, "degrees range from " + std::to_string(lo) + " to " + std::to_string(hi));
  }
  degree_ = *d;
}

RegularGraph RegularGraph::from_edge_list(Vertex n, std::span<const Edge> edges) {
  return RegularGraph(SimpleGraph::from_edges(n, edges));
}

void RegularGraph::set_labels(std::vector<std::int32_t> flat, int width) {
  require(width >= 0, ErrorCode::kInvalidArgument, "label width must be non-negative");
  require(flat.size() == static_cast<std::size_t>(num_vertices()) * static_cast<std::size_t>(width),
          ErrorCode::kInvalidArgument, "label array has the wrong size");
  labels_ = std::move(flat);
  label_width_ = width;
}

BipartiteBiregularGraph::BipartiteBiregularGraph(SimpleGraph graph, Vertex left_size)
    : graph_(std::move(graph)), left_(left_size) {
  const Vertex n = graph_.num_vertices();
  require(left_ > 0 && left_ < n, ErrorCode::kInvalidArgument, "both parts must be non-empty");
  c_ = graph_.degree(0);
  d_ = graph_.degree(left_);
  for (Vertex v = 0; v < n; ++v) {
    const bool left = v < left_;
    require(graph_.degree(v) == (left ? c_ : d_), ErrorCode::kNonRegular, "graph is not biregular");
    for (Vertex w : graph_.neighbors(v)) {
      require((w < left_) != left, ErrorCode::kInvalidArgument, "edge inside a part");
    }
  }
}

std::vector<int> bfs_distances(const SimpleGraph& g, Vertex source, int max_depth) {
  std::vector<int> dist(static_cast<std::size_t>(g.num_vertices()), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(static_cast<std::size_t>(g.num_vertices()));
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    if (max_depth >= 0 && dist[u] >= max_depth) continue;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<Vertex> connected_components(const SimpleGraph& g, Vertex* count) {
  const Vertex n = g.num_vertices();
  std::vector<Vertex> comp(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> stack;
  Vertex next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (comp[w] < 0) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

bool is_connected(const SimpleGraph& g) {
  Vertex count = 0;
  connected_components(g, &count);
  return count <= 1;
}

bool is_bipartite(const SimpleGraph& g) {
  const Vertex n = g.num_vertices();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          stack.push_back(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

// BFS from root that reports the shortest cycle through a non-tree edge, pruned at `best`.
struct CycleSearch {
  const SimpleGraph& g;
  std::vector<int> dist;
  std::vector<Vertex> parent;
  std::vector<Vertex> touched;

  explicit CycleSearch(const SimpleGraph& graph)
      : g(graph),
        dist(static_cast<std::size_t>(graph.num_vertices()), kUnreachable),
        parent(static_cast<std::size_t>(graph.num_vertices()), -1) {}

  void reset() {
    for (Vertex v : touched) {
      dist[v] = kUnreachable;
      parent[v] = -1;
    }
    touched.clear();
  }
};

}  // namespace

std::optional<int> girth(const SimpleGraph& g) {
  const Vertex n = g.num_vertices();
  int best = std::numeric_limits<int>::max();
  CycleSearch search(g);
  for (Vertex root = 0; root < n; ++root) {
    search.reset();
    search.dist[root] = 0;
    search.touched.push_back(root);
    for (std::size_t head = 0; head < search.touched.size(); ++head) {
      const Vertex u = search.touched[head];
      if (2 * search.dist[u] + 1 >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (search.dist[w] == kUnreachable) {
          search.dist[w] = search.dist[u] + 1;
          search.parent[w] = u;
          search.touched.push_back(w);
        } else if (w != search.parent[u]) {
          best = std::min(best, search.dist[u] + search.dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

std::vector<Vertex> shortest_odd_cycle(const SimpleGraph& g) {
  const Vertex n = g.num_vertices();
  int best = std::numeric_limits<int>::max();
  std::vector<Vertex> best_cycle;
  CycleSearch search(g);
  for (Vertex root = 0; root < n; ++root) {
    search.reset();
    search.dist[root] = 0;
    search.touched.push_back(root);
    for (std::size_t head = 0; head < search.touched.size(); ++head) {
      const Vertex u = search.touched[head];
      if (2 * search.dist[u] + 1 >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (search.dist[w] == kUnreachable) {
          search.dist[w] = search.dist[u] + 1;
          search.parent[w] = u;
          search.touched.push_back(w);
        } else if (search.dist[w] == search.dist[u] && u < w) {
          const int length = 2 * search.dist[u] + 1;
          if (length >= best) continue;
          // Both tree paths must meet only at the root for this to be a simple cycle.
          std::vector<Vertex> left{u};
          std::vector<Vertex> right{w};
          while (left.back() != root) left.push_back(search.parent[left.back()]);
          while (right.back() != root) right.push_back(search.parent[right.back()]);
          bool disjoint = true;
          for (std::size_t i = 0; i + 1 < left.size(); ++i) {
            if (left[i] == right[i]) disjoint = false;
          }
          if (!disjoint) continue;
          best = length;
          best_cycle.assign(left.rbegin(), left.rend());
          for (std::size_t i = 0; i + 1 < right.size(); ++i) best_cycle.push_back(right[i]);
        }
      }
    }
  }
  return best_cycle;
}

int eccentricity(const SimpleGraph& g, Vertex source) {
  auto dist = bfs_distances(g, source);
  int ecc = 0;
  for (int x : dist) {
    if (x == kUnreachable) return kUnreachable;
    ecc = std::max(ecc, x);
  }
  return ecc;
}

int diameter(const SimpleGraph& g) {
  int diam = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const int e = eccentricity(g, v);
    if (e == kUnreachable) return kUnreachable;
    diam = std::max(diam, e);
  }
  return diam;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> index(static_cast<std::size_t>(g.num_vertices()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    require(vertices[i] >= 0 && vertices[i] < g.num_vertices(), ErrorCode::kIndexOutOfRange, "vertex out of range");
    require(index[vertices[i]] < 0, ErrorCode::kInvalidArgument, "repeated vertex in induced subgraph");
    index[vertices[i]] = static_cast<Vertex>(i);
  }
  std::vector<std::vector<Vertex>> adjacency(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbors(vertices[i])) {
      if (index[w] >= 0) adjacency[i].push_back(index[w]);
    }
  }
  return SimpleGraph::from_adjacency(adjacency);
}

std::optional<std::int64_t> common_neighbor_count(const SimpleGraph& g) {
  std::optional<std::int64_t> b;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    auto nu = g.neighbors(u);
    for (Vertex v : nu) {
      if (v < u) continue;
      auto nv = g.neighbors(v);
      std::int64_t common = 0;
      std::size_t i = 0, j = 0;
      while (i < nu.size() && j < nv.size()) {
        if (nu[i] < nv[j]) {
          ++i;
        } else if (nu[i] > nv[j]) {
          ++j;
        } else {
          ++common;
          ++i;
          ++j;
        }
      }
      if (!b) b = common;
      if (*b != common) return std::nullopt;
    }
  }
  return b.value_or(0);
}

void write_edge_list(std::ostream& out, const RegularGraph& g) {
  out << g.num_vertices() << ' ' << g.degree() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string to_edge_list(const RegularGraph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

RegularGraph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&](std::string& dst) {
    while (std::getline(in, dst)) {
      ++line_no;
      if (!dst.empty() && dst.back() == '\r') dst.pop_back();
      if (dst.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line(line)) fail(ErrorCode::kParse, "empty edge list");
  long long n = -1, d = -1;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> n >> d) || (header >> extra) || n < 0 || d < 0) {
      fail(ErrorCode::kParse, "line 1: expected header \"n d\"");
    }
    require(n <= std::numeric_limits<Vertex>::max(), ErrorCode::kParse, "vertex count too large");
  }
  std::vector<Edge> edges;
  while (next_line(line)) {
    std::istringstream row(line);
    long long u = 0, v = 0;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra)) {
      fail(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected \"u v\"");
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      fail(ErrorCode::kIndexOutOfRange, "line " + std::to_string(line_no) + ": vertex index out of range");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  RegularGraph g = RegularGraph::from_edge_list(static_cast<Vertex>(n), edges);
  if (n > 0 && g.degree() != d) {
    fail(ErrorCode::kNonRegular,
         "header declares degree " + std::to_string(d) + " but edges give " + std::to_string(g.degree()));
  }
  return g;
}

RegularGraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

RegularGraph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::kParse, "cannot open " + path);
  return read_edge_list(in);
}

void save_edge_list(const std::string& path, const RegularGraph& g) {
  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), ErrorCode::kInvalidArgument, "cannot write " + path);
  write_edge_list(out, g);
}

}  // namespace polylab
