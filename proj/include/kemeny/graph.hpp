#pragma once

// Simple connected undirected graphs on vertices 1..n.

#include <algorithm>
#include <compare>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kemeny/errors.hpp"

namespace kemeny {

using Vertex = int;

/// Unordered pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  auto operator<=>(const Edge&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const Edge& e) {
  return os << '{' << e.u << ',' << e.v << '}';
}

/// Immutable simple connected graph. Construction normalizes the edge list
/// into ascending canonical order and rejects loops, duplicates and
/// disconnected input.
class Graph {
 public:
  Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    detail::require(n_ >= 1, "graph must have at least one vertex");
    std::sort(edges_.begin(), edges_.end());
    adjacency_.assign(static_cast<std::size_t>(n_) + 1, {});
    for (std::size_t idx = 0; idx < edges_.size(); ++idx) {
      const Edge& e = edges_[idx];
      if (e.u < 1 || e.v > n_) {
        throw VertexRangeError("edge " + describe(e) + " out of range for n=" + std::to_string(n_));
      }
      if (e.u == e.v) throw DomainError("self-loop at vertex " + std::to_string(e.u));
      if (idx > 0 && edges_[idx - 1] == e) throw DuplicateEdgeError("duplicate edge " + describe(e));
      adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
      adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
    if (!connected()) throw DisconnectedGraphError("graph is not connected");
  }

  static Graph single_vertex() { return Graph(1, {}); }

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  /// Degree vector indexed 0..n-1 for vertices 1..n.
  std::vector<int> degrees() const {
    std::vector<int> d(static_cast<std::size_t>(n_));
    for (Vertex v = 1; v <= n_; ++v) d[static_cast<std::size_t>(v - 1)] = degree(v);
    return d;
  }

  const std::vector<Vertex>& neighbors(Vertex v) const {
    check_vertex(v);
    return adjacency_[static_cast<std::size_t>(v)];
  }

  bool has_edge(Vertex a, Vertex b) const {
    check_vertex(a);
    check_vertex(b);
    const auto& nb = adjacency_[static_cast<std::size_t>(a)];
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  bool contains(Vertex v) const { return v >= 1 && v <= n_; }

  void check_vertex(Vertex v) const {
    if (!contains(v)) {
      throw VertexRangeError("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
    }
  }

  bool is_tree() const { return size() == n_ - 1; }

  /// BFS distances from `source`, indexed by vertex (entry 0 unused).
  std::vector<int> distances_from(Vertex source) const {
    check_vertex(source);
    std::vector<int> dist(static_cast<std::size_t>(n_) + 1, -1);
    std::vector<Vertex> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      for (Vertex y : adjacency_[static_cast<std::size_t>(x)]) {
        if (dist[static_cast<std::size_t>(y)] < 0) {
          dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
          queue.push_back(y);
        }
      }
    }
    return dist;
  }

  int distance(Vertex a, Vertex b) const { return distances_from(a)[static_cast<std::size_t>(b)]; }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  static std::string describe(const Edge& e) {
    std::ostringstream os;
    os << e;
    return os.str();
  }

  bool connected() const {
    const auto dist = distances_from(1);
    return std::none_of(dist.begin() + 1, dist.end(), [](int d) { return d < 0; });
  }

  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// All non-adjacent pairs {u,v}, u<v, in lexicographic order.
inline std::vector<Edge> non_edges(const Graph& g) {
  std::vector<Edge> out;
  for (Vertex u = 1; u <= g.order(); ++u) {
    const auto& nb = g.neighbors(u);
    auto it = std::upper_bound(nb.begin(), nb.end(), u);
    for (Vertex v = u + 1; v <= g.order(); ++v) {
      if (it != nb.end() && *it == v) {
        ++it;
        continue;
      }
      out.emplace_back(u, v);
    }
  }
  return out;
}

inline Graph add_edge(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) throw DomainError("cannot add a self-loop");
  if (g.has_edge(u, v)) {
    throw DuplicateEdgeError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} already present");
  }
  std::vector<Edge> edges = g.edges();
  edges.emplace_back(u, v);
  return Graph(g.order(), std::move(edges));
}

/// 1-sum identifying v1 in g1 with v2 in g2. g1 keeps its labels (the
/// identified vertex keeps label v1); the other vertices of g2 follow in
/// ascending order of their g2 labels.
inline Graph one_sum(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2) {
  g1.check_vertex(v1);
  g2.check_vertex(v2);
  std::vector<Vertex> relabel(static_cast<std::size_t>(g2.order()) + 1);
  Vertex next = g1.order();
  for (Vertex w = 1; w <= g2.order(); ++w) {
    relabel[static_cast<std::size_t>(w)] = (w == v2) ? v1 : ++next;
  }
  std::vector<Edge> edges = g1.edges();
  for (const Edge& e : g2.edges()) {
    edges.emplace_back(relabel[static_cast<std::size_t>(e.u)], relabel[static_cast<std::size_t>(e.v)]);
  }
  return Graph(g1.order() + g2.order() - 1, std::move(edges));
}

/// Position of g2's vertex w inside one_sum(g1, v1, g2, v2).
inline Vertex one_sum_label(const Graph& g1, Vertex v1, Vertex v2, Vertex w) {
  if (w == v2) return v1;
  return g1.order() + (w < v2 ? w : w - 1);
}

// ---- edge-list text format ----------------------------------------------
//
//   n m
//   u v      (m lines, 1-based)

inline Graph read_edge_list(std::istream& in) {
  long long n = 0;
  long long m = 0;
  if (!(in >> n >> m)) throw ParseError("edge list: expected header \"n m\"");
  if (n < 1) throw ParseError("edge list: vertex count must be positive");
  if (m < 0) throw ParseError("edge list: edge count must be non-negative");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) throw ParseError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    if (u < 1 || v < 1 || u > n || v > n) {
      throw ParseError("edge list: vertex out of range in line " + std::to_string(i + 2));
    }
    if (u == v) throw ParseError("edge list: self-loop in line " + std::to_string(i + 2));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string trailing;
  if (in >> trailing) throw ParseError("edge list: trailing data \"" + trailing + "\"");
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw ParseError("edge list: duplicate edge");
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace kemeny
