#pragma once

#include <string>
#include <utility>
#include <vector>

namespace celebrity {

// Unordered edge, normalized so first < second.
using Edge = std::pair<int, int>;

// Hop count that keeps "unreachable" distinct from every finite value. The
// cost model compares distances against the critical distance and an
// unreachable pair always counts as beyond it, so no fake-large finite
// sentinel ever enters arithmetic.
class Hops {
 public:
  constexpr Hops() : count_(kUnreachableValue) {}

  static constexpr Hops unreachable() { return Hops(); }
  static constexpr Hops of(int count) {
    Hops h;
    h.count_ = count;
    return h;
  }

  constexpr bool reachable() const { return count_ != kUnreachableValue; }
  // Finite hop count; only meaningful when reachable().
  constexpr int count() const { return count_; }

  constexpr bool within(int limit) const {
    return reachable() && count_ <= limit;
  }
  constexpr bool beyond(int limit) const { return !within(limit); }

  friend constexpr bool operator==(Hops a, Hops b) = default;
  // Unreachable compares greater than every finite distance.
  friend constexpr bool operator<(Hops a, Hops b) {
    if (!a.reachable()) return false;
    if (!b.reachable()) return true;
    return a.count_ < b.count_;
  }

 private:
  static constexpr int kUnreachableValue = -1;
  int count_;
};

std::string to_string(Hops h);

// Undirected simple graph on vertices 0..n-1. Construction normalizes edges
// (ordering, duplicates collapse) and rejects self-loops and out-of-range
// endpoints.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int u) const { return adj_[u]; }
  int degree(int u) const { return static_cast<int>(adj_[u].size()); }
  bool has_edge(int u, int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;            // sorted, unique
  std::vector<std::vector<int>> adj_;  // sorted neighbor lists
};

class DistanceMatrix {
 public:
  explicit DistanceMatrix(int n) : n_(n), cells_(static_cast<size_t>(n) * n) {}

  int size() const { return n_; }
  Hops at(int u, int v) const { return cells_[static_cast<size_t>(u) * n_ + v]; }
  void set(int u, int v, Hops d) { cells_[static_cast<size_t>(u) * n_ + v] = d; }

 private:
  int n_;
  std::vector<Hops> cells_;
};

// Hop distances from one source.
std::vector<Hops> bfs_distances(const Graph& g, int source);

// BFS hop distances for every pair; Hops::unreachable() for disconnected
// pairs.
DistanceMatrix all_pairs_distances(const Graph& g);

// max_v d(u, v); unreachable as soon as any vertex is.
Hops vertex_diameter(const Graph& g, int u);

// Max finite distance when connected, otherwise unreachable.
Hops diameter(const Graph& g);

bool is_connected(const Graph& g);
int component_count(const Graph& g);

// Edges whose removal increases the number of connected components, found by
// one low-link DFS pass. Returned sorted.
std::vector<Edge> bridges(const Graph& g);

// Connected, n >= 2, and bridge-free.
bool is_two_edge_connected(const Graph& g);

bool is_tree(const Graph& g);
// A tree with one vertex adjacent to all others (n >= 2).
bool is_star(const Graph& g);

// "0-1 0-2" style edge rendering shared by reports and witnesses.
std::string format_edges(const Graph& g);
std::string format_vertices(const std::vector<int>& vs);

}  // namespace celebrity
