#include "celebrity/graph.hpp"

#include <algorithm>
#include <functional>

#include "celebrity/errors.hpp"

namespace celebrity {

std::string to_string(Hops h) {
  return h.reachable() ? std::to_string(h.count()) : "unreachable";
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw ValidationError("vertex count must be non-negative");
  for (auto& [u, v] : edges) {
    if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ValidationError("edge endpoint out of range");
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  adj_.assign(n_, {});
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::vector<Hops> bfs_distances(const Graph& g, int source) {
  const int n = g.vertex_count();
  std::vector<Hops> dist(n, Hops::unreachable());
  std::vector<int> queue;
  queue.reserve(n);
  dist[source] = Hops::of(0);
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    const int du = dist[u].count();
    for (int v : g.neighbors(u)) {
      if (!dist[v].reachable()) {
        dist[v] = Hops::of(du + 1);
        queue.push_back(v);
      }
    }
  }
  return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.vertex_count();
  DistanceMatrix m(n);
  for (int u = 0; u < n; ++u) {
    const auto dist = bfs_distances(g, u);
    for (int v = 0; v < n; ++v) m.set(u, v, dist[v]);
  }
  return m;
}

Hops vertex_diameter(const Graph& g, int u) {
  Hops worst = Hops::of(0);
  for (Hops d : bfs_distances(g, u)) worst = std::max(worst, d);
  return worst;
}

Hops diameter(const Graph& g) {
  Hops worst = Hops::of(0);
  for (int u = 0; u < g.vertex_count(); ++u) {
    worst = std::max(worst, vertex_diameter(g, u));
    if (!worst.reachable()) break;
  }
  return worst;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  for (Hops d : bfs_distances(g, 0)) {
    if (!d.reachable()) return false;
  }
  return true;
}

int component_count(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<int> queue;
  int components = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++components;
    seen[s] = 1;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (int v : g.neighbors(queue[head])) {
        if (!seen[v]) {
          seen[v] = 1;
          queue.push_back(v);
        }
      }
    }
  }
  return components;
}

std::vector<Edge> bridges(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> discovery(n, -1);
  std::vector<int> low(n, 0);
  std::vector<Edge> found;
  int tick = 0;

  // low-link over the DFS tree; a tree edge is a bridge when the subtree
  // below it cannot reach above it
  std::function<void(int, int)> dfs = [&](int u, int parent) {
    discovery[u] = low[u] = tick++;
    bool parent_skipped = false;
    for (int v : g.neighbors(u)) {
      if (v == parent && !parent_skipped) {
        parent_skipped = true;  // parallel edges cannot occur in a simple graph
        continue;
      }
      if (discovery[v] != -1) {
        low[u] = std::min(low[u], discovery[v]);
        continue;
      }
      dfs(v, u);
      low[u] = std::min(low[u], low[v]);
      if (low[v] > discovery[u]) {
        found.emplace_back(std::min(u, v), std::max(u, v));
      }
    }
  };

  for (int u = 0; u < n; ++u) {
    if (discovery[u] == -1) dfs(u, -1);
  }
  std::sort(found.begin(), found.end());
  return found;
}

bool is_two_edge_connected(const Graph& g) {
  return g.vertex_count() >= 2 && is_connected(g) && bridges(g).empty();
}

bool is_tree(const Graph& g) {
  return is_connected(g) && g.edge_count() == g.vertex_count() - 1;
}

bool is_star(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2 || !is_tree(g)) return false;
  for (int u = 0; u < n; ++u) {
    if (g.degree(u) == n - 1) return true;
  }
  return false;
}

std::string format_edges(const Graph& g) {
  std::string out;
  for (const auto& [u, v] : g.edges()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(u) + "-" + std::to_string(v);
  }
  return out;
}

std::string format_vertices(const std::vector<int>& vs) {
  std::string out;
  for (int v : vs) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace celebrity
