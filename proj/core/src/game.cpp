#include "celebrity/game.hpp"

#include <algorithm>

#include "celebrity/errors.hpp"

namespace celebrity {

CelebrityGame::CelebrityGame(std::vector<Rational> weights, Rational alpha,
                             int beta)
    : weights_(std::move(weights)), alpha_(std::move(alpha)), beta_(beta) {
  const int n = static_cast<int>(weights_.size());
  if (n < 2) throw ValidationError("a game needs at least 2 players");
  if (alpha_ <= 0) throw ValidationError("alpha must be > 0");
  if (beta_ < 1 || beta_ > n - 1) {
    throw ValidationError("beta must satisfy 1 <= beta <= n-1");
  }
  total_weight_ = 0;
  max_weight_ = weights_[0];
  min_weight_ = weights_[0];
  for (const Rational& w : weights_) {
    if (w <= 0) throw ValidationError("every weight must be > 0");
    total_weight_ += w;
    max_weight_ = std::max(max_weight_, w);
    min_weight_ = std::min(min_weight_, w);
  }
}

StrategyProfile::StrategyProfile(int n) : n_(n), bought_(n) {
  if (n < 1) throw ValidationError("a profile needs at least 1 player");
}

StrategyProfile::StrategyProfile(int n, std::vector<std::vector<int>> bought)
    : StrategyProfile(n) {
  if (static_cast<int>(bought.size()) != n) {
    throw ValidationError("profile must list every player exactly once");
  }
  for (int u = 0; u < n; ++u) set_strategy(u, std::move(bought[u]));
}

void StrategyProfile::set_strategy(int u, std::vector<int> strategy) {
  std::sort(strategy.begin(), strategy.end());
  if (std::adjacent_find(strategy.begin(), strategy.end()) != strategy.end()) {
    throw ValidationError("duplicate entry in strategy of player " +
                          std::to_string(u));
  }
  for (int v : strategy) {
    if (v < 0 || v >= n_) {
      throw ValidationError("strategy entry out of range for player " +
                            std::to_string(u));
    }
    if (v == u) {
      throw ValidationError("player " + std::to_string(u) +
                            " cannot buy a link to itself");
    }
  }
  bought_[u] = std::move(strategy);
}

bool StrategyProfile::buys(int u, int v) const {
  return std::binary_search(bought_[u].begin(), bought_[u].end(), v);
}

int StrategyProfile::total_links_bought() const {
  int total = 0;
  for (const auto& s : bought_) total += static_cast<int>(s.size());
  return total;
}

bool StrategyProfile::is_orientation() const {
  for (int u = 0; u < n_; ++u) {
    for (int v : bought_[u]) {
      if (v > u && buys(v, u)) return false;
    }
  }
  return true;
}

StrategyProfile StrategyProfile::canonical_orientation() const {
  StrategyProfile out(n_);
  for (int u = 0; u < n_; ++u) {
    std::vector<int> kept;
    kept.reserve(bought_[u].size());
    for (int v : bought_[u]) {
      // on a double-bought pair the higher-indexed buyer drops its copy
      if (u > v && buys(v, u)) continue;
      kept.push_back(v);
    }
    out.bought_[u] = std::move(kept);
  }
  return out;
}

Graph outcome_graph(const StrategyProfile& s) {
  const int n = s.player_count();
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v : s.strategy(u)) {
      edges.emplace_back(std::min(u, v), std::max(u, v));
    }
  }
  return Graph(n, std::move(edges));
}

namespace {

void require_same_players(const CelebrityGame& g, int other,
                          const char* what) {
  if (g.player_count() != other) {
    throw ValidationError(std::string(what) +
                          " does not match the game's player count");
  }
}

}  // namespace

CostBreakdown player_cost(const CelebrityGame& g, const StrategyProfile& s,
                          int u) {
  require_same_players(g, s.player_count(), "profile");
  const Graph gr = outcome_graph(s);
  const auto dist = bfs_distances(gr, u);

  CostBreakdown out;
  out.link_cost = g.alpha() * s.links_bought(u);
  out.distance_penalty = 0;
  for (int v = 0; v < g.player_count(); ++v) {
    if (v == u) continue;
    if (dist[v].beyond(g.beta())) out.distance_penalty += g.weight(v);
  }
  out.total = out.link_cost + out.distance_penalty;
  return out;
}

Rational weight_component(const CelebrityGame& g, const Graph& gr) {
  require_same_players(g, gr.vertex_count(), "graph");
  const int n = g.player_count();
  Rational sum = 0;
  for (int u = 0; u < n; ++u) {
    const auto dist = bfs_distances(gr, u);
    for (int v = u + 1; v < n; ++v) {
      if (dist[v].beyond(g.beta())) sum += g.weight(u) + g.weight(v);
    }
  }
  return sum;
}

Rational social_cost(const CelebrityGame& g, const Graph& gr) {
  return g.alpha() * gr.edge_count() + weight_component(g, gr);
}

Rational delta_cost(const CelebrityGame& g, const StrategyProfile& s, int u,
                    const std::vector<int>& s_new) {
  const Rational before = player_cost(g, s, u).total;
  StrategyProfile changed = s;
  changed.set_strategy(u, s_new);
  return player_cost(g, changed, u).total - before;
}

}  // namespace celebrity
