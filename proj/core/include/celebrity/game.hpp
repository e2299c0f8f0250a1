#pragma once

#include <vector>

#include "celebrity/graph.hpp"
#include "celebrity/rational.hpp"

namespace celebrity {

// Immutable instance <V, (w_u), alpha, beta>: n >= 2 players with positive
// celebrity weights, link price alpha > 0 and critical distance
// 1 <= beta <= n-1. W, w_max and w_min are cached on construction.
class CelebrityGame {
 public:
  CelebrityGame(std::vector<Rational> weights, Rational alpha, int beta);

  int player_count() const { return static_cast<int>(weights_.size()); }
  const Rational& weight(int u) const { return weights_[u]; }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& alpha() const { return alpha_; }
  int beta() const { return beta_; }
  const Rational& total_weight() const { return total_weight_; }
  const Rational& max_weight() const { return max_weight_; }
  const Rational& min_weight() const { return min_weight_; }

 private:
  std::vector<Rational> weights_;
  Rational alpha_;
  int beta_;
  Rational total_weight_;
  Rational max_weight_;
  Rational min_weight_;
};

// Per-player bought-link sets S_u, stored sorted. General profiles may
// double-buy a pair (v in S_u and u in S_v); canonical_orientation() drops
// the higher-indexed buyer's duplicate so exactly one endpoint pays.
class StrategyProfile {
 public:
  explicit StrategyProfile(int n);
  StrategyProfile(int n, std::vector<std::vector<int>> bought);

  int player_count() const { return n_; }
  const std::vector<int>& strategy(int u) const { return bought_[u]; }
  void set_strategy(int u, std::vector<int> strategy);
  bool buys(int u, int v) const;
  int links_bought(int u) const { return static_cast<int>(bought_[u].size()); }
  int total_links_bought() const;

  bool is_orientation() const;
  StrategyProfile canonical_orientation() const;

  friend bool operator==(const StrategyProfile& a, const StrategyProfile& b) {
    return a.n_ == b.n_ && a.bought_ == b.bought_;
  }

 private:
  int n_;
  std::vector<std::vector<int>> bought_;
};

struct CostBreakdown {
  Rational link_cost;         // alpha * |S_u|
  Rational distance_penalty;  // sum of weights of players beyond beta
  Rational total;
};

// Undirected graph with edge {u,v} iff either player bought it.
Graph outcome_graph(const StrategyProfile& s);

// Exact cost of player u under profile s; unreachable players count as
// beyond beta.
CostBreakdown player_cost(const CelebrityGame& g, const StrategyProfile& s,
                          int u);

// alpha*|E| + sum over unordered far pairs of (w_u + w_v).
Rational social_cost(const CelebrityGame& g, const Graph& gr);

// The distance-penalty part of the social cost alone.
Rational weight_component(const CelebrityGame& g, const Graph& gr);

// c_u(S_-u, s_new) - c_u(S); negative means an improving deviation.
Rational delta_cost(const CelebrityGame& g, const StrategyProfile& s, int u,
                    const std::vector<int>& s_new);

}  // namespace celebrity
