#pragma once

#include <vector>

#include "celebrity/game.hpp"

namespace celebrity {

enum class ResponseMethod { Exact, Beta1, Greedy };

const char* to_string(ResponseMethod m);

struct BestResponse {
  std::vector<int> strategy;
  Rational cost;  // exact cost of `strategy` against the fixed rest
  ResponseMethod method;
};

// Exhaustive search bound for best_response_exact / is_ne.
inline constexpr int kDefaultExactLimit = 16;
// Hard cap of the bitmask representation used by the exact paths.
inline constexpr int kMaskLimit = 31;
inline constexpr int kDominatingSetLimit = 20;

// Global minimum of c_u over all 2^(n-1) strategies. Ties break toward the
// smallest set, then the lexicographically smallest one; the tie order is a
// contract so dynamics and goldens stay reproducible.
BestResponse best_response_exact(const CelebrityGame& g,
                                 const StrategyProfile& s, int player,
                                 int max_players = kDefaultExactLimit);

// Polynomial best response for beta = 1: sort the candidates by weight
// (descending, index ascending), evaluate every top-k prefix and keep the
// cheapest, smallest k on ties. Players who already bought a link to `player`
// are excluded from the pool since paying for an existing edge never helps.
// Throws WrongBeta when beta != 1.
BestResponse best_response_beta1(const CelebrityGame& g,
                                 const StrategyProfile& s, int player);

// Hill climbing over single additions, removals and swaps starting from the
// player's current strategy. Cost is exact for the returned strategy; no
// optimality guarantee.
BestResponse best_response_greedy(const CelebrityGame& g,
                                  const StrategyProfile& s, int player);

// Best-response instance a dominating-set question maps onto: one new
// isolated player facing an orientation of the source graph (lower index
// buys), alpha = 3/2, all weights 2, beta = 2 clamped to the player bound
// for one-vertex sources.
struct ReductionInstance {
  CelebrityGame game;
  StrategyProfile profile;
  int target_player;
};

ReductionInstance build_reduction(const Graph& source);

// Minimum-cardinality dominating set by exhaustive search in increasing
// cardinality, lexicographic within each size.
std::vector<int> min_dominating_set(const Graph& g,
                                    int max_vertices = kDominatingSetLimit);

}  // namespace celebrity
