#pragma once

#include <cstdint>
#include <string>

#include "celebrity/game.hpp"
#include "celebrity/prng.hpp"

namespace celebrity {

// Instance files are key-value text, order-insensitive, unknown keys
// rejected:
//   n = 3
//   alpha = 3/2
//   beta = 2
//   weights = 2/1 2/1 2/1
CelebrityGame parse_instance(const std::string& text);
std::string write_instance(const CelebrityGame& g);

// Profile files carry one line per player, "u: v1 v2 ...", players 0..n-1
// each exactly once, empty lists allowed.
StrategyProfile parse_profile(const std::string& text);
std::string write_profile(const StrategyProfile& s);

// Edge-list graph files: first line n, then one "u v" pair per line.
Graph parse_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

struct GenSpec {
  int n = 0;
  int beta = 1;
  Rational alpha;
  Rational weight_min;
  Rational weight_max;
  std::uint64_t seed = 0;
};

// Weights drawn from the grid weight_min + i/100 with i uniform over the
// grid steps that fit below weight_max, using SplitMix64(seed). Same spec,
// same game.
CelebrityGame random_game(const GenSpec& spec);

}  // namespace celebrity
