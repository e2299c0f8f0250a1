#pragma once

#include <string>
#include <utility>
#include <vector>

#include "celebrity/equilibrium.hpp"

namespace celebrity {

// Structural classification from the exact parameter comparisons.
// is_star_celebrity: a star is a NE graph (some connected NE exists);
// in_unique: the edgeless graph is the unique NE graph. Exactly one holds.
struct GameClass {
  bool is_star_celebrity = false;
  bool in_unique = false;
  std::vector<int> celebrities;          // players with alpha < w_u
  std::vector<int> high_weight_players;  // players with alpha > W - w_u
};

GameClass classify(const CelebrityGame& g);

// Minimum social cost. beta > 1: min{alpha, W}*(n-1). beta = 1: every pair
// contributes min(alpha, w_u + w_v).
Rational opt_cost(const CelebrityGame& g);

// A graph attaining opt_cost. beta > 1: star centered at vertex 0 when
// alpha < W, else the edgeless graph (the alpha = W tie resolves edgeless).
// beta = 1: exactly the pairs with w_u + w_v > alpha (ties excluded).
Graph opt_graph(const CelebrityGame& g);

struct PriceReport {
  Rational opt;
  Rational worst_ne_cost;
  Rational best_ne_cost;
  Rational poa;  // worst_ne_cost / opt
  Rational pos;  // best_ne_cost / opt
};

// Exact prices from an exhaustive enumeration. Throws NotExhaustive.
PriceReport price_report(const CelebrityGame& g, const EquilibriumSet& eq);

enum class CheckStatus { Pass, Fail, Vacuous };

const char* to_string(CheckStatus s);

struct CheckRecord {
  std::string id;
  CheckStatus status;
  std::string witness;  // concrete counterexample, only on Fail
};

struct VerificationReport {
  std::vector<CheckRecord> checks;  // C1..C20 in order
  // Observed quantities that are tracked but never asserted (PoA, PoS and
  // the beta-normalized PoA).
  std::vector<std::pair<std::string, std::string>> measurements;

  bool any_fail() const;
};

// Runs the C1..C20 structural checks against an exhaustive NE set. Checks
// whose hypotheses the instance does not meet report Vacuous; C1 and C3-C14
// apply to beta > 1 games, C15-C17 to beta = 1 games, C2/C18/C19 always.
VerificationReport verify_theorems(const CelebrityGame& g,
                                   const EquilibriumSet& eq);

}  // namespace celebrity
