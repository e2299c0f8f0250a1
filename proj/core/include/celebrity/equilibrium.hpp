#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "celebrity/best_response.hpp"
#include "celebrity/game.hpp"

namespace celebrity {

struct Deviation {
  int player;
  std::vector<int> strategy;
  Rational delta;  // strictly negative
};

struct NeCertificate {
  bool is_equilibrium;
  // First improving deviation in scan order (players ascending; per player:
  // empty set, single drops, single adds, single swaps, then all subsets).
  std::optional<Deviation> witness;
};

// Exact Nash check by exhaustive deviation search. Throws InstanceTooLarge
// beyond max_players.
NeCertificate is_ne(const CelebrityGame& g, const StrategyProfile& s,
                    int max_players = kDefaultExactLimit);

// Orientation profiles encode as base-3 digits over vertex pairs in
// lexicographic order: 0 no edge, 1 lower index buys, 2 higher index buys.
std::uint64_t orientation_code_count(int n);
std::uint64_t orientation_code(const StrategyProfile& s);
StrategyProfile orientation_profile(int n, std::uint64_t code);

struct NeGraphRecord {
  Graph graph;
  Rational social_cost;
  int profile_count;  // NE orientation profiles sharing this outcome graph
};

// Result of exhaustive NE enumeration over orientation profiles. Profiles are
// kept as ascending orientation codes; graphs are deduplicated in first-seen
// order.
struct EquilibriumSet {
  int player_count = 0;
  std::vector<std::uint64_t> profile_codes;
  std::vector<NeGraphRecord> graphs;
  bool exhaustive = false;

  std::size_t profile_count() const { return profile_codes.size(); }
  StrategyProfile profile(std::size_t i) const;
};

inline constexpr int kEnumerateLimit = 5;
inline constexpr int kEnumerateOverrideLimit = 6;

struct EnumerateOptions {
  bool allow_n6 = false;
  int jobs = 1;  // workers over contiguous code ranges; result is identical
                 // to the sequential scan for any job count
};

// Iterates all 3^(n(n-1)/2) orientation profiles and keeps the Nash
// equilibria. Double-buy profiles are never NE (dropping the duplicate link
// saves alpha), so restricting to orientations loses nothing.
EquilibriumSet enumerate_ne(const CelebrityGame& g,
                            const EnumerateOptions& opts = {});

enum class Schedule { RoundRobin, RandomSeeded };

struct DynamicsMove {
  int round;  // 1-based
  int player;
  std::vector<int> old_strategy;
  std::vector<int> new_strategy;
  Rational delta;  // strictly negative
};

struct DynamicsTrace {
  Schedule schedule;
  ResponseMethod responder;
  std::vector<DynamicsMove> moves;
  // True only when the final profile survived a full silent round and, for
  // the greedy responder at exactly-checkable sizes, an is_ne re-check.
  bool converged = false;
  int rounds_executed = 0;
  StrategyProfile final_profile{2};
};

// Activates players per schedule; each plays its responder's best response
// when strictly improving. Stops after a full no-improvement round or after
// max_rounds. RandomSeeded shuffles the activation order each round with
// SplitMix64(seed).
DynamicsTrace run_dynamics(const CelebrityGame& g,
                           const StrategyProfile& initial, Schedule schedule,
                           int max_rounds, ResponseMethod responder,
                           std::uint64_t seed = 0);

}  // namespace celebrity
