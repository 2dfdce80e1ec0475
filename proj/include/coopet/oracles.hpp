#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "coopet/decisiveness.hpp"

namespace coopet {

// Deliberately naive reference implementations. They exist to validate the
// production closed forms, so they enumerate instead of summing coefficients
// and fail loudly behind size guards instead of trying to scale.

/// Shapley-Owen coopetition via explicit enumeration of every player sequence
/// in which S arrives as a contiguous block. Guarded to n <= 10 since there
/// are (n-s+1)! s! such sequences.
Rational so_coopetition_by_sequences(const SimpleGame& game, Coalition s);

/// Shapley-Owen attitude via the sequences whose predecessors of the block are
/// exactly T. Same guard.
Rational so_attitude_by_sequences(const SimpleGame& game, Coalition s, Coalition t);

struct ApexIndexValues {
  Rational coopetition;
  Rational decisiveness;
};

/// Case-split closed forms for the apex game under arbitrary distributions:
///   a not in S:   C = q((S u a)^c) - q({a}),        D = q((S u a)^c) + q({a})
///   a in S != N:  C = (q(empty) - q(S^c)) p({a, S\a}),
///                 D = (q(empty) + q(S^c)) p({a, S\a})
///   S = N:        C = D = 0
ApexIndexValues apex_closed_forms(int n, int apex_player, Coalition s,
                                  const PartitionDistribution& p,
                                  const OutsideDistribution& q);

/// Random simple monotone game: samples up to max_sets uniform nonempty
/// subsets, prunes them to an antichain of minimal sets, and falls back to the
/// grand coalition if nothing survives.
SimpleGame random_monotone_game(std::mt19937_64& rng, int n, int max_sets = 4);

/// Every simple monotone game on n players (166 at n = 4, 7579 at n = 5),
/// generated by walking the subset lattice. Guarded to n <= 5.
void for_each_monotone_game(int n, const std::function<void(const SimpleGame&)>& fn);

/// Random explicit distributions built from small integer weights, normalized
/// exactly. With strictly_positive every weight is at least 1.
PartitionDistribution random_partition_distribution(std::mt19937_64& rng, Coalition s,
                                                    bool strictly_positive);
OutsideDistribution random_outside_distribution(std::mt19937_64& rng, int n, Coalition s,
                                                bool strictly_positive);

struct HarnessReport {
  struct Line {
    std::string name;
    long long trials = 0;
    long long violations = 0;
  };
  std::vector<Line> lines;
  bool all_passed() const;
  std::string to_text() const;
};

/// Randomized (and where cheap, exhaustive) verification of the index laws:
/// attitude extremes, dilution by an extra critical player, null-player
/// scaling, coopetition extremes, monotonicity under minimal-winning-coalition
/// splits, pair/triplet attitude coincidence, and the bundle identities.
/// Deterministic for a fixed seed.
HarnessReport proposition_harness(std::uint64_t seed, int trials);

}  // namespace coopet
