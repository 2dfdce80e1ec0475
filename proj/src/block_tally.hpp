#pragma once

// Internal: integer tallies of block interaction signs, bucketed by outside
// coalition size t and first-part size a. Both closed-form models weight a
// partition only through these two numbers, so a single enumeration pass per
// (game, S) serves every index and both models; rational arithmetic happens
// once per bucket instead of once per term.

#include <vector>

#include "coopet/coopetition.hpp"

namespace coopet::internal {

struct BlockTally {
  int n = 0;
  int s = 0;
  // pos[t][a] / neg[t][a]: number of (T, partition) pairs with |T| = t and
  // |first part| = a whose block interaction is +1 / -1.
  std::vector<std::vector<long long>> pos;
  std::vector<std::vector<long long>> neg;
};

inline BlockTally tally_block_interactions(const SimpleGame& game, Coalition s) {
  BlockTally tally;
  tally.n = game.player_count();
  tally.s = s.size();
  Coalition rest = game.grand_coalition().minus(s);
  tally.pos.assign(rest.size() + 1, std::vector<long long>(tally.s, 0));
  tally.neg.assign(rest.size() + 1, std::vector<long long>(tally.s, 0));
  for (Coalition t : subsets_of(rest)) {
    const int tsize = t.size();
    for (const Partition2 pi : partitions2(s)) {
      int bi = block_interaction(game, pi, t);
      if (bi > 0)
        ++tally.pos[tsize][pi.first().size()];
      else if (bi < 0)
        ++tally.neg[tsize][pi.first().size()];
    }
  }
  return tally;
}

inline Rational partition_weight(Model model, int a, int s) {
  return model == Model::Banzhaf ? banzhaf_partition_weight(s)
                                 : shapley_owen_partition_weight(a, s);
}

inline Rational outside_weight(Model model, int t, int n, int s) {
  return model == Model::Banzhaf ? banzhaf_outside_weight(n, s)
                                 : shapley_owen_outside_weight(t, n, s);
}

/// q- and p-weighted total of the given per-bucket counts.
inline Rational combine_counts(const std::vector<std::vector<long long>>& counts,
                               const BlockTally& tally, Model model) {
  Rational total = 0;
  for (int t = 0; t < static_cast<int>(counts.size()); ++t) {
    Rational inner = 0;
    for (int a = 1; a < tally.s; ++a)
      if (counts[t][a] != 0)
        inner += partition_weight(model, a, tally.s) * counts[t][a];
    if (inner != 0) total += outside_weight(model, t, tally.n, tally.s) * inner;
  }
  return total;
}

}  // namespace coopet::internal
