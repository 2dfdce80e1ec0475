#include "coopet/decisiveness.hpp"

#include <cassert>
#include <stdexcept>

#include "block_tally.hpp"

namespace coopet {

int block_cooperation(const SimpleGame& game, const Partition2& pi, Coalition t) {
  int bi = block_interaction(game, pi, t);
  return bi > 0 ? bi : 0;
}

int block_competition(const SimpleGame& game, const Partition2& pi, Coalition t) {
  int bi = block_interaction(game, pi, t);
  return bi < 0 ? -bi : 0;
}

namespace {

IndexBundle finish(Rational cooperative, Rational competitive, const Rational& abs_total) {
  IndexBundle bundle;
  bundle.coopetition = cooperative - competitive;
  bundle.decisiveness = cooperative + competitive;
  bundle.cooperative = std::move(cooperative);
  bundle.competitive = std::move(competitive);
  assert(bundle.decisiveness == abs_total);
  (void)abs_total;
  assert(bundle.decisiveness >= 0 && bundle.decisiveness <= 1);
  assert(abs(bundle.coopetition) <= bundle.decisiveness);
  return bundle;
}

}  // namespace

IndexBundle index_bundle(const SimpleGame& game, Coalition s,
                         const PartitionDistribution& p, const OutsideDistribution& q) {
  p.validate_for(s);
  q.validate_for(s, game.player_count());
  const int n = game.player_count();
  Coalition rest = game.grand_coalition().minus(s);

  const bool closed_pair =
      p.kind() != PartitionDistribution::Kind::Explicit &&
      q.kind() != OutsideDistribution::Kind::Explicit &&
      (p.kind() == PartitionDistribution::Kind::BanzhafUniform) ==
          (q.kind() == OutsideDistribution::Kind::BanzhafUniform);
  if (closed_pair) {
    Model model = p.kind() == PartitionDistribution::Kind::BanzhafUniform
                      ? Model::Banzhaf
                      : Model::ShapleyOwen;
    internal::BlockTally tally = internal::tally_block_interactions(game, s);
    Rational cooperative = internal::combine_counts(tally.pos, tally, model);
    Rational competitive = internal::combine_counts(tally.neg, tally, model);
    std::vector<std::vector<long long>> abs_counts = tally.pos;
    for (std::size_t t = 0; t < abs_counts.size(); ++t)
      for (std::size_t a = 0; a < abs_counts[t].size(); ++a)
        abs_counts[t][a] += tally.neg[t][a];
    return finish(std::move(cooperative), std::move(competitive),
                  internal::combine_counts(abs_counts, tally, model));
  }

  Rational cooperative = 0, competitive = 0, abs_total = 0;
  for (Coalition t : subsets_of(rest)) {
    Rational qw = q.weight(t, n, s.size());
    if (qw == 0) continue;
    for (const Partition2 pi : partitions2(s)) {
      int bi = block_interaction(game, pi, t);
      if (bi == 0) continue;
      Rational w = qw * p.weight(pi);
      if (bi > 0)
        cooperative += w;
      else
        competitive += w;
      abs_total += w;
    }
  }
  return finish(std::move(cooperative), std::move(competitive), abs_total);
}

IndexBundle index_bundle(const SimpleGame& game, Coalition s, Model model) {
  return index_bundle(game, s, partition_distribution(model), outside_distribution(model));
}

Rational cooperative_index(const SimpleGame& game, Coalition s,
                           const PartitionDistribution& p, const OutsideDistribution& q) {
  return index_bundle(game, s, p, q).cooperative;
}

Rational competitive_index(const SimpleGame& game, Coalition s,
                           const PartitionDistribution& p, const OutsideDistribution& q) {
  return index_bundle(game, s, p, q).competitive;
}

Rational decisiveness(const SimpleGame& game, Coalition s, const PartitionDistribution& p,
                      const OutsideDistribution& q) {
  return index_bundle(game, s, p, q).decisiveness;
}

}  // namespace coopet
