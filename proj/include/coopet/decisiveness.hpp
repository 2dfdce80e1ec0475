#pragma once

#include "coopet/coopetition.hpp"

namespace coopet {

/// Positive and negative parts of the block interaction indicator.
int block_cooperation(const SimpleGame& game, const Partition2& pi, Coalition t);
int block_competition(const SimpleGame& game, const Partition2& pi, Coalition t);

/// The four indices of one coalition, computed in a single enumeration pass:
/// coopetition = cooperative - competitive and decisiveness = cooperative +
/// competitive hold exactly by construction and are re-asserted in debug
/// builds against an independent |BI| accumulation.
struct IndexBundle {
  Rational cooperative;   // q,p-weighted mass of +1 block interactions
  Rational competitive;   // q,p-weighted mass of -1 block interactions
  Rational coopetition;   // cooperative - competitive
  Rational decisiveness;  // cooperative + competitive
};

IndexBundle index_bundle(const SimpleGame& game, Coalition s,
                         const PartitionDistribution& p, const OutsideDistribution& q);
IndexBundle index_bundle(const SimpleGame& game, Coalition s, Model model);

Rational cooperative_index(const SimpleGame& game, Coalition s,
                           const PartitionDistribution& p, const OutsideDistribution& q);
Rational competitive_index(const SimpleGame& game, Coalition s,
                           const PartitionDistribution& p, const OutsideDistribution& q);
Rational decisiveness(const SimpleGame& game, Coalition s, const PartitionDistribution& p,
                      const OutsideDistribution& q);

}  // namespace coopet
