#include "coopet/coopetition.hpp"

#include <cassert>
#include <stdexcept>

#include "block_tally.hpp"

namespace coopet {

Partition2 Partition2::of(Coalition a, Coalition b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("2-partition parts must both be nonempty");
  if (!a.disjoint_with(b))
    throw std::invalid_argument("2-partition parts must be disjoint, got " +
                                coopet::to_string(a) + " and " + coopet::to_string(b));
  int lowest = (a | b).min_member();
  return a.contains(lowest) ? Partition2(a, b) : Partition2(b, a);
}

std::string to_string(const Partition2& pi) {
  return to_string(pi.first()) + "|" + to_string(pi.second());
}

Partition2Range::Partition2Range(Coalition s) {
  if (s.size() < 2)
    throw std::invalid_argument("2-partitions need a coalition of at least 2 players, got " +
                                to_string(s));
  low_ = s.mask() & (~s.mask() + 1);
  rest_ = s.mask() ^ low_;
}

int block_interaction(const SimpleGame& game, const Partition2& pi, Coalition t) {
  if (!pi.whole().disjoint_with(t))
    throw std::invalid_argument("block interaction: " + to_string(t) + " overlaps " +
                                to_string(pi));
  int bi = game.value(pi.whole() | t) - game.value(pi.first() | t) -
           game.value(pi.second() | t) + game.value(t);
  assert(bi >= -1 && bi <= 1);
  return bi;
}

std::string to_string(Model model) {
  return model == Model::Banzhaf ? "banzhaf" : "shapley-owen";
}

BigInt pow2(int k) { return BigInt(1) << k; }

Rational banzhaf_partition_weight(int s) {
  return make_rational(1, pow2(s - 1) - 1);
}

Rational shapley_owen_partition_weight(int part_size, int s) {
  return make_rational(2 * factorial(part_size) * factorial(s - part_size),
                       BigInt(s - 1) * factorial(s));
}

Rational banzhaf_outside_weight(int n, int s) {
  return make_rational(1, pow2(n - s));
}

Rational shapley_owen_outside_weight(int t, int n, int s) {
  return make_rational(factorial(t) * factorial(n - s - t), factorial(n - s + 1));
}

PartitionDistribution PartitionDistribution::explicit_weights(
    std::map<Partition2, Rational> weights) {
  PartitionDistribution dist(Kind::Explicit);
  dist.weights_ = std::move(weights);
  return dist;
}

Rational PartitionDistribution::weight(const Partition2& pi) const {
  switch (kind_) {
    case Kind::BanzhafUniform:
      return banzhaf_partition_weight(pi.whole().size());
    case Kind::ShapleyOwen:
      return shapley_owen_partition_weight(pi.first().size(), pi.whole().size());
    case Kind::Explicit: {
      auto it = weights_.find(pi);
      return it == weights_.end() ? Rational(0) : it->second;
    }
  }
  return 0;
}

bool PartitionDistribution::strictly_positive_on(Coalition s) const {
  if (kind_ != Kind::Explicit) return true;
  for (const Partition2 pi : partitions2(s))
    if (weight(pi) <= 0) return false;
  return true;
}

void PartitionDistribution::validate_for(Coalition s) const {
  if (s.size() < 2)
    throw std::invalid_argument("partition distribution needs |S| >= 2, got " +
                                to_string(s));
  if (kind_ != Kind::Explicit) return;
  for (const auto& [pi, w] : weights_) {
    if (pi.whole() != s)
      throw std::invalid_argument("partition distribution supported outside the 2-partitions of " +
                                  to_string(s) + ": " + to_string(pi));
    if (w < 0)
      throw std::invalid_argument("negative partition weight " + format_rational(w) +
                                  " at " + to_string(pi));
  }
  Rational sum = 0;
  for (const auto& [pi, w] : weights_) sum += w;
  if (sum != 1)
    throw std::invalid_argument("partition weights sum to " + format_rational(sum) +
                                ", expected 1");
}

OutsideDistribution OutsideDistribution::explicit_weights(
    std::map<Coalition, Rational> weights) {
  OutsideDistribution dist(Kind::Explicit);
  dist.weights_ = std::move(weights);
  return dist;
}

Rational OutsideDistribution::weight(Coalition t, int n, int s) const {
  switch (kind_) {
    case Kind::BanzhafUniform:
      return banzhaf_outside_weight(n, s);
    case Kind::ShapleyOwen:
      return shapley_owen_outside_weight(t.size(), n, s);
    case Kind::Explicit: {
      auto it = weights_.find(t);
      return it == weights_.end() ? Rational(0) : it->second;
    }
  }
  return 0;
}

void OutsideDistribution::validate_for(Coalition s, int n) const {
  if (kind_ != Kind::Explicit) return;
  Coalition rest = Coalition::full(n).minus(s);
  Rational sum = 0;
  for (const auto& [t, w] : weights_) {
    if (!t.subset_of(rest))
      throw std::invalid_argument("outside distribution supported beyond the complement of " +
                                  to_string(s) + ": " + to_string(t));
    if (w < 0)
      throw std::invalid_argument("negative outside weight " + format_rational(w) + " at " +
                                  to_string(t));
    sum += w;
  }
  if (sum != 1)
    throw std::invalid_argument("outside weights sum to " + format_rational(sum) +
                                ", expected 1");
}

PartitionDistribution partition_distribution(Model model) {
  return model == Model::Banzhaf ? PartitionDistribution::banzhaf()
                                 : PartitionDistribution::shapley_owen();
}

OutsideDistribution outside_distribution(Model model) {
  return model == Model::Banzhaf ? OutsideDistribution::banzhaf()
                                 : OutsideDistribution::shapley_owen();
}

namespace {

Rational attitude_unchecked(const SimpleGame& game, Coalition s, Coalition t,
                            const PartitionDistribution& p) {
  if (p.kind() == PartitionDistribution::Kind::Explicit) {
    Rational total = 0;
    for (const Partition2 pi : partitions2(s)) {
      int bi = block_interaction(game, pi, t);
      if (bi != 0) total += p.weight(pi) * bi;
    }
    return total;
  }
  Model model = p.kind() == PartitionDistribution::Kind::BanzhafUniform ? Model::Banzhaf
                                                                        : Model::ShapleyOwen;
  std::vector<long long> net(s.size(), 0);
  for (const Partition2 pi : partitions2(s))
    net[pi.first().size()] += block_interaction(game, pi, t);
  Rational total = 0;
  for (int a = 1; a < s.size(); ++a)
    if (net[a] != 0) total += internal::partition_weight(model, a, s.size()) * net[a];
  return total;
}

}  // namespace

Rational attitude(const SimpleGame& game, Coalition s, Coalition t,
                  const PartitionDistribution& p) {
  p.validate_for(s);
  if (!s.disjoint_with(t))
    throw std::invalid_argument("attitude: " + to_string(t) + " overlaps " + to_string(s));
  return attitude_unchecked(game, s, t, p);
}

Rational coopetition(const SimpleGame& game, Coalition s, const PartitionDistribution& p,
                     const OutsideDistribution& q) {
  p.validate_for(s);
  q.validate_for(s, game.player_count());
  const int n = game.player_count();
  Coalition rest = game.grand_coalition().minus(s);

  const bool p_closed = p.kind() != PartitionDistribution::Kind::Explicit;
  const bool q_closed = q.kind() != OutsideDistribution::Kind::Explicit;
  if (p_closed && q_closed &&
      (p.kind() == PartitionDistribution::Kind::BanzhafUniform) ==
          (q.kind() == OutsideDistribution::Kind::BanzhafUniform)) {
    Model model = p.kind() == PartitionDistribution::Kind::BanzhafUniform
                      ? Model::Banzhaf
                      : Model::ShapleyOwen;
    internal::BlockTally tally = internal::tally_block_interactions(game, s);
    std::vector<std::vector<long long>> net = tally.pos;
    for (std::size_t t = 0; t < net.size(); ++t)
      for (std::size_t a = 0; a < net[t].size(); ++a) net[t][a] -= tally.neg[t][a];
    return internal::combine_counts(net, tally, model);
  }

  Rational total = 0;
  for (Coalition t : subsets_of(rest)) {
    Rational qw = q.weight(t, n, s.size());
    if (qw != 0) total += qw * attitude_unchecked(game, s, t, p);
  }
  return total;
}

Rational banzhaf_attitude(const SimpleGame& game, Coalition s, Coalition t) {
  return attitude(game, s, t, PartitionDistribution::banzhaf());
}

Rational shapley_owen_attitude(const SimpleGame& game, Coalition s, Coalition t) {
  return attitude(game, s, t, PartitionDistribution::shapley_owen());
}

Rational banzhaf_coopetition(const SimpleGame& game, Coalition s) {
  return coopetition(game, s, PartitionDistribution::banzhaf(),
                     OutsideDistribution::banzhaf());
}

Rational shapley_owen_coopetition(const SimpleGame& game, Coalition s) {
  return coopetition(game, s, PartitionDistribution::shapley_owen(),
                     OutsideDistribution::shapley_owen());
}

}  // namespace coopet
