#pragma once

#include <compare>
#include <map>

#include "coopet/game.hpp"
#include "coopet/rational.hpp"

namespace coopet {

/// An unordered split of a coalition into two nonempty disjoint parts. The
/// stored order is canonical: `first` is the part holding the smallest player
/// id of the union, so equal partitions compare equal.
class Partition2 {
 public:
  /// Canonicalizes {a, b}. Throws std::invalid_argument unless a and b are
  /// disjoint and both nonempty.
  static Partition2 of(Coalition a, Coalition b);

  Coalition first() const { return first_; }
  Coalition second() const { return second_; }
  Coalition whole() const { return first_ | second_; }

  auto operator<=>(const Partition2&) const = default;

 private:
  Partition2(Coalition f, Coalition s) : first_(f), second_(s) {}
  friend class Partition2Range;
  Coalition first_;
  Coalition second_;
};

std::string to_string(const Partition2& pi);

/// The 2^(s-1) - 1 non-trivial 2-partitions of S, each exactly once in
/// canonical form, ordered by increasing bit pattern of `first`. Splitting off
/// the half that omits min(S) would only repeat these, so the enumeration
/// itself performs the usual halving.
class Partition2Range {
 public:
  /// Throws std::invalid_argument when |S| < 2.
  explicit Partition2Range(Coalition s);

  struct sentinel {};
  class iterator {
   public:
    iterator(Mask low, Mask rest) : low_(low), rest_(rest), sub_(0) {}
    Partition2 operator*() const {
      return Partition2(Coalition::from_mask(low_ | sub_),
                        Coalition::from_mask(rest_ & ~sub_));
    }
    iterator& operator++() {
      sub_ = (sub_ - rest_) & rest_;
      return *this;
    }
    bool operator!=(sentinel) const { return sub_ != rest_; }

   private:
    Mask low_;
    Mask rest_;
    Mask sub_;
  };

  iterator begin() const { return iterator(low_, rest_); }
  sentinel end() const { return {}; }

 private:
  Mask low_;
  Mask rest_;
};

inline Partition2Range partitions2(Coalition s) { return Partition2Range(s); }

/// v(S1 u S2 u T) - v(S1 u T) - v(S2 u T) + v(T); lies in {-1,0,1} for
/// monotone simple games. T must not meet the partitioned coalition.
int block_interaction(const SimpleGame& game, const Partition2& pi, Coalition t);

enum class Model { Banzhaf, ShapleyOwen };

std::string to_string(Model model);

BigInt pow2(int k);

/// Weight of one 2-partition under the two closed-form families.
Rational banzhaf_partition_weight(int s);
Rational shapley_owen_partition_weight(int part_size, int s);

/// Weight of one outside coalition of size t under the two families.
Rational banzhaf_outside_weight(int n, int s);
Rational shapley_owen_outside_weight(int t, int n, int s);

/// Probability distribution over the non-trivial 2-partitions of a coalition:
/// either one of the closed-form families or an explicit weight map. Explicit
/// maps are validated eagerly and exactly (nonnegative, supported inside
/// Pi_2(S), summing to one).
class PartitionDistribution {
 public:
  enum class Kind { BanzhafUniform, ShapleyOwen, Explicit };

  static PartitionDistribution banzhaf() { return PartitionDistribution(Kind::BanzhafUniform); }
  static PartitionDistribution shapley_owen() { return PartitionDistribution(Kind::ShapleyOwen); }
  static PartitionDistribution explicit_weights(std::map<Partition2, Rational> weights);

  Kind kind() const { return kind_; }
  Rational weight(const Partition2& pi) const;
  bool strictly_positive_on(Coalition s) const;

  /// Throws std::invalid_argument if the distribution is not valid for S.
  void validate_for(Coalition s) const;

 private:
  explicit PartitionDistribution(Kind kind) : kind_(kind) {}
  Kind kind_;
  std::map<Partition2, Rational> weights_;
};

/// Probability distribution over the subsets of N \ S.
class OutsideDistribution {
 public:
  enum class Kind { BanzhafUniform, ShapleyOwen, Explicit };

  static OutsideDistribution banzhaf() { return OutsideDistribution(Kind::BanzhafUniform); }
  static OutsideDistribution shapley_owen() { return OutsideDistribution(Kind::ShapleyOwen); }
  static OutsideDistribution explicit_weights(std::map<Coalition, Rational> weights);

  Kind kind() const { return kind_; }
  Rational weight(Coalition t, int n, int s) const;

  void validate_for(Coalition s, int n) const;

 private:
  explicit OutsideDistribution(Kind kind) : kind_(kind) {}
  Kind kind_;
  std::map<Coalition, Rational> weights_;
};

PartitionDistribution partition_distribution(Model model);
OutsideDistribution outside_distribution(Model model);

/// Attitude of S towards T: the p-weighted average of the block interaction
/// indicator over all non-trivial 2-partitions of S. Lies in [-1, 1].
/// Requires |S| >= 2, S and T disjoint, and p valid for S.
Rational attitude(const SimpleGame& game, Coalition s, Coalition t,
                  const PartitionDistribution& p);

/// Coopetition index: the q-weighted average of attitudes over every outside
/// coalition. +1 means pure cooperation, -1 pure competition.
Rational coopetition(const SimpleGame& game, Coalition s, const PartitionDistribution& p,
                     const OutsideDistribution& q);

Rational banzhaf_attitude(const SimpleGame& game, Coalition s, Coalition t);
Rational shapley_owen_attitude(const SimpleGame& game, Coalition s, Coalition t);
Rational banzhaf_coopetition(const SimpleGame& game, Coalition s);
Rational shapley_owen_coopetition(const SimpleGame& game, Coalition s);

}  // namespace coopet
