#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace coopet {

using Mask = std::uint64_t;

inline constexpr int kMaxPlayers = 32;

/// A set of players encoded as a bit mask. Player ids are 1-based in every
/// user-facing surface; bit i-1 of the mask stands for player i.
class Coalition {
 public:
  constexpr Coalition() = default;

  static Coalition from_mask(Mask m);
  static Coalition from_ids(std::span<const int> ids);
  static Coalition of(std::initializer_list<int> ids);
  static Coalition single(int id);
  static Coalition full(int n);

  constexpr Mask mask() const { return mask_; }
  int size() const { return std::popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  bool contains(int id) const;
  bool subset_of(Coalition other) const { return (mask_ & other.mask_) == mask_; }
  bool disjoint_with(Coalition other) const { return (mask_ & other.mask_) == 0; }

  /// Smallest player id in the coalition. Throws on the empty coalition.
  int min_member() const;

  /// Sorted 1-based ids.
  std::vector<int> members() const;

  friend constexpr Coalition operator|(Coalition a, Coalition b) {
    return Coalition(a.mask_ | b.mask_);
  }
  friend constexpr Coalition operator&(Coalition a, Coalition b) {
    return Coalition(a.mask_ & b.mask_);
  }
  Coalition minus(Coalition other) const { return Coalition(mask_ & ~other.mask_); }
  Coalition complement_in(int n) const;

  auto operator<=>(const Coalition&) const = default;

 private:
  constexpr explicit Coalition(Mask m) : mask_(m) {}
  Mask mask_ = 0;
};

/// "{1,2,3}", "{}" for the empty coalition.
std::string to_string(Coalition c);

/// Orders by size, then lexicographically on the sorted member list
/// ({1,4} before {2,3}).
bool size_lex_less(Coalition a, Coalition b);

/// All subsets of a universe in increasing bit-pattern order, the empty set
/// first and the universe itself last.
class SubsetRange {
 public:
  explicit SubsetRange(Coalition universe) : universe_(universe.mask()) {}

  struct sentinel {};
  class iterator {
   public:
    iterator(Mask universe, Mask cur) : universe_(universe), cur_(cur) {}
    Coalition operator*() const { return Coalition::from_mask(cur_); }
    iterator& operator++() {
      if (cur_ == universe_) {
        done_ = true;
      } else {
        cur_ = (cur_ - universe_) & universe_;
      }
      return *this;
    }
    bool operator!=(sentinel) const { return !done_; }

   private:
    Mask universe_;
    Mask cur_;
    bool done_ = false;
  };

  iterator begin() const { return iterator(universe_, 0); }
  sentinel end() const { return {}; }

 private:
  Mask universe_;
};

inline SubsetRange subsets_of(Coalition universe) { return SubsetRange(universe); }

}  // namespace coopet
