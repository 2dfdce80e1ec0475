#pragma once

#include <string>
#include <variant>
#include <vector>

#include "coopet/coalition.hpp"

namespace coopet {

enum class GameKind { ExplicitWinning, MinimalWinning, Weighted, Apex, Majority };

std::string to_string(GameKind kind);

/// Raw, possibly invalid game data as read from a file or assembled by hand.
/// `validate` turns it into a report; `SimpleGame` only accepts definitions
/// whose report is clean.
struct GameDefinition {
  int n = 0;
  GameKind kind = GameKind::MinimalWinning;
  std::vector<std::vector<int>> coalitions;  // mwc / winning kinds, 1-based ids
  std::vector<long long> weights;            // weighted kind
  long long quota = 0;                       // weighted and majority kinds
  int apex_player = 0;                       // apex kind
  bool allow_weak_majority = false;          // lifts the quota > n/2 requirement
};

struct ValidationReport {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
  std::string to_string() const;
};

ValidationReport validate(const GameDefinition& def);

/// A simple monotone game: v maps coalitions to {0,1}, v is monotone under
/// inclusion, v(empty) = 0 and v(N) = 1. Values are immutable after
/// construction, so every operation is const and safe to call concurrently.
class SimpleGame {
 public:
  /// Throws std::invalid_argument carrying the validation report if `def` does
  /// not describe a simple monotone game.
  explicit SimpleGame(const GameDefinition& def);

  static SimpleGame minimal_winning(int n, const std::vector<Coalition>& mwc);
  static SimpleGame explicit_winning(int n, const std::vector<Coalition>& winning);
  static SimpleGame weighted(std::vector<long long> weights, long long quota);
  static SimpleGame apex(int n, int apex_player);
  static SimpleGame majority(int n, int quota, bool allow_weak = false);

  int player_count() const { return n_; }
  Coalition grand_coalition() const { return Coalition::full(n_); }
  GameKind kind() const { return kind_; }

  /// v(S). Throws std::out_of_range if S has members outside 1..n.
  int value(Coalition s) const;

  /// v(S u T) - v(T); S and T must be disjoint.
  int derivative(Coalition s, Coalition t) const;

  /// S is critical wrt T when its derivative against T is 1. Requires S
  /// nonempty and disjoint from T.
  bool is_critical(Coalition s, Coalition t) const;

  /// Critical, and no proper nonempty subset of S is critical for the same T.
  /// By monotonicity it is enough to test the |S| subsets one player short.
  bool is_essential_critical(Coalition s, Coalition t) const;

  /// True when the player's derivative is 0 against every coalition. Uses the
  /// minimal-winning shortcut (absent from every minimal winning coalition)
  /// when that representation is available, full enumeration otherwise.
  bool is_null_player(int id) const;

  /// Winning coalitions none of whose one-player-removed subsets win, sorted
  /// by size then lexicographic member order. Enumerates all 2^n subsets for
  /// representations that do not already store the antichain.
  std::vector<Coalition> minimal_winning_coalitions() const;

 private:
  struct ExplicitRep {
    std::vector<Mask> winning;  // sorted
  };
  struct MinimalRep {
    std::vector<Mask> antichain;
  };
  struct WeightedRep {
    std::vector<long long> weights;
    long long quota;
  };
  struct ApexRep {
    Mask apex;
  };
  struct MajorityRep {
    long long quota;
  };

  void require_members(Coalition s) const;

  int n_ = 0;
  GameKind kind_;
  std::variant<ExplicitRep, MinimalRep, WeightedRep, ApexRep, MajorityRep> rep_;
};

}  // namespace coopet
