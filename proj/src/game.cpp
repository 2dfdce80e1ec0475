#include "coopet/game.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace coopet {

std::string to_string(GameKind kind) {
  switch (kind) {
    case GameKind::ExplicitWinning: return "winning";
    case GameKind::MinimalWinning: return "mwc";
    case GameKind::Weighted: return "weighted";
    case GameKind::Apex: return "apex";
    case GameKind::Majority: return "majority";
  }
  return "?";
}

std::string ValidationReport::to_string() const {
  if (ok()) return "valid";
  std::string out;
  for (const auto& issue : issues) {
    out += issue;
    out += "\n";
  }
  return out;
}

namespace {

bool ids_ok(const GameDefinition& def, ValidationReport& report) {
  bool ok = true;
  if (def.n < 1 || def.n > kMaxPlayers) {
    report.issues.push_back("player count n=" + std::to_string(def.n) +
                            " outside 1.." + std::to_string(kMaxPlayers));
    return false;
  }
  for (std::size_t k = 0; k < def.coalitions.size(); ++k) {
    std::set<int> seen;
    for (int id : def.coalitions[k]) {
      if (id < 1 || id > def.n) {
        report.issues.push_back("coalition #" + std::to_string(k + 1) + ": player id " +
                                std::to_string(id) + " out of range 1.." +
                                std::to_string(def.n));
        ok = false;
      } else if (!seen.insert(id).second) {
        report.issues.push_back("coalition #" + std::to_string(k + 1) +
                                ": duplicate player id " + std::to_string(id));
        ok = false;
      }
    }
  }
  return ok;
}

std::vector<Mask> to_masks(const std::vector<std::vector<int>>& coalitions) {
  std::vector<Mask> out;
  out.reserve(coalitions.size());
  for (const auto& ids : coalitions) out.push_back(Coalition::from_ids(ids).mask());
  return out;
}

}  // namespace

ValidationReport validate(const GameDefinition& def) {
  ValidationReport report;
  if (!ids_ok(def, report)) return report;
  const Mask everyone = Coalition::full(def.n).mask();

  switch (def.kind) {
    case GameKind::ExplicitWinning: {
      std::vector<Mask> winning = to_masks(def.coalitions);
      std::sort(winning.begin(), winning.end());
      winning.erase(std::unique(winning.begin(), winning.end()), winning.end());
      if (std::binary_search(winning.begin(), winning.end(), Mask{0}))
        report.issues.push_back("the empty coalition is listed as winning (v(empty) must be 0)");
      if (!std::binary_search(winning.begin(), winning.end(), everyone))
        report.issues.push_back("the grand coalition is not winning (v(N) must be 1)");
      for (Mask w : winning) {
        for (int i = 0; i < def.n; ++i) {
          Mask sup = w | (Mask{1} << i);
          if (sup != w && !std::binary_search(winning.begin(), winning.end(), sup)) {
            report.issues.push_back(
                "monotonicity violation: " + to_string(Coalition::from_mask(w)) +
                " wins but its superset " + to_string(Coalition::from_mask(sup)) +
                " does not");
          }
        }
      }
      break;
    }
    case GameKind::MinimalWinning: {
      std::vector<Mask> sets = to_masks(def.coalitions);
      if (sets.empty())
        report.issues.push_back("no minimal winning coalition given (v(N) must be 1)");
      for (Mask m : sets)
        if (m == 0)
          report.issues.push_back("the empty coalition is listed as winning (v(empty) must be 0)");
      for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = 0; j < sets.size(); ++j)
          if (i != j && (sets[i] & sets[j]) == sets[i] && sets[i] != 0) {
            if (sets[i] == sets[j] && i > j) continue;  // report duplicates once
            report.issues.push_back("antichain violation: " +
                                    to_string(Coalition::from_mask(sets[i])) +
                                    " is contained in " +
                                    to_string(Coalition::from_mask(sets[j])));
          }
      break;
    }
    case GameKind::Weighted: {
      if (static_cast<int>(def.weights.size()) != def.n)
        report.issues.push_back("expected " + std::to_string(def.n) + " weights, got " +
                                std::to_string(def.weights.size()));
      for (long long w : def.weights)
        if (w < 0) report.issues.push_back("negative weight " + std::to_string(w));
      if (def.quota < 1)
        report.issues.push_back("quota must be positive (v(empty) must be 0)");
      long long total = std::accumulate(def.weights.begin(), def.weights.end(), 0LL);
      if (static_cast<int>(def.weights.size()) == def.n && total < def.quota)
        report.issues.push_back("total weight " + std::to_string(total) +
                                " below quota " + std::to_string(def.quota) +
                                " (v(N) must be 1)");
      break;
    }
    case GameKind::Apex: {
      if (def.n < 2)
        report.issues.push_back("apex game needs at least 2 players");
      if (def.apex_player < 1 || def.apex_player > def.n)
        report.issues.push_back("apex player " + std::to_string(def.apex_player) +
                                " out of range 1.." + std::to_string(def.n));
      break;
    }
    case GameKind::Majority: {
      if (def.quota < 1 || def.quota > def.n)
        report.issues.push_back("majority quota " + std::to_string(def.quota) +
                                " outside 1.." + std::to_string(def.n));
      else if (!def.allow_weak_majority && 2 * def.quota <= def.n)
        report.issues.push_back("majority quota " + std::to_string(def.quota) +
                                " does not exceed n/2; pass the override to allow it");
      break;
    }
  }
  return report;
}

SimpleGame::SimpleGame(const GameDefinition& def) : n_(def.n), kind_(def.kind) {
  ValidationReport report = validate(def);
  if (!report.ok()) throw std::invalid_argument("invalid game: " + report.to_string());
  switch (def.kind) {
    case GameKind::ExplicitWinning: {
      ExplicitRep rep{to_masks(def.coalitions)};
      std::sort(rep.winning.begin(), rep.winning.end());
      rep.winning.erase(std::unique(rep.winning.begin(), rep.winning.end()),
                        rep.winning.end());
      rep_ = std::move(rep);
      break;
    }
    case GameKind::MinimalWinning: {
      MinimalRep rep{to_masks(def.coalitions)};
      std::sort(rep.antichain.begin(), rep.antichain.end(),
                [](Mask a, Mask b) {
                  return size_lex_less(Coalition::from_mask(a), Coalition::from_mask(b));
                });
      rep_ = std::move(rep);
      break;
    }
    case GameKind::Weighted:
      rep_ = WeightedRep{def.weights, def.quota};
      break;
    case GameKind::Apex:
      rep_ = ApexRep{Coalition::single(def.apex_player).mask()};
      break;
    case GameKind::Majority:
      rep_ = MajorityRep{def.quota};
      break;
  }
}

SimpleGame SimpleGame::minimal_winning(int n, const std::vector<Coalition>& mwc) {
  GameDefinition def;
  def.n = n;
  def.kind = GameKind::MinimalWinning;
  for (Coalition c : mwc) def.coalitions.push_back(c.members());
  return SimpleGame(def);
}

SimpleGame SimpleGame::explicit_winning(int n, const std::vector<Coalition>& winning) {
  GameDefinition def;
  def.n = n;
  def.kind = GameKind::ExplicitWinning;
  for (Coalition c : winning) def.coalitions.push_back(c.members());
  return SimpleGame(def);
}

SimpleGame SimpleGame::weighted(std::vector<long long> weights, long long quota) {
  GameDefinition def;
  def.n = static_cast<int>(weights.size());
  def.kind = GameKind::Weighted;
  def.weights = std::move(weights);
  def.quota = quota;
  return SimpleGame(def);
}

SimpleGame SimpleGame::apex(int n, int apex_player) {
  GameDefinition def;
  def.n = n;
  def.kind = GameKind::Apex;
  def.apex_player = apex_player;
  return SimpleGame(def);
}

SimpleGame SimpleGame::majority(int n, int quota, bool allow_weak) {
  GameDefinition def;
  def.n = n;
  def.kind = GameKind::Majority;
  def.quota = quota;
  def.allow_weak_majority = allow_weak;
  return SimpleGame(def);
}

void SimpleGame::require_members(Coalition s) const {
  if (!s.subset_of(grand_coalition()))
    throw std::out_of_range("coalition " + to_string(s) + " has members outside 1.." +
                            std::to_string(n_));
}

int SimpleGame::value(Coalition s) const {
  require_members(s);
  const Mask m = s.mask();
  return std::visit(
      [&](const auto& rep) -> int {
        using R = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<R, ExplicitRep>) {
          return std::binary_search(rep.winning.begin(), rep.winning.end(), m) ? 1 : 0;
        } else if constexpr (std::is_same_v<R, MinimalRep>) {
          for (Mask w : rep.antichain)
            if ((m & w) == w) return 1;
          return 0;
        } else if constexpr (std::is_same_v<R, WeightedRep>) {
          long long total = 0;
          Mask rest = m;
          while (rest) {
            total += rep.weights[std::countr_zero(rest)];
            rest &= rest - 1;
          }
          return total >= rep.quota ? 1 : 0;
        } else if constexpr (std::is_same_v<R, ApexRep>) {
          if ((m & rep.apex) && (m & ~rep.apex)) return 1;
          return m == (grand_coalition().mask() ^ rep.apex) ? 1 : 0;
        } else {
          static_assert(std::is_same_v<R, MajorityRep>);
          return s.size() >= rep.quota ? 1 : 0;
        }
      },
      rep_);
}

int SimpleGame::derivative(Coalition s, Coalition t) const {
  if (!s.disjoint_with(t))
    throw std::invalid_argument("derivative requires disjoint coalitions, got " +
                                to_string(s) + " and " + to_string(t));
  return value(s | t) - value(t);
}

bool SimpleGame::is_critical(Coalition s, Coalition t) const {
  if (s.empty()) throw std::invalid_argument("criticality of the empty coalition");
  return derivative(s, t) == 1;
}

bool SimpleGame::is_essential_critical(Coalition s, Coalition t) const {
  if (!is_critical(s, t)) return false;
  if (s.size() < 2) return true;
  for (int id : s.members())
    if (derivative(s.minus(Coalition::single(id)), t) == 1) return false;
  return true;
}

bool SimpleGame::is_null_player(int id) const {
  Coalition player = Coalition::single(id);
  require_members(player);
  if (const auto* rep = std::get_if<MinimalRep>(&rep_)) {
    for (Mask w : rep->antichain)
      if (w & player.mask()) return false;
    return true;
  }
  for (Coalition t : subsets_of(grand_coalition().minus(player)))
    if (value(t | player) != value(t)) return false;
  return true;
}

std::vector<Coalition> SimpleGame::minimal_winning_coalitions() const {
  std::vector<Coalition> out;
  if (const auto* rep = std::get_if<MinimalRep>(&rep_)) {
    for (Mask w : rep->antichain) out.push_back(Coalition::from_mask(w));
  } else {
    for (Coalition s : subsets_of(grand_coalition())) {
      if (s.empty() || value(s) != 1) continue;
      bool minimal = true;
      for (int id : s.members())
        if (value(s.minus(Coalition::single(id))) == 1) {
          minimal = false;
          break;
        }
      if (minimal) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), size_lex_less);
  }
  return out;
}

}  // namespace coopet
