#include "coopet/oracles.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace coopet {

namespace {

constexpr int kSequenceGuard = 10;

void check_sequence_guard(const SimpleGame& game, Coalition s) {
  if (s.size() < 2)
    throw std::invalid_argument("sequence oracle needs |S| >= 2, got " + to_string(s));
  if (game.player_count() > kSequenceGuard)
    throw std::invalid_argument("sequence oracle guarded to n <= " +
                                std::to_string(kSequenceGuard) + ", got n = " +
                                std::to_string(game.player_count()));
}

Mask prefix_mask(const std::vector<int>& ids, std::size_t count) {
  Mask m = 0;
  for (std::size_t i = 0; i < count; ++i) m |= Mask{1} << (ids[i] - 1);
  return m;
}

/// Sum over the entry orders of the block of the per-step block interactions
/// against a fixed predecessor set.
long long block_order_bi_sum(const SimpleGame& game, const std::vector<int>& members,
                             Coalition pre) {
  std::vector<int> block = members;
  std::sort(block.begin(), block.end());
  long long total = 0;
  do {
    for (std::size_t q = 1; q < block.size(); ++q) {
      Coalition first = Coalition::from_mask(prefix_mask(block, q));
      Coalition last = Coalition::from_mask(prefix_mask(block, block.size()) ^
                                            prefix_mask(block, q));
      total += block_interaction(game, Partition2::of(first, last), pre);
    }
  } while (std::next_permutation(block.begin(), block.end()));
  return total;
}

}  // namespace

Rational so_coopetition_by_sequences(const SimpleGame& game, Coalition s) {
  check_sequence_guard(game, s);
  const int size = s.size();
  std::vector<int> outsiders = game.grand_coalition().minus(s).members();

  long long bi_total = 0;
  long long sequence_count = 0;
  std::sort(outsiders.begin(), outsiders.end());
  do {
    for (std::size_t pos = 0; pos <= outsiders.size(); ++pos) {
      Coalition pre = Coalition::from_mask(prefix_mask(outsiders, pos));
      bi_total += block_order_bi_sum(game, s.members(), pre);
      sequence_count += static_cast<long long>(factorial(size));
    }
  } while (std::next_permutation(outsiders.begin(), outsiders.end()));
  assert(BigInt(sequence_count) ==
         factorial(game.player_count() - size + 1) * factorial(size));

  // Every sequence contributes its attitude (1/(s-1)) * sum of step BIs.
  return make_rational(bi_total, BigInt(sequence_count) * (size - 1));
}

Rational so_attitude_by_sequences(const SimpleGame& game, Coalition s, Coalition t) {
  check_sequence_guard(game, s);
  if (!s.disjoint_with(t))
    throw std::invalid_argument("sequence attitude: " + to_string(t) + " overlaps " +
                                to_string(s));
  const int n = game.player_count();
  const int size = s.size();
  const int tsize = t.size();

  // Each block order appears in t! (n-s-t)! sequences with predecessor set T.
  BigInt multiplicity = factorial(tsize) * factorial(n - size - tsize);
  BigInt numerator = multiplicity * block_order_bi_sum(game, s.members(), t);
  BigInt denominator = BigInt(size - 1) * factorial(tsize) * factorial(size) *
                       factorial(n - size - tsize);
  return make_rational(std::move(numerator), std::move(denominator));
}

ApexIndexValues apex_closed_forms(int n, int apex_player, Coalition s,
                                  const PartitionDistribution& p,
                                  const OutsideDistribution& q) {
  Coalition everyone = Coalition::full(n);
  Coalition apex = Coalition::single(apex_player);
  if (!apex.subset_of(everyone))
    throw std::out_of_range("apex player outside 1.." + std::to_string(n));
  if (s.size() < 2 || !s.subset_of(everyone))
    throw std::invalid_argument("apex closed forms need S with 2 <= |S| <= n inside 1.." +
                                std::to_string(n));
  p.validate_for(s);
  q.validate_for(s, n);

  ApexIndexValues out;
  if (s == everyone) return out;
  if (!apex.subset_of(s)) {
    Rational far = q.weight(everyone.minus(s | apex), n, s.size());
    Rational near = q.weight(apex, n, s.size());
    out.coopetition = far - near;
    out.decisiveness = far + near;
    return out;
  }
  Rational at_once = q.weight(Coalition(), n, s.size());
  Rational at_last = q.weight(everyone.minus(s), n, s.size());
  Rational split = p.weight(Partition2::of(apex, s.minus(apex)));
  out.coopetition = (at_once - at_last) * split;
  out.decisiveness = (at_once + at_last) * split;
  return out;
}

SimpleGame random_monotone_game(std::mt19937_64& rng, int n, int max_sets) {
  if (n < 1 || n > kMaxPlayers) throw std::out_of_range("player count out of range");
  std::uniform_int_distribution<int> count_dist(1, std::max(1, max_sets));
  std::uniform_int_distribution<Mask> set_dist(1, Coalition::full(n).mask());

  std::vector<Mask> sampled;
  int count = count_dist(rng);
  for (int i = 0; i < count; ++i) sampled.push_back(set_dist(rng));
  std::sort(sampled.begin(), sampled.end());
  sampled.erase(std::unique(sampled.begin(), sampled.end()), sampled.end());

  std::vector<Coalition> antichain;
  for (Mask m : sampled) {
    bool minimal = true;
    for (Mask o : sampled)
      if (o != m && (o & m) == o) {
        minimal = false;
        break;
      }
    if (minimal) antichain.push_back(Coalition::from_mask(m));
  }
  if (antichain.empty()) antichain.push_back(Coalition::full(n));
  return SimpleGame::minimal_winning(n, antichain);
}

void for_each_monotone_game(int n, const std::function<void(const SimpleGame&)>& fn) {
  if (n < 1 || n > 5)
    throw std::invalid_argument("exhaustive game enumeration guarded to n <= 5");
  const Mask full = Coalition::full(n).mask();

  std::vector<Mask> order;
  for (Mask m = 1; m <= full; ++m) order.push_back(m);
  std::sort(order.begin(), order.end(), [](Mask a, Mask b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });

  std::vector<char> winning(full + 1, 0);
  std::vector<Coalition> wins;
  auto emit = [&] {
    if (!winning[full]) return;
    wins.clear();
    for (Mask m = 1; m <= full; ++m)
      if (winning[m]) wins.push_back(Coalition::from_mask(m));
    fn(SimpleGame::explicit_winning(n, wins));
  };

  // Walk masks in popcount order; a mask is forced winning as soon as one of
  // its one-short subsets wins, otherwise both values are feasible.
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == order.size()) {
      emit();
      return;
    }
    Mask m = order[idx];
    bool forced = false;
    for (Mask bits = m; bits; bits &= bits - 1)
      if (winning[m ^ (bits & (~bits + 1))]) {
        forced = true;
        break;
      }
    if (forced) {
      winning[m] = 1;
      self(self, idx + 1);
      winning[m] = 0;
      return;
    }
    self(self, idx + 1);
    winning[m] = 1;
    self(self, idx + 1);
    winning[m] = 0;
  };
  rec(rec, 0);
}

PartitionDistribution random_partition_distribution(std::mt19937_64& rng, Coalition s,
                                                    bool strictly_positive) {
  std::uniform_int_distribution<int> weight_dist(strictly_positive ? 1 : 0, 6);
  std::map<Partition2, Rational> raw;
  long long total = 0;
  for (const Partition2 pi : partitions2(s)) {
    int w = weight_dist(rng);
    raw.emplace(pi, w);
    total += w;
  }
  if (total == 0) {
    raw.begin()->second = 1;
    total = 1;
  }
  std::map<Partition2, Rational> weights;
  for (auto& [pi, w] : raw) weights.emplace(pi, w / Rational(total));
  return PartitionDistribution::explicit_weights(std::move(weights));
}

OutsideDistribution random_outside_distribution(std::mt19937_64& rng, int n, Coalition s,
                                                bool strictly_positive) {
  std::uniform_int_distribution<int> weight_dist(strictly_positive ? 1 : 0, 6);
  std::map<Coalition, Rational> raw;
  long long total = 0;
  for (Coalition t : subsets_of(Coalition::full(n).minus(s))) {
    int w = weight_dist(rng);
    raw.emplace(t, w);
    total += w;
  }
  if (total == 0) {
    raw.begin()->second = 1;
    total = 1;
  }
  std::map<Coalition, Rational> weights;
  for (auto& [t, w] : raw) weights.emplace(t, w / Rational(total));
  return OutsideDistribution::explicit_weights(std::move(weights));
}

namespace {

Coalition random_subset(std::mt19937_64& rng, Coalition universe, bool allow_empty) {
  if (universe.empty() && !allow_empty)
    throw std::invalid_argument("no nonempty subset of an empty universe");
  std::uniform_int_distribution<Mask> dist(0, (Mask{1} << universe.size()) - 1);
  for (;;) {
    Mask packed = dist(rng);
    Mask m = 0;
    int bit = 0;
    for (int id : universe.members()) {
      if ((packed >> bit) & 1) m |= Mask{1} << (id - 1);
      ++bit;
    }
    if (allow_empty || m != 0) return Coalition::from_mask(m);
  }
}

struct HarnessContext {
  std::mt19937_64 rng;
  int trials;
  HarnessReport report;

  void run(const std::string& name, const std::function<bool(std::mt19937_64&)>& one_trial) {
    HarnessReport::Line line{name, 0, 0};
    for (int i = 0; i < trials; ++i) {
      ++line.trials;
      if (!one_trial(rng)) ++line.violations;
    }
    report.lines.push_back(std::move(line));
  }
};

bool all_members_critical(const SimpleGame& game, Coalition s, Coalition t) {
  for (int id : s.members())
    if (!game.is_critical(Coalition::single(id), t)) return false;
  return true;
}

/// Random (game, S, T) with S critical wrt T; falls back to a superset of a
/// minimal winning coalition with T empty, which is always critical.
std::tuple<SimpleGame, Coalition, Coalition> random_critical_instance(std::mt19937_64& rng,
                                                                      int n) {
  SimpleGame game = random_monotone_game(rng, n);
  for (int attempt = 0; attempt < 40; ++attempt) {
    Coalition s = random_subset(rng, game.grand_coalition(), false);
    if (s.size() < 2) continue;
    Coalition t = random_subset(rng, game.grand_coalition().minus(s), true);
    if (game.is_critical(s, t)) return {game, s, t};
  }
  std::vector<Coalition> mwc = game.minimal_winning_coalitions();
  Coalition s = mwc[rng() % mwc.size()];
  if (s.size() < 2) {
    Coalition others = game.grand_coalition().minus(s);
    s = s | Coalition::single(others.members()[rng() % others.size()]);
  }
  return {game, s, Coalition()};
}

bool attitude_extremes_trial(std::mt19937_64& rng) {
  int n = 3 + static_cast<int>(rng() % 4);
  auto [game, s, t] = random_critical_instance(rng, n);

  const PartitionDistribution dists[] = {PartitionDistribution::banzhaf(),
                                         PartitionDistribution::shapley_owen(),
                                         random_partition_distribution(rng, s, true)};
  bool essential = game.is_essential_critical(s, t);
  bool complementary = all_members_critical(game, s, t);
  for (const auto& p : dists) {
    Rational a = attitude(game, s, t, p);
    if ((a == 1) != essential) return false;
    if ((a == -1) != complementary) return false;
    if (a < -1 || a > 1) return false;
  }
  return true;
}

bool dilution_trial(std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    int n = 4 + static_cast<int>(rng() % 3);
    SimpleGame game = random_monotone_game(rng, n);
    std::vector<Coalition> mwc = game.minimal_winning_coalitions();
    Coalition w = mwc[rng() % mwc.size()];
    Coalition t = random_subset(rng, game.grand_coalition().minus(w), true);
    if (game.value(t) == 1) continue;
    Coalition s = w;  // disjoint from t by construction
    if (!game.is_essential_critical(s, t)) continue;
    Coalition candidates = game.grand_coalition().minus(s | t);
    Coalition star;
    for (int id : candidates.members())
      if (game.is_critical(Coalition::single(id), t)) {
        star = Coalition::single(id);
        break;
      }
    if (star.empty()) continue;

    Coalition enlarged = s | star;
    const PartitionDistribution dists[] = {
        PartitionDistribution::banzhaf(), PartitionDistribution::shapley_owen(),
        random_partition_distribution(rng, enlarged, false)};
    for (const auto& p : dists) {
      Rational expected = -p.weight(Partition2::of(s, star));
      if (attitude(game, enlarged, t, p) != expected) return false;
    }
    return true;
  }
  return true;  // no instance found; vacuous trial
}

bool null_scaling_trial(std::mt19937_64& rng, Model model) {
  int n = 3 + static_cast<int>(rng() % 5);
  // The game's minimal winning coalitions avoid player n, making it null.
  SimpleGame inner = random_monotone_game(rng, n - 1);
  SimpleGame game = SimpleGame::minimal_winning(n, inner.minimal_winning_coalitions());

  Coalition eta = Coalition::single(n);
  Coalition s = random_subset(rng, game.grand_coalition().minus(eta), false);
  while (s.size() < 2) s = random_subset(rng, game.grand_coalition().minus(eta), false);

  const int size = s.size();
  Rational factor =
      model == Model::Banzhaf
          ? make_rational(pow2(size) - 2, pow2(size) - 1)
          : make_rational(BigInt(size) * (size + 1) - 2, BigInt(size) * (size + 1));
  Rational with_null = coopetition(game, s | eta, partition_distribution(model),
                                   outside_distribution(model));
  Rational base = coopetition(game, s, partition_distribution(model),
                              outside_distribution(model));
  return with_null == factor * base;
}

bool split_monotonicity_trial(std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    int n = 4 + static_cast<int>(rng() % 4);
    Coalition everyone = Coalition::full(n);

    Coalition w = random_subset(rng, everyone, false);
    if (w.size() < 3) continue;
    // Disjoint halves of w...
    Coalition hat1 = random_subset(rng, w, false);
    if (hat1 == w) continue;
    Coalition hat2 = w.minus(hat1);
    // ...then overlapping covers between the halves and w.
    Coalition x = random_subset(rng, hat2, true);
    Coalition y = random_subset(rng, hat1, true);
    if (x == hat2 || y == hat1 || (x.empty() && y.empty())) continue;
    Coalition w1 = hat1 | x;
    Coalition w2 = hat2 | y;

    auto incomparable = [](Coalition a, Coalition b) {
      return !a.subset_of(b) && !b.subset_of(a);
    };
    std::vector<Coalition> extra;
    int extras = static_cast<int>(rng() % 3);
    for (int i = 0; i < extras; ++i) {
      Coalition c = random_subset(rng, everyone, false);
      bool ok = incomparable(c, w) && incomparable(c, w1) && incomparable(c, w2) &&
                incomparable(c, hat1) && incomparable(c, hat2);
      for (Coalition o : extra) ok = ok && incomparable(c, o);
      if (ok) extra.push_back(c);
    }

    auto with = [&](std::vector<Coalition> specials) {
      for (Coalition c : extra) specials.push_back(c);
      return SimpleGame::minimal_winning(n, specials);
    };
    SimpleGame game_whole = with({w});
    SimpleGame game_overlap = with({w1, w2});
    SimpleGame game_disjoint = with({hat1, hat2});

    for (Coalition rest : subsets_of(everyone.minus(w))) {
      Coalition s = w | rest;
      for (Model model : {Model::Banzhaf, Model::ShapleyOwen}) {
        const auto p = partition_distribution(model);
        const auto q = outside_distribution(model);
        Rational cv = coopetition(game_whole, s, p, q);
        Rational cw = coopetition(game_overlap, s, p, q);
        Rational cu = coopetition(game_disjoint, s, p, q);
        if (!(cv >= cw && cw >= cu)) return false;
      }
    }
    return true;
  }
  return true;
}

bool bundle_identities_trial(std::mt19937_64& rng) {
  int n = 3 + static_cast<int>(rng() % 5);
  SimpleGame game = random_monotone_game(rng, n);
  Coalition s = random_subset(rng, game.grand_coalition(), false);
  while (s.size() < 2) s = random_subset(rng, game.grand_coalition(), false);

  auto check = [&](const PartitionDistribution& p, const OutsideDistribution& q) {
    IndexBundle b = index_bundle(game, s, p, q);
    return b.coopetition == b.cooperative - b.competitive &&
           b.decisiveness == b.cooperative + b.competitive &&
           b.cooperative >= 0 && b.cooperative <= 1 && b.competitive >= 0 &&
           b.competitive <= 1 && b.decisiveness >= 0 && b.decisiveness <= 1 &&
           abs(b.coopetition) <= b.decisiveness &&
           b.coopetition == coopetition(game, s, p, q);
  };
  return check(PartitionDistribution::banzhaf(), OutsideDistribution::banzhaf()) &&
         check(PartitionDistribution::shapley_owen(), OutsideDistribution::shapley_owen()) &&
         check(random_partition_distribution(rng, s, false),
               random_outside_distribution(rng, n, s, false));
}

}  // namespace

bool HarnessReport::all_passed() const {
  for (const auto& line : lines)
    if (line.violations != 0) return false;
  return true;
}

std::string HarnessReport::to_text() const {
  std::string out;
  for (const auto& line : lines)
    out += line.name + " trials=" + std::to_string(line.trials) +
           " violations=" + std::to_string(line.violations) + "\n";
  return out;
}

HarnessReport proposition_harness(std::uint64_t seed, int trials) {
  HarnessContext ctx{std::mt19937_64(seed), trials, {}};

  ctx.run("attitude-extremes", attitude_extremes_trial);
  ctx.run("attitude-dilution", dilution_trial);
  ctx.run("null-scaling-banzhaf",
          [](std::mt19937_64& rng) { return null_scaling_trial(rng, Model::Banzhaf); });
  ctx.run("null-scaling-shapley-owen",
          [](std::mt19937_64& rng) { return null_scaling_trial(rng, Model::ShapleyOwen); });
  ctx.run("mwc-split-monotonicity", split_monotonicity_trial);
  ctx.run("bundle-identities", bundle_identities_trial);

  // Exhaustive checks; the trial count reports how many cases were covered.
  {
    HarnessReport::Line line{"coopetition-extremes", 0, 0};
    for (int n = 2; n <= 4; ++n) {
      for_each_monotone_game(n, [&](const SimpleGame& game) {
        std::vector<Coalition> mwc = game.minimal_winning_coalitions();
        for (Coalition s : subsets_of(game.grand_coalition())) {
          if (s.size() < 2) continue;
          std::vector<Coalition> singletons;
          for (int id : s.members()) singletons.push_back(Coalition::single(id));
          std::sort(singletons.begin(), singletons.end(), size_lex_less);
          bool lone_mwc = mwc.size() == 1 && mwc[0] == s;
          bool all_singletons = mwc == singletons;
          for (Model model : {Model::Banzhaf, Model::ShapleyOwen}) {
            ++line.trials;
            Rational c = coopetition(game, s, partition_distribution(model),
                                     outside_distribution(model));
            if ((c == 1) != lone_mwc || (c == -1) != all_singletons) ++line.violations;
          }
        }
      });
    }
    ctx.report.lines.push_back(std::move(line));
  }
  {
    HarnessReport::Line line{"triplet-coincidence", 0, 0};
    for (int n = 3; n <= 5; ++n) {
      for_each_monotone_game(n, [&](const SimpleGame& game) {
        for (Coalition s : subsets_of(game.grand_coalition())) {
          if (s.size() != 2 && s.size() != 3) continue;
          for (Coalition t : subsets_of(game.grand_coalition().minus(s))) {
            ++line.trials;
            if (banzhaf_attitude(game, s, t) != shapley_owen_attitude(game, s, t))
              ++line.violations;
          }
        }
      });
    }
    ctx.report.lines.push_back(std::move(line));
  }

  return ctx.report;
}

}  // namespace coopet
