#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <future>
#include <random>

#include "coopet/coopetition.hpp"
#include "coopet/oracles.hpp"
#include "coopet/power_indices.hpp"

using namespace coopet;

namespace {

SimpleGame game_v() {
  return SimpleGame::minimal_winning(5,
                                     {Coalition::of({1, 2, 3, 4}), Coalition::of({1, 4, 5})});
}

SimpleGame game_u() {
  return SimpleGame::minimal_winning(
      5, {Coalition::of({1, 2}), Coalition::of({3, 4}), Coalition::of({1, 4, 5})});
}

}  // namespace

TEST_CASE("partition enumeration") {
  std::vector<Partition2> pairs;
  for (const Partition2 pi : partitions2(Coalition::of({1, 2}))) pairs.push_back(pi);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0] == Partition2::of(Coalition::of({1}), Coalition::of({2})));

  std::vector<Partition2> triples;
  for (const Partition2 pi : partitions2(Coalition::of({1, 2, 3}))) triples.push_back(pi);
  REQUIRE(triples.size() == 3);
  CHECK(triples[0] == Partition2::of(Coalition::of({1}), Coalition::of({2, 3})));
  CHECK(triples[1] == Partition2::of(Coalition::of({1, 2}), Coalition::of({3})));
  CHECK(triples[2] == Partition2::of(Coalition::of({1, 3}), Coalition::of({2})));

  int count = 0;
  Mask seen_first = 0;
  for (const Partition2 pi : partitions2(Coalition::of({2, 3, 5, 9}))) {
    ++count;
    CHECK(pi.first().contains(2));  // canonical: first holds the minimum
    CHECK(pi.first().mask() > seen_first);  // deterministic increasing order
    seen_first = pi.first().mask();
    CHECK((pi.first() | pi.second()) == Coalition::of({2, 3, 5, 9}));
    CHECK(pi.first().disjoint_with(pi.second()));
  }
  CHECK(count == 7);

  CHECK_THROWS_AS(partitions2(Coalition::of({1})), std::invalid_argument);
  CHECK_THROWS_AS(partitions2(Coalition()), std::invalid_argument);
}

TEST_CASE("partition canonicalization") {
  Partition2 pi = Partition2::of(Coalition::of({4, 5}), Coalition::of({2}));
  CHECK(pi.first() == Coalition::of({2}));
  CHECK(pi.second() == Coalition::of({4, 5}));
  CHECK(pi == Partition2::of(Coalition::of({2}), Coalition::of({4, 5})));
  CHECK(to_string(pi) == "{2}|{4,5}");
  CHECK_THROWS_AS(Partition2::of(Coalition(), Coalition::of({1})), std::invalid_argument);
  CHECK_THROWS_AS(Partition2::of(Coalition::of({1, 2}), Coalition::of({2})),
                  std::invalid_argument);
}

TEST_CASE("block interaction") {
  SimpleGame v = game_v();
  Partition2 split = Partition2::of(Coalition::of({1, 4}), Coalition::of({2, 3}));
  CHECK(block_interaction(v, split, Coalition::of({5})) == 0);

  // T already winning forces all four terms to one
  SimpleGame maj = SimpleGame::majority(6, 4);
  Partition2 pair = Partition2::of(Coalition::of({1}), Coalition::of({2}));
  CHECK(block_interaction(maj, pair, Coalition::of({3, 4, 5, 6})) == 0);

  SimpleGame apex = SimpleGame::apex(5, 1);
  Partition2 apex_split = Partition2::of(Coalition::of({1}), Coalition::of({2, 3}));
  CHECK(block_interaction(apex, apex_split, Coalition()) == 1);
  CHECK(block_interaction(apex, apex_split, Coalition::of({4, 5})) == -1);

  CHECK_THROWS_AS(block_interaction(v, split, Coalition::of({1})), std::invalid_argument);
}

TEST_CASE("closed-form distributions sum to one, s and n up to 12") {
  auto choose = [](int n, int k) {
    return factorial(n) / (factorial(k) * factorial(n - k));
  };
  for (int s = 2; s <= 12; ++s) {
    Rational banzhaf_total = 0, so_total = 0;
    // the canonical first part holds the minimum, so a classes count C(s-1, a-1)
    for (int a = 1; a <= s - 1; ++a) {
      Rational count = Rational(choose(s - 1, a - 1));
      banzhaf_total += count * banzhaf_partition_weight(s);
      so_total += count * shapley_owen_partition_weight(a, s);
    }
    CHECK(banzhaf_total == 1);
    CHECK(so_total == 1);

    for (int n = s; n <= 12; ++n) {
      Rational banzhaf_q = 0, so_q = 0;
      for (int t = 0; t <= n - s; ++t) {
        Rational count = Rational(choose(n - s, t));
        banzhaf_q += count * banzhaf_outside_weight(n, s);
        so_q += count * shapley_owen_outside_weight(t, n, s);
      }
      CHECK(banzhaf_q == 1);
      CHECK(so_q == 1);
    }
  }
}

TEST_CASE("explicit distributions validate eagerly") {
  Coalition s = Coalition::of({1, 2, 3});
  std::map<Partition2, Rational> bad_sum;
  for (const Partition2 pi : partitions2(s)) bad_sum.emplace(pi, make_rational(1, 4));
  SimpleGame game = SimpleGame::majority(4, 3);
  CHECK_THROWS_AS(attitude(game, s, Coalition(),
                           PartitionDistribution::explicit_weights(bad_sum)),
                  std::invalid_argument);

  std::map<Partition2, Rational> negative;
  bool first = true;
  for (const Partition2 pi : partitions2(s)) {
    negative.emplace(pi, first ? make_rational(5, 3) : make_rational(-1, 3));
    first = false;
  }
  CHECK_THROWS_AS(attitude(game, s, Coalition(),
                           PartitionDistribution::explicit_weights(negative)),
                  std::invalid_argument);

  std::map<Partition2, Rational> outside_support;
  outside_support.emplace(Partition2::of(Coalition::of({1}), Coalition::of({4})), 1);
  CHECK_THROWS_AS(attitude(game, s, Coalition(),
                           PartitionDistribution::explicit_weights(outside_support)),
                  std::invalid_argument);

  std::map<Coalition, Rational> bad_outside;
  bad_outside.emplace(Coalition::of({1}), 1);  // overlaps S
  CHECK_THROWS_AS(coopetition(game, s, PartitionDistribution::banzhaf(),
                              OutsideDistribution::explicit_weights(bad_outside)),
                  std::invalid_argument);

  std::map<Coalition, Rational> short_outside;
  short_outside.emplace(Coalition(), make_rational(1, 2));
  CHECK_THROWS_AS(coopetition(game, s, PartitionDistribution::banzhaf(),
                              OutsideDistribution::explicit_weights(short_outside)),
                  std::invalid_argument);
}

TEST_CASE("attitude") {
  SimpleGame v = game_v();
  Coalition s4 = Coalition::of({1, 2, 3, 4});
  CHECK(shapley_owen_attitude(v, s4, Coalition()) == 1);
  CHECK(shapley_owen_attitude(v, s4, Coalition::of({5})) == make_rational(5, 9));
  CHECK(banzhaf_attitude(v, s4, Coalition::of({5})) == make_rational(4, 7));

  // every member singly critical pushes the attitude to its minimum
  SimpleGame singles = SimpleGame::minimal_winning(
      4, {Coalition::of({1}), Coalition::of({2}), Coalition::of({3})});
  Coalition s = Coalition::of({1, 2, 3});
  CHECK(banzhaf_attitude(singles, s, Coalition()) == -1);
  CHECK(shapley_owen_attitude(singles, s, Coalition()) == -1);
  std::mt19937_64 rng(8);
  CHECK(attitude(singles, s, Coalition(), random_partition_distribution(rng, s, true)) ==
        -1);

  CHECK_THROWS_AS(attitude(v, s4, Coalition::of({4}), PartitionDistribution::banzhaf()),
                  std::invalid_argument);
}

TEST_CASE("coopetition basics") {
  SimpleGame u = game_u();
  Coalition s4 = Coalition::of({1, 2, 3, 4});
  CHECK(coopetition(u, s4, PartitionDistribution::banzhaf(),
                    OutsideDistribution::banzhaf()) == make_rational(1, 14));

  // with S = N the outside distribution is forced onto the empty set
  SimpleGame v = game_v();
  Coalition everyone = Coalition::full(5);
  for (Model model : {Model::Banzhaf, Model::ShapleyOwen}) {
    CHECK(coopetition(v, everyone, partition_distribution(model),
                      outside_distribution(model)) ==
          attitude(v, everyone, Coalition(), partition_distribution(model)));
  }

  CHECK_THROWS_AS(banzhaf_coopetition(v, Coalition::of({2})), std::invalid_argument);
  CHECK_THROWS_AS(shapley_owen_coopetition(v, Coalition()), std::invalid_argument);
}

TEST_CASE("apex coopetition vanishes whenever the two pivotal outsiders weigh the same") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 3 + static_cast<int>(rng() % 4);
    int apex_player = 1 + static_cast<int>(rng() % n);
    SimpleGame apex = SimpleGame::apex(n, apex_player);
    Coalition a = Coalition::single(apex_player);

    Coalition s = Coalition();
    while (s.size() < 2 || s.size() > n - 1 || !s.disjoint_with(a)) {
      std::uniform_int_distribution<Mask> dist(0, Coalition::full(n).mask());
      s = Coalition::from_mask(dist(rng)).minus(a);
    }

    // explicit q giving {a} and the far complement the same weight
    Coalition rest = Coalition::full(n).minus(s);
    std::map<Coalition, Rational> q;
    for (Coalition t : subsets_of(rest))
      q.emplace(t, make_rational(1, pow2(rest.size())));
    Rational value = coopetition(apex, s, random_partition_distribution(rng, s, true),
                                 OutsideDistribution::explicit_weights(q));
    CHECK(value == 0);
  }
}

TEST_CASE("split-game coopetition table values") {
  SimpleGame v = game_v();
  Coalition s4 = Coalition::of({1, 2, 3, 4});
  CHECK(shapley_owen_coopetition(v, s4) == make_rational(7, 9));
  CHECK(banzhaf_coopetition(v, s4) == make_rational(11, 14));

  SimpleGame w = SimpleGame::minimal_winning(
      5, {Coalition::of({1, 2, 3}), Coalition::of({3, 4}), Coalition::of({1, 4, 5})});
  Coalition s5 = Coalition::full(5);
  CHECK(shapley_owen_coopetition(w, s5) == make_rational(1, 5));
  CHECK(banzhaf_coopetition(w, s5) == make_rational(4, 15));
}

TEST_CASE("apex coopetition is null under both families") {
  for (int n = 3; n <= 6; ++n) {
    SimpleGame apex = SimpleGame::apex(n, 2);
    for (Coalition s : subsets_of(apex.grand_coalition())) {
      if (s.size() < 2) continue;
      CHECK(banzhaf_coopetition(apex, s) == 0);
      CHECK(shapley_owen_coopetition(apex, s) == 0);
    }
  }
}

TEST_CASE("majority coopetition examples") {
  SimpleGame maj = SimpleGame::majority(8, 5);
  CHECK(shapley_owen_coopetition(maj, Coalition::full(5)) == make_rational(1, 4));
}

TEST_CASE("attitudes coincide for pairs and triples but not size four") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    SimpleGame game = random_monotone_game(rng, n);
    for (Coalition s : subsets_of(game.grand_coalition())) {
      if (s.size() != 2 && s.size() != 3) continue;
      for (Coalition t : subsets_of(game.grand_coalition().minus(s))) {
        Rational banzhaf = banzhaf_attitude(game, s, t);
        CHECK(banzhaf == shapley_owen_attitude(game, s, t));
        if (s.size() == 2)
          CHECK(banzhaf == Rational(interaction_indicator(game, s, t)));
      }
    }
  }

  // recorded size-4 counterexample
  SimpleGame v = game_v();
  Coalition s4 = Coalition::of({1, 2, 3, 4});
  CHECK(banzhaf_attitude(v, s4, Coalition::of({5})) !=
        shapley_owen_attitude(v, s4, Coalition::of({5})));
}

TEST_CASE("attitude and coopetition stay within [-1, 1]") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);
    SimpleGame game = random_monotone_game(rng, n);
    std::uniform_int_distribution<Mask> dist(0, Coalition::full(n).mask());
    Coalition s = Coalition::from_mask(dist(rng));
    if (s.size() < 2) continue;
    for (Model model : {Model::Banzhaf, Model::ShapleyOwen}) {
      Rational c = coopetition(game, s, partition_distribution(model),
                               outside_distribution(model));
      CHECK(c >= -1);
      CHECK(c <= 1);
      for (Coalition t : subsets_of(game.grand_coalition().minus(s))) {
        Rational a = attitude(game, s, t, partition_distribution(model));
        CHECK(a >= -1);
        CHECK(a <= 1);
      }
    }
  }
}

TEST_CASE("adding a critical outsider dilutes an essential coalition") {
  // minimal winning {1,2,3} and {4} with T empty: {1,2,3} is essential
  // critical, player 4 critical, and the enlarged attitude is -p({S, {4}}).
  SimpleGame game = SimpleGame::minimal_winning(
      5, {Coalition::of({1, 2, 3}), Coalition::of({4})});
  Coalition s = Coalition::of({1, 2, 3});
  Coalition star = Coalition::of({4});
  Coalition enlarged = s | star;
  REQUIRE(game.is_essential_critical(s, Coalition()));
  REQUIRE(game.is_critical(star, Coalition()));

  std::mt19937_64 rng(2);
  const PartitionDistribution dists[] = {PartitionDistribution::banzhaf(),
                                         PartitionDistribution::shapley_owen(),
                                         random_partition_distribution(rng, enlarged, true)};
  for (const auto& p : dists)
    CHECK(attitude(game, enlarged, Coalition(), p) ==
          -p.weight(Partition2::of(s, star)));
}

TEST_CASE("null player scaling uses the derived factors") {
  // W_min = {12} on three players leaves player 3 null: C(12) = 1 and
  // C(123) = 2/3 under both families, the factor 1 - 1/(2^s - 1) for Banzhaf
  // (not the 1 - 2/(2^s - 1) sometimes quoted) and 1 - 2/(s(s+1)) for
  // Shapley-Owen.
  SimpleGame game = SimpleGame::minimal_winning(3, {Coalition::of({1, 2})});
  Coalition s = Coalition::of({1, 2});
  Coalition with_null = Coalition::of({1, 2, 3});
  CHECK(banzhaf_coopetition(game, s) == 1);
  CHECK(banzhaf_coopetition(game, with_null) == make_rational(2, 3));
  CHECK(shapley_owen_coopetition(game, with_null) == make_rational(2, 3));

  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 3 + static_cast<int>(rng() % 5);
    SimpleGame inner = random_monotone_game(rng, n - 1);
    SimpleGame padded = SimpleGame::minimal_winning(n, inner.minimal_winning_coalitions());
    Coalition eta = Coalition::single(n);
    REQUIRE(padded.is_null_player(n));
    for (Coalition base : subsets_of(Coalition::full(n - 1))) {
      if (base.size() < 2) continue;
      int size = base.size();
      Rational banzhaf_factor = make_rational(pow2(size) - 2, pow2(size) - 1);
      Rational so_factor =
          make_rational(BigInt(size) * (size + 1) - 2, BigInt(size) * (size + 1));
      CHECK(banzhaf_coopetition(padded, base | eta) ==
            banzhaf_factor * banzhaf_coopetition(padded, base));
      CHECK(shapley_owen_coopetition(padded, base | eta) ==
            so_factor * shapley_owen_coopetition(padded, base));
    }
  }
}

TEST_CASE("one game can be queried from many threads") {
  SimpleGame game = SimpleGame::weighted({50, 50, 50, 24, 23, 1}, 102);
  std::vector<Coalition> coalitions;
  for (Coalition s : subsets_of(game.grand_coalition()))
    if (s.size() >= 2) coalitions.push_back(s);

  std::vector<Rational> sequential;
  for (Coalition s : coalitions) sequential.push_back(shapley_owen_coopetition(game, s));

  std::vector<std::future<Rational>> futures;
  for (Coalition s : coalitions)
    futures.push_back(std::async(std::launch::async, [&game, s] {
      return shapley_owen_coopetition(game, s);
    }));
  for (std::size_t i = 0; i < coalitions.size(); ++i)
    CHECK(futures[i].get() == sequential[i]);
}

TEST_CASE("explicit closed-form weights reproduce the family values") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 3 + static_cast<int>(rng() % 3);
    SimpleGame game = random_monotone_game(rng, n);
    std::uniform_int_distribution<Mask> dist(1, Coalition::full(n).mask());
    Coalition s = Coalition::from_mask(dist(rng));
    if (s.size() < 2) continue;

    for (Model model : {Model::Banzhaf, Model::ShapleyOwen}) {
      std::map<Partition2, Rational> p;
      for (const Partition2 pi : partitions2(s))
        p.emplace(pi, partition_distribution(model).weight(pi));
      std::map<Coalition, Rational> q;
      for (Coalition t : subsets_of(game.grand_coalition().minus(s)))
        q.emplace(t, outside_distribution(model).weight(t, n, s.size()));
      CHECK(coopetition(game, s, PartitionDistribution::explicit_weights(p),
                        OutsideDistribution::explicit_weights(q)) ==
            coopetition(game, s, partition_distribution(model),
                        outside_distribution(model)));
    }
  }
}
