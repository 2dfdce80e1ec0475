#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coopet/game.hpp"
#include "coopet/oracles.hpp"

using namespace coopet;

namespace {

SimpleGame paper_weighted_game() {
  return SimpleGame::weighted({50, 50, 50, 24, 23, 1}, 102);
}

}  // namespace

TEST_CASE("coalitions") {
  Coalition c = Coalition::of({3, 1, 2});
  CHECK(c.size() == 3);
  CHECK(c.members() == std::vector<int>{1, 2, 3});
  CHECK(c.min_member() == 1);
  CHECK(to_string(c) == "{1,2,3}");
  CHECK(to_string(Coalition()) == "{}");
  CHECK(Coalition::full(4).mask() == 0b1111);
  CHECK(Coalition::full(32).size() == 32);
  CHECK(Coalition::of({2, 5}).complement_in(5) == Coalition::of({1, 3, 4}));
  CHECK_THROWS_AS(Coalition::of({0}), std::out_of_range);
  CHECK_THROWS_AS(Coalition::of({33}), std::out_of_range);
  CHECK_THROWS_AS(Coalition().min_member(), std::invalid_argument);

  // {1,4} precedes {2,3} lexicographically even though its mask is larger
  CHECK(size_lex_less(Coalition::of({1, 4}), Coalition::of({2, 3})));
  CHECK_FALSE(size_lex_less(Coalition::of({2, 3}), Coalition::of({1, 4})));
  CHECK(size_lex_less(Coalition::of({1}), Coalition::of({1, 2})));
}

TEST_CASE("subset enumeration is increasing and complete") {
  std::vector<Mask> seen;
  for (Coalition s : subsets_of(Coalition::of({1, 3, 4}))) seen.push_back(s.mask());
  CHECK(seen == std::vector<Mask>{0b0000, 0b0001, 0b0100, 0b0101, 0b1000, 0b1001, 0b1100,
                                  0b1101});
}

TEST_CASE("evaluate") {
  SimpleGame wg = paper_weighted_game();
  CHECK(wg.value(Coalition::of({1, 2})) == 0);
  CHECK(wg.value(Coalition()) == 0);
  CHECK(wg.value(Coalition::of({4, 5, 6, 1, 2})) == 1);

  SimpleGame apex4 = SimpleGame::apex(4, 1);
  CHECK(apex4.value(Coalition::of({2, 3, 4})) == 1);
  CHECK(apex4.value(Coalition::of({1})) == 0);
  CHECK(apex4.value(Coalition::of({1, 3})) == 1);
  CHECK(apex4.value(Coalition::of({2, 3})) == 0);

  SimpleGame maj = SimpleGame::majority(5, 3);
  CHECK(maj.value(Coalition::of({1, 2})) == 0);
  CHECK(maj.value(Coalition::of({1, 2, 5})) == 1);

  CHECK_THROWS_AS(maj.value(Coalition::of({6})), std::out_of_range);
}

TEST_CASE("derivative and criticality") {
  SimpleGame wg = paper_weighted_game();
  CHECK(wg.derivative(Coalition::of({4, 5, 6}), Coalition::of({1, 2})) == 1);
  CHECK(wg.derivative(Coalition(), Coalition::of({1, 2})) == 0);
  CHECK_THROWS_AS(wg.derivative(Coalition::of({1, 2}), Coalition::of({2, 3})),
                  std::invalid_argument);

  SimpleGame apex5 = SimpleGame::apex(5, 1);
  CHECK(apex5.derivative(Coalition::of({1}), Coalition::of({2})) == 1);

  SimpleGame pair = SimpleGame::minimal_winning(3, {Coalition::of({1, 2})});
  CHECK(pair.is_essential_critical(Coalition::of({1, 2}), Coalition()));
  SimpleGame singles =
      SimpleGame::minimal_winning(3, {Coalition::of({1}), Coalition::of({2})});
  CHECK(singles.is_critical(Coalition::of({1, 2}), Coalition()));
  CHECK_FALSE(singles.is_essential_critical(Coalition::of({1, 2}), Coalition()));
  CHECK(singles.is_essential_critical(Coalition::of({1}), Coalition()));
  CHECK_THROWS_AS(pair.is_critical(Coalition(), Coalition()), std::invalid_argument);
}

TEST_CASE("null players") {
  SimpleGame wg = paper_weighted_game();
  CHECK(wg.is_null_player(6));
  CHECK_FALSE(wg.is_null_player(1));
  CHECK_FALSE(wg.is_null_player(4));

  SimpleGame apex5 = SimpleGame::apex(5, 2);
  for (int i = 1; i <= 5; ++i) CHECK_FALSE(apex5.is_null_player(i));

  SimpleGame maj = SimpleGame::majority(8, 5);
  for (int i = 1; i <= 8; ++i) CHECK_FALSE(maj.is_null_player(i));
}

TEST_CASE("minimal winning coalitions") {
  SimpleGame apex4 = SimpleGame::apex(4, 1);
  std::vector<Coalition> expected = {Coalition::of({1, 2}), Coalition::of({1, 3}),
                                     Coalition::of({1, 4}), Coalition::of({2, 3, 4})};
  CHECK(apex4.minimal_winning_coalitions() == expected);

  SimpleGame maj = SimpleGame::majority(5, 3);
  CHECK(maj.minimal_winning_coalitions().size() == 10);
  for (Coalition w : maj.minimal_winning_coalitions()) CHECK(w.size() == 3);

  // the weight-1 player cannot complete any coalition, so only 4 and 5 appear
  SimpleGame wg = paper_weighted_game();
  std::vector<Coalition> wg_expected = {
      Coalition::of({1, 2, 4}), Coalition::of({1, 2, 5}), Coalition::of({1, 3, 4}),
      Coalition::of({1, 3, 5}), Coalition::of({2, 3, 4}), Coalition::of({2, 3, 5}),
      Coalition::of({1, 2, 3})};
  std::sort(wg_expected.begin(), wg_expected.end(), size_lex_less);
  CHECK(wg.minimal_winning_coalitions() == wg_expected);
}

TEST_CASE("validation") {
  GameDefinition nested;
  nested.n = 3;
  nested.kind = GameKind::MinimalWinning;
  nested.coalitions = {{1, 2}, {1, 2, 3}};
  CHECK_FALSE(validate(nested).ok());
  CHECK(validate(nested).to_string().find("antichain") != std::string::npos);
  CHECK_THROWS_AS(SimpleGame{nested}, std::invalid_argument);

  GameDefinition holey;
  holey.n = 2;
  holey.kind = GameKind::ExplicitWinning;
  holey.coalitions = {{1}};
  ValidationReport report = validate(holey);
  CHECK_FALSE(report.ok());
  CHECK(report.to_string().find("monotonicity") != std::string::npos);

  GameDefinition weighted;
  weighted.n = 3;
  weighted.kind = GameKind::Weighted;
  weighted.weights = {2, 1, 1};
  weighted.quota = 3;
  CHECK(validate(weighted).ok());

  GameDefinition weak;
  weak.n = 8;
  weak.kind = GameKind::Majority;
  weak.quota = 4;
  CHECK_FALSE(validate(weak).ok());
  weak.allow_weak_majority = true;
  CHECK(validate(weak).ok());
  CHECK(SimpleGame(weak).value(Coalition::of({1, 2, 3, 4})) == 1);

  GameDefinition out_of_range;
  out_of_range.n = 3;
  out_of_range.kind = GameKind::MinimalWinning;
  out_of_range.coalitions = {{1, 4}};
  CHECK_FALSE(validate(out_of_range).ok());

  GameDefinition empty_mwc;
  empty_mwc.n = 3;
  empty_mwc.kind = GameKind::MinimalWinning;
  empty_mwc.coalitions = {};
  CHECK_FALSE(validate(empty_mwc).ok());
}

TEST_CASE("monotone under containment, random pairs") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);
    SimpleGame game = random_monotone_game(rng, n);
    std::uniform_int_distribution<Mask> dist(0, Coalition::full(n).mask());
    Mask a = dist(rng);
    Mask b = dist(rng);
    Coalition small = Coalition::from_mask(a & b);
    Coalition large = Coalition::from_mask(a | b);
    CHECK(game.value(small) <= game.value(large));
  }
}

TEST_CASE("derivative identity, exhaustive to n = 6") {
  std::mt19937_64 rng(7);
  std::vector<SimpleGame> games = {paper_weighted_game(), SimpleGame::apex(6, 2),
                                   SimpleGame::majority(6, 4)};
  for (int i = 0; i < 5; ++i) games.push_back(random_monotone_game(rng, 6));

  for (const SimpleGame& game : games) {
    for (Coalition s : subsets_of(game.grand_coalition()))
      for (Coalition t : subsets_of(game.grand_coalition().minus(s)))
        CHECK(game.derivative(s, t) == game.value(s | t) - game.value(t));
  }
}

TEST_CASE("minimal winning antichain determines the game") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    SimpleGame game = random_monotone_game(rng, n);
    std::vector<Coalition> mwc = game.minimal_winning_coalitions();

    for (std::size_t i = 0; i < mwc.size(); ++i) {
      for (std::size_t j = 0; j < mwc.size(); ++j)
        if (i != j) CHECK_FALSE(mwc[i].subset_of(mwc[j]));
      if (i + 1 < mwc.size()) CHECK(size_lex_less(mwc[i], mwc[i + 1]));
    }

    // upward closure reproduces the game on every subset
    std::vector<Coalition> winning;
    for (Coalition s : subsets_of(game.grand_coalition()))
      if (game.value(s)) winning.push_back(s);
    SimpleGame closure = SimpleGame::explicit_winning(n, winning);
    SimpleGame regenerated = SimpleGame::minimal_winning(n, mwc);
    for (Coalition s : subsets_of(game.grand_coalition())) {
      CHECK(regenerated.value(s) == game.value(s));
      CHECK(closure.value(s) == game.value(s));
    }
  }
}

TEST_CASE("null iff absent from every minimal winning coalition") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    SimpleGame game = random_monotone_game(rng, n);
    // explicit representation takes the enumeration path for is_null_player
    std::vector<Coalition> winning;
    for (Coalition s : subsets_of(game.grand_coalition()))
      if (game.value(s)) winning.push_back(s);
    SimpleGame explicit_game = SimpleGame::explicit_winning(n, winning);

    std::vector<Coalition> mwc = game.minimal_winning_coalitions();
    for (int i = 1; i <= n; ++i) {
      bool absent = true;
      for (Coalition w : mwc)
        if (w.contains(i)) absent = false;
      CHECK(game.is_null_player(i) == absent);
      CHECK(explicit_game.is_null_player(i) == absent);
    }
  }
}
