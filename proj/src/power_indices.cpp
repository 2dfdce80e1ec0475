#include "coopet/power_indices.hpp"

#include <stdexcept>
#include <vector>

namespace coopet {

namespace {

void require_nonempty(Coalition s) {
  if (s.empty()) throw std::invalid_argument("index of the empty coalition");
}

/// Sum of coeff(t) * per_t[t] where coeff(t) = (n-s-t)! t! / (n-s+1)!.
Rational combine_shapley_weights(const std::vector<long long>& per_t, int n, int s) {
  BigInt num = 0;
  for (int t = 0; t < static_cast<int>(per_t.size()); ++t)
    if (per_t[t] != 0) num += BigInt(per_t[t]) * factorial(n - s - t) * factorial(t);
  return make_rational(std::move(num), factorial(n - s + 1));
}

}  // namespace

Rational generalized_shapley(const SimpleGame& game, Coalition s) {
  require_nonempty(s);
  const int n = game.player_count();
  Coalition rest = game.grand_coalition().minus(s);

  std::vector<long long> wins_per_size(rest.size() + 1, 0);
  for (Coalition t : subsets_of(rest))
    wins_per_size[t.size()] += game.derivative(s, t);
  return combine_shapley_weights(wins_per_size, n, s.size());
}

Rational profitability(const SimpleGame& game, Coalition s) {
  require_nonempty(s);
  Rational result = generalized_shapley(game, s);
  for (int id : s.members()) result -= generalized_shapley(game, Coalition::single(id));
  return result;
}

long long interaction_indicator(const SimpleGame& game, Coalition s, Coalition t) {
  require_nonempty(s);
  if (!s.disjoint_with(t))
    throw std::invalid_argument("interaction indicator requires disjoint coalitions");
  const int size = s.size();
  long long total = 0;
  for (Coalition l : subsets_of(s)) {
    int sign = ((size - l.size()) % 2 == 0) ? 1 : -1;
    total += sign * game.value(l | t);
  }
  return total;
}

Rational shapley_interaction(const SimpleGame& game, Coalition s) {
  require_nonempty(s);
  const int n = game.player_count();
  Coalition rest = game.grand_coalition().minus(s);

  std::vector<long long> sum_per_size(rest.size() + 1, 0);
  for (Coalition t : subsets_of(rest))
    sum_per_size[t.size()] += interaction_indicator(game, s, t);
  return combine_shapley_weights(sum_per_size, n, s.size());
}

}  // namespace coopet
