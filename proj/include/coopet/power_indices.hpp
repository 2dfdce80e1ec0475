#pragma once

#include "coopet/game.hpp"
#include "coopet/rational.hpp"

namespace coopet {

/// Coalition-level Shapley value: the derivative of S averaged over outside
/// coalitions T with weight (n-s-t)! t! / (n-s+1)!. For singletons this is the
/// classical Shapley value. Requires S nonempty.
Rational generalized_shapley(const SimpleGame& game, Coalition s);

/// generalized_shapley(S) minus the sum of its members' individual values.
Rational profitability(const SimpleGame& game, Coalition s);

/// Alternating-sign sum over the subsets L of S of v(L u T). Requires S
/// nonempty and disjoint from T.
long long interaction_indicator(const SimpleGame& game, Coalition s, Coalition t);

/// Interaction indicator averaged over outside coalitions with the Shapley
/// weights (n-t-s)! t! / (n-s+1)!.
Rational shapley_interaction(const SimpleGame& game, Coalition s);

}  // namespace coopet
