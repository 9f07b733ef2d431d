#pragma once

#include "partis/rational.hpp"

#include <vector>

namespace partis {

/// One branch of a Huygens lottery: an integer number of equally likely
/// chances of receiving a payoff.
struct LotteryBranch {
    BigInt chances;  // >= 1
    Rational payoff;
};

/// "Avoir p chances d'obtenir a et q chances d'obtenir b": a finite list of
/// weighted payoffs. Needs at least one branch.
struct Lottery {
    std::vector<LotteryBranch> branches;
};

/// Huygens' expectation: sum(chances_i * payoff_i) / sum(chances_i).
/// Proposition I is the equal-weight two-branch case (a+b)/2, Proposition
/// III the general weighted form. Throws std::invalid_argument on an empty
/// lottery or a branch with fewer than 1 chance.
Rational lottery_value(const Lottery& l);

/// The wager of the undated dice letter, generalized from "at least one six
/// in eight throws": a die of `faces` faces with `favorable` winning faces,
/// thrown up to `total_throws` times for `stake`.
struct DiceGame {
    unsigned faces = 6;
    unsigned favorable = 1;  // in [1, faces)
    unsigned total_throws = 8;
    Rational stake = Rational(1);
};

/// Probability of at least one favorable throw over the whole wager:
/// 1 - ((faces-favorable)/faces)^total_throws.
Rational win_probability(const DiceGame& g);

/// Pascal's sequential-withdrawal reading of renouncing the k-th throw,
/// priced before any throw is made: the k-th throw is reached only if the
/// first k-1 all miss, so its value is
/// stake * (favorable/faces) * ((faces-favorable)/faces)^(k-1) —
/// 125/1296 of the original stake for the fourth throw of the six-face game.
/// Throws std::domain_error unless 1 <= k <= total_throws.
Rational renounce_value_unconditional(const DiceGame& g, unsigned k);

/// Fermat's correction: once the earlier throws have already been lost and
/// the whole stake is still on the table, every throw is worth the same
/// favorable/faces of it — "c'est exactement renoncer à un sixième de
/// l'enjeu", no matter how many throws were missed.
Rational renounce_value_conditional(const DiceGame& g);

}  // namespace partis
