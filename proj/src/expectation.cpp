#include "partis/expectation.hpp"

#include <stdexcept>

namespace partis {

namespace {

void validate(const DiceGame& g) {
    if (g.faces < 2) {
        throw std::invalid_argument("DiceGame: need at least 2 faces");
    }
    if (g.favorable < 1 || g.favorable >= g.faces) {
        throw std::invalid_argument(
            "DiceGame: favorable faces must lie in [1, faces)");
    }
    if (g.total_throws < 1) {
        throw std::invalid_argument("DiceGame: need at least one throw");
    }
}

Rational miss_probability(const DiceGame& g) {
    return Rational(BigInt(g.faces - g.favorable), BigInt(g.faces));
}

}  // namespace

Rational lottery_value(const Lottery& l) {
    if (l.branches.empty()) {
        throw std::invalid_argument("lottery_value: no branches");
    }
    Rational weighted;
    BigInt total_chances = 0;
    for (const LotteryBranch& branch : l.branches) {
        if (branch.chances < 1) {
            throw std::invalid_argument(
                "lottery_value: every branch needs at least one chance");
        }
        weighted += Rational(branch.chances) * branch.payoff;
        total_chances += branch.chances;
    }
    return weighted / Rational(total_chances);
}

Rational win_probability(const DiceGame& g) {
    validate(g);
    return Rational(1) - pow(miss_probability(g), g.total_throws);
}

Rational renounce_value_unconditional(const DiceGame& g, unsigned k) {
    validate(g);
    if (k < 1 || k > g.total_throws) {
        throw std::domain_error(
            "renounce_value_unconditional: throw number " + std::to_string(k) +
            " outside 1.." + std::to_string(g.total_throws));
    }
    Rational hit(BigInt(g.favorable), BigInt(g.faces));
    return g.stake * hit * pow(miss_probability(g), k - 1);
}

Rational renounce_value_conditional(const DiceGame& g) {
    validate(g);
    return Rational(BigInt(g.favorable), BigInt(g.faces)) * g.stake;
}

}  // namespace partis
