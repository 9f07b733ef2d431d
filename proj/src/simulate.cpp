#include "partis/simulate.hpp"

#include "partis/solver.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace partis {

std::uint64_t SplitMix64::next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t uniform_below(SplitMix64& rng, std::uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("uniform_below: bound must be positive");
    }
    // Largest multiple of bound representable in 64 bits; draws at or above
    // it would be biased, so reject and redraw.
    std::uint64_t limit = bound * (std::numeric_limits<std::uint64_t>::max() /
                                   bound);
    std::uint64_t draw;
    do {
        draw = rng.next();
    } while (draw >= limit);
    return draw % bound;
}

namespace {

// Inner loop shared by simulate_game and estimate_division; `scratch` is
// reassigned from the start state each match so batch callers pay for one
// allocation, not one per trial.
GameResult run_match(const std::vector<unsigned>& start,
                     std::vector<unsigned>& scratch, SplitMix64& rng) {
    scratch = start;
    std::size_t players = scratch.size();
    unsigned rounds = 0;
    for (;;) {
        std::size_t winner =
            static_cast<std::size_t>(uniform_below(rng, players));
        ++rounds;
        if (--scratch[winner] == 0) {
            return GameResult{winner, rounds};
        }
    }
}

}  // namespace

GameResult simulate_game(const GameState& state, SplitMix64& rng) {
    if (state.is_decided()) {
        throw std::invalid_argument("simulate_game: match already decided");
    }
    std::vector<unsigned> scratch;
    return run_match(state.missing(), scratch, rng);
}

namespace {

double sigma_for(const Rational& exact_share, std::uint64_t wins,
                 std::uint64_t trials) {
    double p = exact_share.num().convert_to<double>() /
               exact_share.den().convert_to<double>();
    double diff = std::abs(static_cast<double>(wins) /
                               static_cast<double>(trials) -
                           p);
    double se = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
    if (se == 0.0) {
        return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return diff / se;
}

}  // namespace

SimReport estimate_division(const GameState& state, std::uint64_t trials,
                            std::uint64_t seed) {
    if (trials < 1) {
        throw std::invalid_argument("estimate_division: need at least 1 trial");
    }
    if (state.is_decided()) {
        throw std::invalid_argument("estimate_division: match already decided");
    }
    std::size_t players = state.players();
    SimReport report;
    report.trials = trials;
    report.wins.assign(players, 0);

    SplitMix64 rng(seed);
    std::vector<unsigned> scratch;
    for (std::uint64_t t = 0; t < trials; ++t) {
        ++report.wins[run_match(state.missing(), scratch, rng).winner];
    }

    Division exact = solve_recursive(state);
    report.empirical.reserve(players);
    report.sigma_distance.reserve(players);
    for (std::size_t i = 0; i < players; ++i) {
        report.empirical.emplace_back(BigInt(report.wins[i]), BigInt(trials));
        report.sigma_distance.push_back(
            sigma_for(exact.shares[i], report.wins[i], trials));
    }
    return report;
}

CheckResult check_against(const Division& exact, const SimReport& report,
                          double sigma_gate) {
    if (exact.shares.size() != report.wins.size()) {
        throw std::invalid_argument(
            "check_against: division and report disagree on the number of "
            "players");
    }
    CheckResult result;
    result.sigma_gate = sigma_gate;
    result.pass = true;
    for (std::size_t i = 0; i < exact.shares.size(); ++i) {
        double sigma = sigma_for(exact.shares[i], report.wins[i],
                                 report.trials);
        result.sigma_distance.push_back(sigma);
        if (sigma > sigma_gate) result.pass = false;
    }
    return result;
}

}  // namespace partis
