#pragma once

#include "partis/game.hpp"
#include "partis/rational.hpp"

#include <cstdint>
#include <vector>

namespace partis {

/// SplitMix64: the fully specified 64-bit generator used for every
/// simulation, so any report is reproducible from its seed alone. One
/// additive constant and two mixing multipliers, no platform dependence:
///   state += 0x9E3779B97F4A7C15
///   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();

private:
    std::uint64_t state_;
};

/// Uniform draw from [0, bound) by rejection sampling — values from the
/// generator's partial final block are discarded rather than folded in, so
/// no residue of modulo bias reaches the round winners.
std::uint64_t uniform_below(SplitMix64& rng, std::uint64_t bound);

struct GameResult {
    std::size_t winner;
    unsigned rounds;  // never exceeds the feigned length of the start state
};

/// Plays one match out: uniform round winners until some player's missing
/// count reaches zero. Throws std::invalid_argument on a decided state.
GameResult simulate_game(const GameState& state, SplitMix64& rng);

/// One batch of simulated matches and its distance from the exact division.
struct SimReport {
    std::uint64_t trials = 0;
    std::vector<std::uint64_t> wins;           // per player; sums to trials
    std::vector<Rational> empirical;           // wins / trials, exact
    std::vector<double> sigma_distance;        // |empirical - exact| / se(exact)
};

/// Runs `trials` matches from `state` on a SplitMix64 stream seeded with
/// `seed`. Deterministic: the same (state, trials, seed) always yields the
/// identical report. sigma_distance is measured against the solve_recursive
/// division, in units of the binomial standard error sqrt(p(1-p)/trials).
SimReport estimate_division(const GameState& state, std::uint64_t trials,
                            std::uint64_t seed);

struct CheckResult {
    bool pass = false;
    std::vector<double> sigma_distance;  // per player, against `exact`
    double sigma_gate = 0.0;
};

/// Compares a report's win counts against a hypothesized exact division:
/// pass iff every player's empirical share lies within sigma_gate binomial
/// standard errors of the hypothesized share. Throws std::invalid_argument
/// when the player counts differ.
CheckResult check_against(const Division& exact, const SimReport& report,
                          double sigma_gate);

}  // namespace partis
