#pragma once

#include "partis/rational.hpp"

#include <cstddef>
#include <vector>

namespace partis {

/// State of an interrupted match played to a fixed number of wins: for each
/// player, the number of games that player still needs ("missing count").
/// A state is "live" while every entry is >= 1; a single entry of 0 marks a
/// decided match (that player has already won). More than one zero can never
/// arise from play and is rejected.
class GameState {
public:
    explicit GameState(std::vector<unsigned> missing);

    const std::vector<unsigned>& missing() const { return missing_; }
    std::size_t players() const { return missing_.size(); }

    bool is_decided() const;
    /// Index of the player whose missing count is 0. Throws
    /// std::logic_error on a live state.
    std::size_t winner() const;

    /// Total number of games that the match can still require: once only one
    /// player is short of one win and everyone else is short of everything,
    /// every further game is decisive.
    unsigned max_remaining_games() const;

    /// Successor state after `player` wins one game. Only valid on a live
    /// state.
    GameState after_win(std::size_t player) const;

    bool operator==(const GameState&) const = default;

private:
    std::vector<unsigned> missing_;
};

/// Exact per-player split of a unit stake. Solvers guarantee the shares sum
/// to exactly 1.
struct Division {
    std::vector<Rational> shares;

    Rational total() const;
    /// Monetary amounts for a concrete stake (share_i * stake).
    std::vector<Rational> amounts(const Rational& stake) const;

    bool operator==(const Division&) const = default;
};

/// Winners of successive games, one player index per round (0-based).
using OutcomeSequence = std::vector<std::size_t>;

}  // namespace partis
