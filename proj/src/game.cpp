#include "partis/game.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace partis {

GameState::GameState(std::vector<unsigned> missing)
    : missing_(std::move(missing)) {
    if (missing_.size() < 2) {
        throw std::invalid_argument("GameState: need at least 2 players");
    }
    std::size_t zeros = std::count(missing_.begin(), missing_.end(), 0u);
    if (zeros > 1) {
        throw std::invalid_argument(
            "GameState: more than one player with nothing left to win");
    }
}

bool GameState::is_decided() const {
    return std::find(missing_.begin(), missing_.end(), 0u) != missing_.end();
}

std::size_t GameState::winner() const {
    auto it = std::find(missing_.begin(), missing_.end(), 0u);
    if (it == missing_.end()) {
        throw std::logic_error("GameState: no winner in a live state");
    }
    return static_cast<std::size_t>(it - missing_.begin());
}

unsigned GameState::max_remaining_games() const {
    unsigned total = std::accumulate(missing_.begin(), missing_.end(), 0u);
    return total - static_cast<unsigned>(players() - 1);
}

GameState GameState::after_win(std::size_t player) const {
    if (player >= players()) {
        throw std::invalid_argument("GameState: player index out of range");
    }
    if (is_decided()) {
        throw std::logic_error("GameState: match already decided");
    }
    std::vector<unsigned> next = missing_;
    --next[player];
    return GameState(std::move(next));
}

Rational Division::total() const {
    Rational sum;
    for (const Rational& s : shares) sum += s;
    return sum;
}

std::vector<Rational> Division::amounts(const Rational& stake) const {
    std::vector<Rational> out;
    out.reserve(shares.size());
    for (const Rational& s : shares) out.push_back(s * stake);
    return out;
}

}  // namespace partis
