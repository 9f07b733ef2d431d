#include "partis/solver.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace partis {

namespace {

// Backward induction with a memo table confined to one solve_recursive call;
// std::map keeps references stable while recursion is in flight.
using Memo = std::map<std::vector<unsigned>, std::vector<Rational>>;

const std::vector<Rational>& recursive_shares(
    const std::vector<unsigned>& missing, Memo& memo) {
    if (auto it = memo.find(missing); it != memo.end()) {
        return it->second;
    }
    std::size_t n = missing.size();
    std::vector<Rational> shares(n);
    auto zero = std::find(missing.begin(), missing.end(), 0u);
    if (zero != missing.end()) {
        // First principle: a decided match belongs entirely to its winner.
        shares[static_cast<std::size_t>(zero - missing.begin())] = Rational(1);
    } else {
        // Second principle: one fair game is worth the average of the n
        // successor states.
        std::vector<unsigned> next = missing;
        for (std::size_t w = 0; w < n; ++w) {
            --next[w];
            const std::vector<Rational>& sub = recursive_shares(next, memo);
            for (std::size_t i = 0; i < n; ++i) shares[i] += sub[i];
            ++next[w];
        }
        Rational weight(1, static_cast<long long>(n));
        for (Rational& s : shares) s *= weight;
    }
    return memo.emplace(missing, std::move(shares)).first->second;
}

void require_live(const GameState& state, const char* method) {
    if (state.is_decided()) {
        throw std::invalid_argument(
            std::string(method) +
            ": match already decided; the first principle applies, not an "
            "enumeration");
    }
}

// n^length if it stays within cap, else EnumerationCapError whose message
// names the cap.
std::uint64_t sequence_count_or_throw(std::size_t players, unsigned length,
                                      std::uint64_t cap, const char* method) {
    std::uint64_t total = 1;
    for (unsigned i = 0; i < length; ++i) {
        if (total > cap / players) {
            throw EnumerationCapError(
                "instance too large for " + std::string(method) + ": " +
                    std::to_string(players) + "^" + std::to_string(length) +
                    " sequences exceed the enumeration cap of " +
                    std::to_string(cap),
                cap);
        }
        total *= players;
    }
    return total;
}

void breakdown_dfs(std::vector<unsigned>& missing, unsigned depth,
                   const std::vector<Rational>& level_probability,
                   std::vector<std::vector<Rational>>& out) {
    for (std::size_t w = 0; w < missing.size(); ++w) {
        if (missing[w] == 1) {
            // Winning round depth+1 decides the match; the truncated
            // sequence carries probability (1/n)^(depth+1).
            out[w][depth] += level_probability[depth + 1];
        } else {
            --missing[w];
            breakdown_dfs(missing, depth + 1, level_probability, out);
            ++missing[w];
        }
    }
}

}  // namespace

Division solve_recursive(const GameState& state) {
    Memo memo;
    return Division{recursive_shares(state.missing(), memo)};
}

unsigned feigned_length(const GameState& state) {
    return state.max_remaining_games();
}

Division solve_feigned(const GameState& state, std::uint64_t cap) {
    require_live(state, "solve_feigned");
    std::size_t n = state.players();
    unsigned length = feigned_length(state);
    std::uint64_t total =
        sequence_count_or_throw(n, length, cap, "feigned enumeration");

    std::vector<std::uint64_t> favorable(n, 0);
    OutcomeSequence seq(length, 0);
    for (std::uint64_t t = 0; t < total; ++t) {
        std::size_t winner =
            classify_sequence(seq, state, WinnerRule::chronological).front();
        ++favorable[winner];
        // Advance the sequence as a base-n odometer.
        for (std::size_t pos = length; pos-- > 0;) {
            if (++seq[pos] < n) break;
            seq[pos] = 0;
        }
    }

    Division division;
    division.shares.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        division.shares.emplace_back(BigInt(favorable[i]), BigInt(total));
    }
    return division;
}

std::vector<std::size_t> classify_sequence(const OutcomeSequence& seq,
                                           const GameState& state,
                                           WinnerRule rule) {
    require_live(state, "classify_sequence");
    if (seq.size() != feigned_length(state)) {
        throw std::invalid_argument(
            "classify_sequence: sequence has " + std::to_string(seq.size()) +
            " rounds, the feigned length here is " +
            std::to_string(feigned_length(state)));
    }
    std::size_t n = state.players();
    for (std::size_t round_winner : seq) {
        if (round_winner >= n) {
            throw std::invalid_argument(
                "classify_sequence: player index out of range");
        }
    }
    std::vector<unsigned> tally(n, 0);

    if (rule == WinnerRule::chronological) {
        for (std::size_t round_winner : seq) {
            if (++tally[round_winner] == state.missing()[round_winner]) {
                return {round_winner};
            }
        }
        // Unreachable for a full-length sequence: if nobody reached their
        // missing count, at most sum(missing) - players games were played.
        throw std::logic_error("classify_sequence: no chronological winner");
    }

    for (std::size_t round_winner : seq) {
        ++tally[round_winner];
    }
    std::vector<std::size_t> winners;
    for (std::size_t i = 0; i < n; ++i) {
        if (tally[i] >= state.missing()[i]) winners.push_back(i);
    }
    return winners;
}

std::vector<std::vector<Rational>> exact_length_breakdown(
    const GameState& state, std::uint64_t cap) {
    require_live(state, "solve_exact_length");
    std::size_t n = state.players();
    unsigned length = feigned_length(state);
    sequence_count_or_throw(n, length, cap, "exact-length enumeration");

    std::vector<Rational> level_probability(length + 1);
    for (unsigned level = 0; level <= length; ++level) {
        level_probability[level] =
            pow(Rational(1, static_cast<long long>(n)), level);
    }

    std::vector<std::vector<Rational>> out(
        n, std::vector<Rational>(length, Rational(0)));
    std::vector<unsigned> missing = state.missing();
    breakdown_dfs(missing, 0, level_probability, out);
    return out;
}

Division solve_exact_length(const GameState& state, std::uint64_t cap) {
    std::vector<std::vector<Rational>> breakdown =
        exact_length_breakdown(state, cap);
    Division division;
    division.shares.reserve(breakdown.size());
    for (const std::vector<Rational>& per_round : breakdown) {
        Rational share;
        for (const Rational& p : per_round) share += p;
        division.shares.push_back(share);
    }
    return division;
}

Rational series_missing_2_k(unsigned k) {
    // Player A misses 2, player B misses k; A can win at exactly round m
    // (m = 2..k+1) in m-1 ways, each of probability 1/2^m. For k = 0 the
    // empty sum is 0, agreeing with the decided state (2, 0).
    Rational sum;
    for (unsigned m = 2; m <= k + 1; ++m) {
        sum += Rational(BigInt(m - 1), pow2(m));
    }
    return sum;
}

AdvantageCoefficient first_game_value_product(unsigned n) {
    if (n < 2) {
        throw std::domain_error(
            "first_game_value_product: the match must be to at least 2 wins");
    }
    BigInt odds = 1;
    BigInt evens = 1;
    for (unsigned i = 1; i <= n - 1; ++i) {
        odds *= 2 * i - 1;
        evens *= 2 * i;
    }
    return AdvantageCoefficient{Rational(odds, evens)};
}

AdvantageCoefficient first_game_value_binomial(unsigned n) {
    if (n < 2) {
        throw std::domain_error(
            "first_game_value_binomial: the match must be to at least 2 wins");
    }
    return AdvantageCoefficient{Rational(choose(2 * n - 2, n - 1),
                                         pow2(2 * n - 2))};
}

Rational advantage_to_probability(const AdvantageCoefficient& p_prime) {
    if (p_prime.value < Rational(0) || p_prime.value > Rational(1)) {
        throw std::domain_error(
            "advantage_to_probability: p' must lie in [0, 1]");
    }
    return p_prime.value / Rational(2) + Rational(1, 2);
}

Rational marginal_game_value(const GameState& state, std::size_t winner,
                             const Rational& stake) {
    if (winner >= state.players()) {
        throw std::invalid_argument(
            "marginal_game_value: player index out of range");
    }
    if (state.is_decided()) {
        throw std::domain_error(
            "marginal_game_value: match already decided; no game left to "
            "value");
    }
    Division before = solve_recursive(state);
    Division after = solve_recursive(state.after_win(winner));
    return stake * (after.shares[winner] - before.shares[winner]);
}

}  // namespace partis
