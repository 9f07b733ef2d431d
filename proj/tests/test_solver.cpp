#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "partis/solver.hpp"
#include "partis/triangle.hpp"

#include <algorithm>
#include <string>
#include <vector>

using namespace partis;

namespace {

// Every live 2-player state with both missing counts <= limit.
std::vector<GameState> two_player_states(unsigned limit) {
    std::vector<GameState> states;
    for (unsigned a = 1; a <= limit; ++a) {
        for (unsigned b = 1; b <= limit; ++b) {
            states.push_back(GameState({a, b}));
        }
    }
    return states;
}

// Every live 3-player state with missing counts summing to at most `total`.
std::vector<GameState> three_player_states(unsigned total) {
    std::vector<GameState> states;
    for (unsigned a = 1; a <= total; ++a) {
        for (unsigned b = 1; a + b <= total; ++b) {
            for (unsigned c = 1; a + b + c <= total; ++c) {
                states.push_back(GameState({a, b, c}));
            }
        }
    }
    return states;
}

}  // namespace

TEST_CASE("GameState validation") {
    CHECK_THROWS_AS(GameState({3}), std::invalid_argument);
    CHECK_THROWS_AS(GameState({}), std::invalid_argument);
    CHECK_THROWS_AS(GameState({0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(GameState({0, 2, 0}), std::invalid_argument);

    GameState live({2, 3});
    CHECK(!live.is_decided());
    CHECK(live.players() == 2);
    CHECK_THROWS_AS(live.winner(), std::logic_error);

    GameState decided({2, 0, 4});
    CHECK(decided.is_decided());
    CHECK(decided.winner() == 1);
    CHECK_THROWS_AS(decided.after_win(0), std::logic_error);

    CHECK(live.after_win(0) == GameState({1, 3}));
    CHECK_THROWS_AS(live.after_win(2), std::invalid_argument);
}

TEST_CASE("step-by-step solver: the 29 July and 25 September values") {
    Division d12 = solve_recursive(GameState({1, 2}));
    CHECK(d12.shares == std::vector<Rational>{Rational(3, 4), Rational(1, 4)});
    CHECK(d12.amounts(Rational(64)) ==
          std::vector<Rational>{Rational(48), Rational(16)});

    Division d13 = solve_recursive(GameState({1, 3}));
    CHECK(d13.shares == std::vector<Rational>{Rational(7, 8), Rational(1, 8)});
    CHECK(d13.amounts(Rational(64)) ==
          std::vector<Rational>{Rational(56), Rational(8)});

    Division d23 = solve_recursive(GameState({2, 3}));
    CHECK(d23.shares ==
          std::vector<Rational>{Rational(11, 16), Rational(5, 16)});
    CHECK(d23.amounts(Rational(64)) ==
          std::vector<Rational>{Rational(44), Rational(20)});

    Division d122 = solve_recursive(GameState({1, 2, 2}));
    CHECK(d122.shares == std::vector<Rational>{Rational(17, 27),
                                               Rational(5, 27),
                                               Rational(5, 27)});

    for (unsigned k = 1; k <= 6; ++k) {
        CHECK(solve_recursive(GameState({k, k})).shares ==
              std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
    }
}

TEST_CASE("step-by-step solver accepts decided states (first principle)") {
    CHECK(solve_recursive(GameState({0, 3})).shares ==
          std::vector<Rational>{Rational(1), Rational(0)});
    CHECK(solve_recursive(GameState({3, 0, 4})).shares ==
          std::vector<Rational>{Rational(0), Rational(1), Rational(0)});
}

TEST_CASE("feigned length: the letters' round counts") {
    CHECK(feigned_length(GameState({2, 3})) == 4);   // 16 assiettes
    CHECK(feigned_length(GameState({1, 2, 2})) == 3);  // 27 columns
    CHECK(feigned_length(GameState({1, 1})) == 1);
}

TEST_CASE("feigned enumeration: the letters' tables") {
    CHECK(solve_feigned(GameState({2, 3})).shares ==
          std::vector<Rational>{Rational(11, 16), Rational(5, 16)});
    CHECK(solve_feigned(GameState({1, 2, 2})).shares ==
          std::vector<Rational>{Rational(17, 27), Rational(5, 27),
                                Rational(5, 27)});
    CHECK(solve_feigned(GameState({1, 1})).shares ==
          std::vector<Rational>{Rational(1, 2), Rational(1, 2)});

    CHECK_THROWS_AS(solve_feigned(GameState({0, 3})), std::invalid_argument);
}

TEST_CASE("enumeration cap is enforced and named") {
    // 2^9 = 512 sequences against a cap of 100.
    CHECK_THROWS_AS(solve_feigned(GameState({5, 5}), 100),
                    EnumerationCapError);
    try {
        solve_feigned(GameState({5, 5}), 100);
    } catch (const EnumerationCapError& e) {
        CHECK(e.cap() == 100);
        CHECK(std::string(e.what()).find("100") != std::string::npos);
        CHECK(std::string(e.what()).find("feigned") != std::string::npos);
    }
    CHECK_THROWS_AS(solve_exact_length(GameState({5, 5}), 100),
                    EnumerationCapError);

    // At the default cap, a 26-game two-player feigned table is refused...
    CHECK_THROWS_AS(solve_feigned(GameState({13, 14})), EnumerationCapError);
    // ...while the 16-assiette table runs.
    CHECK_NOTHROW(solve_feigned(GameState({2, 3})));
}

TEST_CASE("classify_sequence: chronological vs terminal-count rules") {
    GameState state({1, 2, 2});

    // The disputed column (a, b, b): player 1 wins chronologically, the
    // terminal count wrongly credits players 1 and 2 at once.
    CHECK(classify_sequence({0, 1, 1}, state, WinnerRule::chronological) ==
          std::vector<std::size_t>{0});
    CHECK(classify_sequence({0, 1, 1}, state, WinnerRule::terminal_naive) ==
          std::vector<std::size_t>{0, 1});

    // Once player 3 takes two rounds the third round changes nothing.
    for (std::size_t last = 0; last < 3; ++last) {
        CHECK(classify_sequence({2, 2, last}, state,
                                WinnerRule::chronological) ==
              std::vector<std::size_t>{2});
    }

    CHECK_THROWS_AS(classify_sequence({0, 1}, state, WinnerRule::chronological),
                    std::invalid_argument);  // wrong length
    CHECK_THROWS_AS(
        classify_sequence({0, 1, 3}, state, WinnerRule::chronological),
        std::invalid_argument);  // player index out of range
    CHECK_THROWS_AS(classify_sequence({0}, GameState({0, 2}),
                                      WinnerRule::chronological),
                    std::invalid_argument);  // decided state
}

TEST_CASE("chronological rule is total and tallies the 27-column table") {
    GameState state({1, 2, 2});
    std::vector<unsigned> tally(3, 0);
    unsigned naive_credits = 0;
    bool naive_overlap_seen = false;

    for (std::size_t r1 = 0; r1 < 3; ++r1) {
        for (std::size_t r2 = 0; r2 < 3; ++r2) {
            for (std::size_t r3 = 0; r3 < 3; ++r3) {
                OutcomeSequence seq{r1, r2, r3};
                auto winners =
                    classify_sequence(seq, state, WinnerRule::chronological);
                REQUIRE(winners.size() == 1);  // exactly one winner, always
                ++tally[winners.front()];

                auto naive =
                    classify_sequence(seq, state, WinnerRule::terminal_naive);
                naive_credits += naive.size();
                if (naive.size() > 1) naive_overlap_seen = true;
            }
        }
    }
    CHECK(tally == std::vector<unsigned>{17, 5, 5});
    // Pascal's 24 August rule over-credits: more attributions than columns.
    CHECK(naive_overlap_seen);
    CHECK(naive_credits > 27);

    // Same totality check on the 16-assiette two-player table.
    GameState state23({2, 3});
    std::vector<unsigned> tally23(2, 0);
    for (std::size_t bits = 0; bits < 16; ++bits) {
        OutcomeSequence seq;
        for (unsigned round = 0; round < 4; ++round) {
            seq.push_back((bits >> round) & 1);
        }
        auto winners =
            classify_sequence(seq, state23, WinnerRule::chronological);
        REQUIRE(winners.size() == 1);
        ++tally23[winners.front()];
    }
    CHECK(tally23 == std::vector<unsigned>{11, 5});
}

TEST_CASE("exact-length decomposition: per-round values of the 25 Sept letter") {
    auto breakdown = exact_length_breakdown(GameState({1, 2, 2}));
    REQUIRE(breakdown.size() == 3);
    REQUIRE(breakdown[0].size() == 3);
    CHECK(breakdown[0] == std::vector<Rational>{Rational(1, 3), Rational(2, 9),
                                                Rational(2, 27)});

    // Rounds a player cannot finish at carry probability zero.
    CHECK(breakdown[1][0] == Rational(0));
    CHECK(breakdown[2][0] == Rational(0));

    CHECK(solve_exact_length(GameState({1, 2, 2})).shares ==
          std::vector<Rational>{Rational(17, 27), Rational(5, 27),
                                Rational(5, 27)});
    CHECK(solve_exact_length(GameState({2, 3})).shares ==
          std::vector<Rational>{Rational(11, 16), Rational(5, 16)});

    auto even = exact_length_breakdown(GameState({1, 1}));
    CHECK(even == std::vector<std::vector<Rational>>{{Rational(1, 2)},
                                                     {Rational(1, 2)}});

    CHECK_THROWS_AS(solve_exact_length(GameState({0, 3})),
                    std::invalid_argument);
}

TEST_CASE("method equivalence at desk scale") {
    for (const GameState& state : two_player_states(8)) {
        Division recursive = solve_recursive(state);
        CHECK(recursive == solve_feigned(state));
        CHECK(recursive == solve_exact_length(state));
        CHECK(recursive ==
              base_partition(state.missing()[0], state.missing()[1]));
        CHECK(recursive.total() == Rational(1));
    }
    for (const GameState& state : three_player_states(8)) {
        Division recursive = solve_recursive(state);
        CHECK(recursive == solve_feigned(state));
        CHECK(recursive == solve_exact_length(state));
        CHECK(recursive.total() == Rational(1));
    }
}

TEST_CASE("shares respond to the state as they must") {
    // Fewer games missing -> strictly larger share.
    for (const GameState& state : three_player_states(9)) {
        Division base = solve_recursive(state);
        for (std::size_t p = 0; p < 3; ++p) {
            if (state.missing()[p] == 1) continue;
            std::vector<unsigned> closer = state.missing();
            --closer[p];
            Division better = solve_recursive(GameState(closer));
            CHECK(better.shares[p] > base.shares[p]);
        }
    }

    // Permuting the players permutes the division identically.
    std::vector<unsigned> missing{1, 2, 4};
    std::vector<std::size_t> perm{2, 0, 1};
    Division original = solve_recursive(GameState(missing));
    std::vector<unsigned> permuted_missing(3);
    for (std::size_t i = 0; i < 3; ++i) {
        permuted_missing[i] = missing[perm[i]];
    }
    Division permuted = solve_recursive(GameState(permuted_missing));
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(permuted.shares[i] == original.shares[perm[i]]);
    }
}

TEST_CASE("closed series for the state (2, k)") {
    CHECK(series_missing_2_k(1) == Rational(1, 4));
    CHECK(series_missing_2_k(2) == Rational(1, 2));
    CHECK(series_missing_2_k(3) == Rational(11, 16));
    for (unsigned k = 1; k <= 12; ++k) {
        CHECK(series_missing_2_k(k) ==
              solve_recursive(GameState({2, k})).shares[0]);
    }
}

TEST_CASE("first-game value: product and binomial forms") {
    CHECK(first_game_value_product(2).value == Rational(1, 2));
    CHECK(first_game_value_product(3).value == Rational(3, 8));
    CHECK(first_game_value_product(8).value == Rational(429, 2048));
    CHECK(first_game_value_binomial(2).value == Rational(1, 2));
    CHECK(first_game_value_binomial(3).value == Rational(3, 8));

    for (unsigned n = 2; n <= 30; ++n) {
        CHECK(first_game_value_product(n) == first_game_value_binomial(n));
    }

    CHECK_THROWS_AS(first_game_value_product(1), std::domain_error);
    CHECK_THROWS_AS(first_game_value_binomial(1), std::domain_error);
    CHECK_THROWS_AS(first_game_value_product(0), std::domain_error);
}

TEST_CASE("advantage coefficient to outright probability") {
    CHECK(advantage_to_probability({Rational(3, 8)}) == Rational(11, 16));
    CHECK(advantage_to_probability({Rational(0)}) == Rational(1, 2));
    CHECK(advantage_to_probability({Rational(1)}) == Rational(1));
    CHECK_THROWS_AS(advantage_to_probability({Rational(-1, 10)}),
                    std::domain_error);
    CHECK_THROWS_AS(advantage_to_probability({Rational(11, 10)}),
                    std::domain_error);

    // Winning the first game of a match to n leaves the leader at (n-1, n).
    for (unsigned n = 2; n <= 12; ++n) {
        Rational p = advantage_to_probability(first_game_value_product(n));
        CHECK(p == solve_recursive(GameState({n - 1, n})).shares[0]);
    }
}

TEST_CASE("marginal value of one game") {
    // The last game at (1, k-1) is worth stake / 2^(k-1).
    for (unsigned k = 2; k <= 8; ++k) {
        CHECK(marginal_game_value(GameState({1, k - 1}), 0, Rational(64)) ==
              Rational(64) / Rational(pow2(k - 1)));
    }
    CHECK(marginal_game_value(GameState({1, 2}), 0, Rational(64)) ==
          Rational(16));
    CHECK(marginal_game_value(GameState({1, 1}), 0, Rational(64)) ==
          Rational(32));

    // At even states either player's next win is worth the same.
    for (unsigned k = 1; k <= 4; ++k) {
        GameState even({k, k});
        CHECK(marginal_game_value(even, 0, Rational(1)) ==
              marginal_game_value(even, 1, Rational(1)));
    }

    CHECK_THROWS_AS(marginal_game_value(GameState({0, 2}), 0, Rational(1)),
                    std::domain_error);
    CHECK_THROWS_AS(marginal_game_value(GameState({1, 2}), 2, Rational(1)),
                    std::invalid_argument);
}
