#pragma once

#include "partis/game.hpp"
#include "partis/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace partis {

/// How a full-length outcome sequence is attributed to winners.
///
/// `chronological` is Fermat's rule: scan the rounds in order and the winner
/// is the first player to reach their missing count; everything played after
/// that "ne sert plus de rien". Always yields exactly one winner.
///
/// `terminal_naive` is the erroneous rule of Pascal's 24 August 1654 letter:
/// credit every player whose total wins over the whole sequence meet their
/// missing count. It can credit several players at once and is kept only as
/// the documented pedagogical mistake — no solver uses it.
enum class WinnerRule { chronological, terminal_naive };

/// Thrown when an enumeration-based solver would have to walk more sequences
/// than the configured cap allows.
class EnumerationCapError : public std::runtime_error {
public:
    EnumerationCapError(std::string what, std::uint64_t cap)
        : std::runtime_error(std::move(what)), cap_(cap) {}
    std::uint64_t cap() const { return cap_; }

private:
    std::uint64_t cap_;
};

/// Default ceiling on the number of sequences an enumeration solver will
/// visit. These methods are exponential by design; their value is
/// cross-validation at desk scale.
inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

/// Pascal's step-by-step method: backward induction over game states using
/// his two principles — a decided match gives the winner the whole stake,
/// and one game at even chances is worth the average of its outcomes
/// (generalized to n players as the mean of the n successor states).
/// Accepts decided states (first principle applies directly).
Division solve_recursive(const GameState& state);

/// Number of feigned rounds: the maximum number of games the match can still
/// need, L = sum(missing) - (players - 1). Both 1654 letters tabulate
/// exactly these L-round sequences (L = 4 for missing (2,3), 3 for (1,2,2)).
unsigned feigned_length(const GameState& state);

/// The method of the 24 August 1654 letter: pretend all L = feigned_length
/// rounds are played regardless of when the match is decided, so all n^L
/// sequences ("assiettes") are equally likely; each is attributed to its
/// unique chronological winner and shares are favorable counts over n^L.
/// Rejects decided states; throws EnumerationCapError when n^L > cap.
Division solve_feigned(const GameState& state,
                       std::uint64_t cap = kDefaultEnumerationCap);

/// Attributes one full-length sequence to its winner(s) under `rule` (see
/// WinnerRule). Returns the winner set as sorted 0-based player indices —
/// a singleton under the chronological rule, possibly larger under
/// terminal_naive. Throws std::invalid_argument when the sequence length is
/// not feigned_length(state), an index is out of range, or the state is not
/// live.
std::vector<std::size_t> classify_sequence(const OutcomeSequence& seq,
                                           const GameState& state,
                                           WinnerRule rule);

/// Per-round win probabilities in the style of Fermat's 25 September 1654
/// letter: breakdown[i][k] is the exact probability that player i wins the
/// match at exactly round k+1. Computed by walking the prefix tree of rounds
/// with early termination — a branch stops at its first winner and carries
/// probability (1/n)^length. Rejects decided states; throws
/// EnumerationCapError past the cap.
std::vector<std::vector<Rational>> exact_length_breakdown(
    const GameState& state, std::uint64_t cap = kDefaultEnumerationCap);

/// Fermat's exact-length decomposition: player i's share is the sum over k
/// of the probability of winning at exactly round k ("ou en une seule
/// partie, ou en deux, ou en trois"). Same output as solve_recursive by a
/// different route. Rejects decided states; throws EnumerationCapError past
/// the cap.
Division solve_exact_length(const GameState& state,
                            std::uint64_t cap = kDefaultEnumerationCap);

/// Closed-form exact-length series for the two-player state (2, k): the
/// leading player wins at exactly round m with probability (m-1)/2^m, summed
/// for m = 2..k+1. Equals the solve_recursive share by construction of the
/// series.
Rational series_missing_2_k(unsigned k);

/// Advantage coefficient p': the fraction of the *opponent's half* of the
/// stake that the winner of the first game becomes entitled to, in a match
/// to n wins. Related to the winner's outright probability p by
/// p = p'/2 + 1/2.
struct AdvantageCoefficient {
    Rational value;
    bool operator==(const AdvantageCoefficient&) const = default;
};

/// p' as the quotient of the first n-1 odd numbers by the first n-1 even
/// numbers: (1·3·5···(2n-3)) / (2·4·6···(2n-2)). Throws std::domain_error
/// when n < 2.
AdvantageCoefficient first_game_value_product(unsigned n);

/// p' in the closed binomial form choose(2n-2, n-1) / 2^(2n-2). Equal to the
/// product form for every n. Throws std::domain_error when n < 2.
AdvantageCoefficient first_game_value_binomial(unsigned n);

/// p = p'/2 + 1/2: the probability that the player leading 1-0 in a match to
/// n wins it. Throws std::domain_error unless p' is in [0, 1].
Rational advantage_to_probability(const AdvantageCoefficient& p_prime);

/// The value of one game: how much `winner` gains by winning the next game
/// from `state`, i.e. stake * (share after the win - share before). At state
/// (1, k-1) the last game is worth stake/2^(k-1). Throws std::domain_error
/// on a decided state.
Rational marginal_game_value(const GameState& state, std::size_t winner,
                             const Rational& stake);

}  // namespace partis
