#pragma once

#include "partis/game.hpp"
#include "partis/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace partis {

/// Pascal's arithmetic triangle in his own coordinate vocabulary: cells are
/// addressed by 1-based parallel and perpendicular exponents (i, j), the
/// top-left "générateur" is cell (1, 1) = 1, and base b is the anti-diagonal
/// of the b cells with i + j - 1 = b. A triangle of a given order holds all
/// cells of its first `order` bases.
class Triangle {
public:
    /// Builds the first `order` bases by the generation rule
    /// cell(i,j) = cell(i,j-1) + cell(i-1,j), out-of-triangle neighbors
    /// contributing 0. Throws std::domain_error when order == 0.
    explicit Triangle(unsigned order);

    unsigned order() const { return order_; }

    bool contains(unsigned i, unsigned j) const;
    /// Cell value at parallel exponent i, perpendicular exponent j (both
    /// 1-based). Throws std::out_of_range outside the generated bases.
    const BigInt& cell(unsigned i, unsigned j) const;

    /// The b cells of base b, read from parallel exponent 1 downward,
    /// i.e. [cell(1,b), cell(2,b-1), ..., cell(b,1)]; same order as
    /// base_cells.
    std::vector<BigInt> base(unsigned b) const;

    /// Plain-text rendering: one line per parallel rank, columns aligned.
    std::string render() const;

private:
    unsigned order_;
    std::vector<std::vector<BigInt>> rows_;  // rows_[i-1][j-1]
};

inline Triangle build_triangle(unsigned order) { return Triangle(order); }

/// Closed form for a cell: choose(i+j-2, i-1). Agrees with the generation
/// rule everywhere.
BigInt cell_direct(unsigned i, unsigned j);

/// The n values of base n, i.e. choose(n-1, 0), ..., choose(n-1, n-1).
/// Throws std::domain_error when n == 0.
std::vector<BigInt> base_cells(unsigned n);

/// Two-player stake division by splitting a base of the triangle, the
/// Traité's application to the problem of points: with a and b games missing,
/// take base a+b and give the player missing a the block of b cells
/// (1 + 4 + 6 out of 16 in the Traité's own example for missing counts 2
/// and 3). Throws std::domain_error when a missing count is zero — a decided
/// match is no longer a division problem.
Division base_partition(unsigned missing_a, unsigned missing_b);

/// Conséquence douzième for the contiguous pair at `position` within
/// `base_index`: returns (value ratio of the pair, cell-count ratio L/R),
/// which the Conséquence asserts are equal. Position p pairs the cells at
/// exponents (b+1-p, p) and (b-p, p+1); L counts the p cells from the first
/// of the pair to the end of the base on its side, R the b-p cells from the
/// second to the other end. Throws std::domain_error unless
/// 1 <= position < base_index.
std::pair<Rational, Rational> consequence12_ratio(unsigned base_index,
                                                  unsigned position);

/// Both sides of the tail-sum identity
///   sum_{k=n-1}^{2n-2} choose(2n-2, k)  ==  2^{2n-3} + choose(2n-2, n-1)/2,
/// the count of outcome sequences favorable to the player who just won the
/// first game of a match to n. Returned as (left sum, right value); callers
/// assert equality. Throws std::domain_error when n < 2.
std::pair<BigInt, Rational> tail_sum_identity(unsigned n);

}  // namespace partis
