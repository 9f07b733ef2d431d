#include "partis/triangle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace partis {

Triangle::Triangle(unsigned order) : order_(order) {
    if (order == 0) {
        throw std::domain_error("Triangle: order must be at least 1");
    }
    rows_.resize(order);
    for (unsigned i = 1; i <= order; ++i) {
        std::vector<BigInt>& row = rows_[i - 1];
        row.resize(order + 1 - i);
        for (unsigned j = 1; j <= order + 1 - i; ++j) {
            if (i == 1 && j == 1) {
                row[0] = 1;  // the générateur
                continue;
            }
            BigInt left = j >= 2 ? rows_[i - 1][j - 2] : BigInt(0);
            BigInt above = i >= 2 ? rows_[i - 2][j - 1] : BigInt(0);
            row[j - 1] = left + above;
        }
    }
}

bool Triangle::contains(unsigned i, unsigned j) const {
    return i >= 1 && j >= 1 && i + j <= order_ + 1;
}

const BigInt& Triangle::cell(unsigned i, unsigned j) const {
    if (!contains(i, j)) {
        throw std::out_of_range("Triangle: cell (" + std::to_string(i) + ", " +
                                std::to_string(j) + ") outside the first " +
                                std::to_string(order_) + " bases");
    }
    return rows_[i - 1][j - 1];
}

std::vector<BigInt> Triangle::base(unsigned b) const {
    if (b < 1 || b > order_) {
        throw std::out_of_range("Triangle: base " + std::to_string(b) +
                                " outside the first " + std::to_string(order_) +
                                " bases");
    }
    std::vector<BigInt> out;
    out.reserve(b);
    for (unsigned i = 1; i <= b; ++i) {
        out.push_back(cell(i, b + 1 - i));
    }
    return out;
}

std::string Triangle::render() const {
    // Column widths across all parallel ranks, so the grid stays aligned.
    std::vector<std::size_t> width(order_, 0);
    for (unsigned i = 1; i <= order_; ++i) {
        for (unsigned j = 1; j <= order_ + 1 - i; ++j) {
            width[j - 1] = std::max(width[j - 1], cell(i, j).str().size());
        }
    }
    std::ostringstream out;
    for (unsigned i = 1; i <= order_; ++i) {
        for (unsigned j = 1; j <= order_ + 1 - i; ++j) {
            std::string v = cell(i, j).str();
            if (j > 1) out << "  ";
            out << std::string(width[j - 1] - v.size(), ' ') << v;
        }
        out << "\n";
    }
    return out.str();
}

BigInt cell_direct(unsigned i, unsigned j) {
    if (i < 1 || j < 1) {
        throw std::domain_error("cell_direct: exponents are 1-based");
    }
    return choose(i + j - 2, static_cast<long long>(i) - 1);
}

std::vector<BigInt> base_cells(unsigned n) {
    if (n < 1) {
        throw std::domain_error("base_cells: base index must be at least 1");
    }
    std::vector<BigInt> out;
    out.reserve(n);
    for (unsigned k = 0; k < n; ++k) {
        out.push_back(choose(n - 1, k));
    }
    return out;
}

Division base_partition(unsigned missing_a, unsigned missing_b) {
    if (missing_a == 0 || missing_b == 0) {
        throw std::domain_error(
            "base_partition: a player with zero missing games has already "
            "won; there is nothing to divide");
    }
    unsigned exponent = missing_a + missing_b - 1;
    BigInt favorable_a = 0;
    for (unsigned k = 0; k < missing_b; ++k) {
        favorable_a += choose(exponent, k);
    }
    Rational share_a(favorable_a, pow2(exponent));
    return Division{{share_a, Rational(1) - share_a}};
}

std::pair<Rational, Rational> consequence12_ratio(unsigned base_index,
                                                  unsigned position) {
    if (position < 1 || position >= base_index) {
        throw std::domain_error(
            "consequence12_ratio: position must satisfy 1 <= position < "
            "base_index");
    }
    unsigned b = base_index;
    unsigned p = position;
    Rational value_ratio(choose(b - 1, p - 1), choose(b - 1, p));
    Rational count_ratio(p, b - p);
    return {value_ratio, count_ratio};
}

std::pair<BigInt, Rational> tail_sum_identity(unsigned n) {
    if (n < 2) {
        throw std::domain_error("tail_sum_identity: need n >= 2");
    }
    BigInt left = 0;
    for (unsigned k = n - 1; k <= 2 * n - 2; ++k) {
        left += choose(2 * n - 2, k);
    }
    Rational right = Rational(pow2(2 * n - 3)) +
                     Rational(choose(2 * n - 2, n - 1), BigInt(2));
    return {left, right};
}

}  // namespace partis
