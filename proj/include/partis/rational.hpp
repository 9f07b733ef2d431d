#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace partis {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction over arbitrary-precision integers. Always stored in lowest
/// terms with a positive denominator, so structural equality is value
/// equality. Every solver in this library computes with these; no floating
/// point appears on any solver path.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}

    /// Throws std::domain_error on a zero denominator. Sign is carried by
    /// the numerator.
    Rational(BigInt num, BigInt den);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    /// Throws std::domain_error when dividing by zero.
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    bool operator==(const Rational& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    std::strong_ordering operator<=>(const Rational& o) const;

    /// Canonical textual form "a/b"; integers render without "/1".
    /// This is the format used bit-exactly by the CLI and JSON output.
    std::string to_string() const;

    /// Inverse of to_string. Accepts "a", "a/b", optional leading minus on a.
    /// Throws std::invalid_argument on malformed text, std::domain_error on
    /// a zero denominator.
    static Rational from_string(const std::string& text);

    /// Display-only decimal rendering with `digits` places after the point,
    /// rounded half away from zero.
    std::string to_decimal_string(unsigned digits = 6) const;

private:
    void normalize();

    BigInt num_;
    BigInt den_;  // > 0, gcd(|num_|, den_) == 1
};

/// C(n, k) by the multiplicative rule with exact intermediate division.
/// Out-of-range k (k < 0 or k > n) yields 0.
BigInt choose(unsigned n, long long k);

/// a * (a+1) * ... * b for 1 <= a <= b; throws std::domain_error when a > b
/// or a < 1.
BigInt product_range(unsigned a, unsigned b);

/// 2^n as a BigInt.
BigInt pow2(unsigned n);

/// Exact integer power of a rational.
Rational pow(const Rational& base, unsigned exp);

}  // namespace partis
