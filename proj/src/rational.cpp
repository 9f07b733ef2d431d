#include "partis/rational.hpp"

#include <cctype>
#include <utility>

namespace partis {

namespace {

BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

}  // namespace

Rational::Rational(BigInt num, BigInt den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = big_gcd(abs(num_), den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) {
        throw std::domain_error("Rational: division by zero");
    }
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    // Denominators are positive, so cross-multiplication preserves order.
    BigInt lhs = num_ * o.den_;
    BigInt rhs = o.num_ * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += "/";
        s += den_.str();
    }
    return s;
}

Rational Rational::from_string(const std::string& text) {
    auto parse_int = [](const std::string& part, bool allow_sign) -> BigInt {
        if (part.empty()) {
            throw std::invalid_argument("Rational: empty number in \"" + part + "\"");
        }
        std::size_t start = 0;
        if (allow_sign && (part[0] == '-' || part[0] == '+')) {
            start = 1;
        }
        if (start == part.size()) {
            throw std::invalid_argument("Rational: sign without digits");
        }
        for (std::size_t i = start; i < part.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) {
                throw std::invalid_argument("Rational: malformed number \"" + part + "\"");
            }
        }
        return BigInt(part);
    };

    std::size_t slash = text.find('/');
    if (slash == std::string::npos) {
        return Rational(parse_int(text, true));
    }
    BigInt num = parse_int(text.substr(0, slash), true);
    BigInt den = parse_int(text.substr(slash + 1), false);
    return Rational(std::move(num), std::move(den));
}

std::string Rational::to_decimal_string(unsigned digits) const {
    BigInt scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;

    BigInt scaled_twice = 2 * abs(num_) * scale;  // rounding half away from zero
    BigInt rounded = (scaled_twice / den_ + 1) / 2;

    BigInt whole = rounded / scale;
    BigInt frac = rounded % scale;

    std::string s = num_ < 0 && rounded != 0 ? "-" : "";
    s += whole.str();
    if (digits > 0) {
        std::string f = frac.str();
        s += ".";
        s += std::string(digits - f.size(), '0');
        s += f;
    }
    return s;
}

BigInt choose(unsigned n, long long k) {
    if (k < 0 || k > static_cast<long long>(n)) {
        return 0;
    }
    auto kk = static_cast<unsigned>(k);
    if (kk > n - kk) {
        kk = n - kk;  // C(n,k) = C(n,n-k)
    }
    BigInt result = 1;
    for (unsigned i = 1; i <= kk; ++i) {
        result *= n - kk + i;
        result /= i;  // exact: result is C(n-kk+i, i) after this step
    }
    return result;
}

BigInt product_range(unsigned a, unsigned b) {
    if (a < 1 || a > b) {
        throw std::domain_error("product_range: need 1 <= a <= b");
    }
    BigInt result = 1;
    for (unsigned i = a; i <= b; ++i) {
        result *= i;
    }
    return result;
}

BigInt pow2(unsigned n) {
    return BigInt(1) << n;
}

Rational pow(const Rational& base, unsigned exp) {
    Rational result(1);
    Rational b = base;
    while (exp > 0) {
        if (exp & 1u) result *= b;
        b *= b;
        exp >>= 1u;
    }
    return result;
}

}  // namespace partis
