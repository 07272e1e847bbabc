#include "gapprob/exact.hpp"

#include <ostream>
#include <utility>

#include "gapprob/errors.hpp"

namespace gapprob {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ZeroDenominatorError();
    if (den_.is_negative()) {
        den_ = -den_;
        num_ = -num_;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (g > BigInt(1)) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational Rational::operator-() const {
    Rational result = *this;
    result.num_ = -result.num_;
    return result;
}

Rational operator+(const Rational& lhs, const Rational& rhs) {
    return Rational(lhs.num_ * rhs.den_ + rhs.num_ * lhs.den_, lhs.den_ * rhs.den_);
}

Rational operator-(const Rational& lhs, const Rational& rhs) {
    return Rational(lhs.num_ * rhs.den_ - rhs.num_ * lhs.den_, lhs.den_ * rhs.den_);
}

Rational operator*(const Rational& lhs, const Rational& rhs) {
    return Rational(lhs.num_ * rhs.num_, lhs.den_ * rhs.den_);
}

Rational operator/(const Rational& lhs, const Rational& rhs) {
    if (rhs.is_zero()) throw ZeroDenominatorError();
    return Rational(lhs.num_ * rhs.den_, lhs.den_ * rhs.num_);
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    // Denominators are positive, so cross-multiplication preserves order.
    return lhs.num_ * rhs.den_ <=> rhs.num_ * lhs.den_;
}

std::string Rational::to_string() const {
    return num_.to_string() + "/" + den_.to_string();
}

std::string Rational::to_decimal_string(int digits) const {
    if (digits < 0) throw OutOfRangeError("digit count must be non-negative");
    bool negative = num_.is_negative();
    BigInt scaled = num_.abs() * BigInt::pow10(digits);
    auto [quot, rem] = BigInt::divmod(scaled, den_);
    BigInt twice = rem + rem;
    if (twice > den_ || (twice == den_ && !quot.is_even())) quot += BigInt(1);

    std::string body = quot.to_string();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits))
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    if (negative && !quot.is_zero()) body.insert(0, "-");
    return body;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
    return os << value.to_string();
}

ExactProb::ExactProb(Rational value) : value_(std::move(value)) {
    if (value_.signum() < 0 || value_ > Rational(1))
        throw OutOfRangeError("probability outside [0, 1]: " + value_.to_string());
}

ExactProb ExactProb::complement() const {
    return ExactProb(Rational(1) - value_);
}

std::ostream& operator<<(std::ostream& os, const ExactProb& value) {
    return os << value.to_string();
}

ExactProb prob_ratio(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw ZeroDenominatorError();
    if (den.is_negative()) throw OutOfRangeError("denominator must be positive");
    if (num.is_negative()) throw OutOfRangeError("numerator must be non-negative");
    if (num > den)
        throw OutOfRangeError("ratio above one: " + num.to_string() + "/" + den.to_string());
    return ExactProb(Rational(num, den));
}

BigInt binom(long long a, long long b) {
    if (b < 0 || a < 0 || a < b) return BigInt(0);
    long long k = std::min(b, a - b);
    BigInt result(1);
    // C(a, k) = prod_{i=1..k} (a-k+i)/i; each intermediate quotient is the
    // integer C(a-k+i, i), so the stepwise division is exact.
    for (long long i = 1; i <= k; ++i) {
        result *= BigInt(a - k + i);
        result = result / BigInt(i);
    }
    return result;
}

}  // namespace gapprob
