#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "gapprob/bigint.hpp"

namespace gapprob {

/// Exact rational number, stored reduced with a positive denominator.
/// The sign lives on the numerator; gcd(|num|, den) == 1 always.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt num, BigInt den);
    Rational(long long num) : Rational(BigInt(num), BigInt(1)) {}  // NOLINT

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    int signum() const { return num_.signum(); }
    bool is_zero() const { return num_.is_zero(); }

    Rational operator-() const;
    friend Rational operator+(const Rational& lhs, const Rational& rhs);
    friend Rational operator-(const Rational& lhs, const Rational& rhs);
    friend Rational operator*(const Rational& lhs, const Rational& rhs);
    friend Rational operator/(const Rational& lhs, const Rational& rhs);

    friend bool operator==(const Rational& lhs, const Rational& rhs) = default;
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

    /// "num/den", always with the denominator ("0/1", "-3/4").
    std::string to_string() const;

    /// Fixed-point decimal rendering with round-half-even at `digits`
    /// fractional digits. A negative value that rounds to zero renders
    /// without the sign.
    std::string to_decimal_string(int digits = 6) const;

    double to_double() const { return num_.to_double() / den_.to_double(); }

private:
    BigInt num_;
    BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// An exact probability: a Rational constrained to [0, 1].
class ExactProb {
public:
    ExactProb() = default;  // zero probability
    explicit ExactProb(Rational value);

    const Rational& value() const { return value_; }
    const BigInt& num() const { return value_.num(); }
    const BigInt& den() const { return value_.den(); }

    /// 1 - p, exact.
    ExactProb complement() const;

    std::string to_string() const { return value_.to_string(); }
    std::string to_decimal_string(int digits = 6) const {
        return value_.to_decimal_string(digits);
    }
    double to_double() const { return value_.to_double(); }

    friend bool operator==(const ExactProb& lhs, const ExactProb& rhs) = default;
    friend std::strong_ordering operator<=>(const ExactProb& lhs, const ExactProb& rhs) {
        return lhs.value_ <=> rhs.value_;
    }

private:
    Rational value_;
};

std::ostream& operator<<(std::ostream& os, const ExactProb& value);

/// Validated probability construction from a count ratio.
/// Requires den > 0 and 0 <= num <= den; throws ZeroDenominatorError or
/// OutOfRangeError otherwise.
ExactProb prob_ratio(const BigInt& num, const BigInt& den);

/// Binomial coefficient C(a, b) as a total function: 0 whenever b < 0, a < 0
/// or a < b, so formulas may be applied with out-of-range arguments and the
/// vanishing cases fall out on their own.
BigInt binom(long long a, long long b);

}  // namespace gapprob
