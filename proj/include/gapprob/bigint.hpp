#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace gapprob {

struct BigIntDivMod;

/// Arbitrary-precision signed integer, sign + magnitude in base 2^32.
///
/// The magnitude is stored little-endian with no trailing zero limbs; zero is
/// the empty limb vector with a non-negative sign, so every value has exactly
/// one representation. Schoolbook algorithms throughout: the counts this
/// library works with (up to C(10000, 500), ~860 decimal digits) are far below
/// the scale where asymptotics matter.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long value);  // NOLINT(google-explicit-constructor) intended implicit lift

    /// Parses an optionally signed decimal string. Throws std::invalid_argument
    /// on anything but [+-]?[0-9]+.
    static BigInt from_string(std::string_view text);

    static BigInt from_uint64(std::uint64_t value);

    bool is_zero() const { return limbs_.empty(); }
    /// -1, 0 or +1.
    int signum() const { return limbs_.empty() ? 0 : (negative_ ? -1 : 1); }
    bool is_negative() const { return negative_; }
    bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }

    BigInt abs() const;
    BigInt operator-() const;

    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);

    friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
    friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
    friend BigInt operator*(const BigInt& lhs, const BigInt& rhs);

    /// Truncated division (quotient rounds toward zero, remainder carries the
    /// dividend's sign, |remainder| < |divisor|). Throws ZeroDenominatorError
    /// when the divisor is zero.
    static BigIntDivMod divmod(const BigInt& dividend, const BigInt& divisor);

    /// In-place multiply by a small factor.
    BigInt& mul_small(std::uint32_t factor);
    /// In-place divide by a small positive divisor; returns the remainder of
    /// the magnitude division.
    std::uint32_t divmod_small(std::uint32_t divisor);

    /// Greatest common divisor of the magnitudes; gcd(0, 0) = 0.
    static BigInt gcd(BigInt a, BigInt b);

    /// 10^exponent.
    static BigInt pow10(int exponent);

    std::string to_string() const;
    /// Nearest double; overflows to +/-inf for huge magnitudes.
    double to_double() const;

    bool fits_uint64() const { return !negative_ && limbs_.size() <= 2; }
    /// Throws OutOfRangeError unless 0 <= *this < 2^64.
    std::uint64_t to_uint64() const;

    friend bool operator==(const BigInt& lhs, const BigInt& rhs) = default;
    friend std::strong_ordering operator<=>(const BigInt& lhs, const BigInt& rhs);

private:
    static int compare_magnitude(const std::vector<std::uint32_t>& a,
                                 const std::vector<std::uint32_t>& b);
    static void add_magnitude(std::vector<std::uint32_t>& acc,
                              const std::vector<std::uint32_t>& rhs);
    // Requires acc >= rhs as magnitudes.
    static void sub_magnitude(std::vector<std::uint32_t>& acc,
                              const std::vector<std::uint32_t>& rhs);
    static void shift_left_one(std::vector<std::uint32_t>& mag);
    static void trim(std::vector<std::uint32_t>& mag);

    std::size_t bit_length() const;
    bool bit(std::size_t index) const;

    void normalize() {
        trim(limbs_);
        if (limbs_.empty()) negative_ = false;  // canonical zero
    }

    bool negative_ = false;
    std::vector<std::uint32_t> limbs_;
};

struct BigIntDivMod {
    BigInt quotient;
    BigInt remainder;
};

inline BigInt operator/(const BigInt& lhs, const BigInt& rhs) {
    return BigInt::divmod(lhs, rhs).quotient;
}

inline BigInt operator%(const BigInt& lhs, const BigInt& rhs) {
    return BigInt::divmod(lhs, rhs).remainder;
}

std::ostream& operator<<(std::ostream& os, const BigInt& value);

}  // namespace gapprob
