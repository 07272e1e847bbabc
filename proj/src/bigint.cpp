#include "gapprob/bigint.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <stdexcept>

#include "gapprob/errors.hpp"

namespace gapprob {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
constexpr std::uint32_t kDecChunk = 1'000'000'000u;  // 10^9 fits a limb
constexpr int kDecChunkDigits = 9;
}  // namespace

BigInt::BigInt(long long value) {
    negative_ = value < 0;
    // Avoid UB on LLONG_MIN by widening before negation.
    auto mag = static_cast<std::uint64_t>(value);
    if (negative_) mag = ~mag + 1;
    while (mag != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffull));
        mag >>= 32;
    }
}

BigInt BigInt::from_string(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size()) throw std::invalid_argument("empty integer literal");
    BigInt result;
    for (; pos < text.size(); ) {
        std::uint32_t chunk = 0;
        std::uint32_t scale = 1;
        for (int i = 0; i < kDecChunkDigits && pos < text.size(); ++i, ++pos) {
            char c = text[pos];
            if (c < '0' || c > '9')
                throw std::invalid_argument("invalid digit in integer literal");
            chunk = chunk * 10 + static_cast<std::uint32_t>(c - '0');
            scale *= 10;
        }
        result.mul_small(scale);
        result += BigInt(static_cast<long long>(chunk));
    }
    result.negative_ = negative;
    result.normalize();
    return result;
}

BigInt BigInt::from_uint64(std::uint64_t value) {
    BigInt result;
    while (value != 0) {
        result.limbs_.push_back(static_cast<std::uint32_t>(value & 0xffffffffull));
        value >>= 32;
    }
    return result;
}

int BigInt::compare_magnitude(const std::vector<std::uint32_t>& a,
                              const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

void BigInt::add_magnitude(std::vector<std::uint32_t>& acc,
                           const std::vector<std::uint32_t>& rhs) {
    if (acc.size() < rhs.size()) acc.resize(rhs.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < acc.size(); ++i) {
        std::uint64_t sum = carry + acc[i] + (i < rhs.size() ? rhs[i] : 0);
        acc[i] = static_cast<std::uint32_t>(sum & 0xffffffffull);
        carry = sum >> 32;
    }
    if (carry != 0) acc.push_back(static_cast<std::uint32_t>(carry));
}

void BigInt::sub_magnitude(std::vector<std::uint32_t>& acc,
                           const std::vector<std::uint32_t>& rhs) {
    assert(compare_magnitude(acc, rhs) >= 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < acc.size(); ++i) {
        std::int64_t diff = static_cast<std::int64_t>(acc[i]) - borrow -
                            (i < rhs.size() ? static_cast<std::int64_t>(rhs[i]) : 0);
        if (diff < 0) {
            diff += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        acc[i] = static_cast<std::uint32_t>(diff);
    }
    trim(acc);
}

void BigInt::shift_left_one(std::vector<std::uint32_t>& mag) {
    std::uint32_t carry = 0;
    for (auto& limb : mag) {
        std::uint32_t next = limb >> 31;
        limb = (limb << 1) | carry;
        carry = next;
    }
    if (carry != 0) mag.push_back(carry);
}

void BigInt::trim(std::vector<std::uint32_t>& mag) {
    while (!mag.empty() && mag.back() == 0) mag.pop_back();
}

BigInt BigInt::abs() const {
    BigInt result = *this;
    result.negative_ = false;
    return result;
}

BigInt BigInt::operator-() const {
    BigInt result = *this;
    if (!result.is_zero()) result.negative_ = !result.negative_;
    return result;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    if (negative_ == rhs.negative_) {
        add_magnitude(limbs_, rhs.limbs_);
    } else if (compare_magnitude(limbs_, rhs.limbs_) >= 0) {
        sub_magnitude(limbs_, rhs.limbs_);
    } else {
        std::vector<std::uint32_t> mag = rhs.limbs_;
        sub_magnitude(mag, limbs_);
        limbs_ = std::move(mag);
        negative_ = rhs.negative_;
    }
    normalize();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) {
    // a - b = a + (-b); inline the sign flip to avoid a copy of rhs's limbs
    // in the common same-sign case.
    BigInt flipped = rhs;
    if (!flipped.is_zero()) flipped.negative_ = !flipped.negative_;
    return *this += flipped;
}

BigInt operator*(const BigInt& lhs, const BigInt& rhs) {
    BigInt result;
    if (lhs.is_zero() || rhs.is_zero()) return result;
    result.limbs_.assign(lhs.limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < lhs.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t multiplier = lhs.limbs_[i];
        for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
            // multiplier * limb + existing + carry < 2^64 exactly, no overflow.
            std::uint64_t cur = multiplier * rhs.limbs_[j] + result.limbs_[i + j] + carry;
            result.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffull);
            carry = cur >> 32;
        }
        std::size_t pos = i + rhs.limbs_.size();
        while (carry != 0) {
            std::uint64_t cur = result.limbs_[pos] + carry;
            result.limbs_[pos] = static_cast<std::uint32_t>(cur & 0xffffffffull);
            carry = cur >> 32;
            ++pos;
        }
    }
    result.negative_ = lhs.negative_ != rhs.negative_;
    result.normalize();
    return result;
}

BigInt& BigInt::operator*=(const BigInt& rhs) {
    *this = *this * rhs;
    return *this;
}

std::size_t BigInt::bit_length() const {
    if (limbs_.empty()) return 0;
    std::uint32_t top = limbs_.back();
    std::size_t bits = (limbs_.size() - 1) * 32;
    while (top != 0) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

bool BigInt::bit(std::size_t index) const {
    std::size_t limb = index / 32;
    if (limb >= limbs_.size()) return false;
    return (limbs_[limb] >> (index % 32)) & 1u;
}

BigIntDivMod BigInt::divmod(const BigInt& dividend, const BigInt& divisor) {
    if (divisor.is_zero()) throw ZeroDenominatorError();

    // Binary long division on magnitudes. O(bits(dividend) * limbs(divisor)),
    // plenty fast at this library's operand sizes.
    BigIntDivMod result;
    if (compare_magnitude(dividend.limbs_, divisor.limbs_) < 0) {
        result.remainder = dividend;
        return result;
    }

    std::size_t bits = dividend.bit_length();
    std::vector<std::uint32_t> quotient((bits + 31) / 32, 0);
    std::vector<std::uint32_t> remainder;
    remainder.reserve(divisor.limbs_.size() + 1);
    for (std::size_t i = bits; i-- > 0;) {
        shift_left_one(remainder);
        if (dividend.bit(i)) {
            if (remainder.empty()) remainder.push_back(1);
            else remainder[0] |= 1u;
        }
        if (compare_magnitude(remainder, divisor.limbs_) >= 0) {
            sub_magnitude(remainder, divisor.limbs_);
            quotient[i / 32] |= 1u << (i % 32);
        }
    }

    result.quotient.limbs_ = std::move(quotient);
    result.quotient.negative_ = dividend.negative_ != divisor.negative_;
    result.quotient.normalize();
    result.remainder.limbs_ = std::move(remainder);
    result.remainder.negative_ = dividend.negative_;
    result.remainder.normalize();
    return result;
}

BigInt& BigInt::mul_small(std::uint32_t factor) {
    if (factor == 0 || is_zero()) {
        limbs_.clear();
        negative_ = false;
        return *this;
    }
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
        std::uint64_t cur = static_cast<std::uint64_t>(limb) * factor + carry;
        limb = static_cast<std::uint32_t>(cur & 0xffffffffull);
        carry = cur >> 32;
    }
    if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

std::uint32_t BigInt::divmod_small(std::uint32_t divisor) {
    if (divisor == 0) throw ZeroDenominatorError();
    std::uint64_t remainder = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (remainder << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
        remainder = cur % divisor;
    }
    normalize();
    return static_cast<std::uint32_t>(remainder);
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.negative_ = false;
    b.negative_ = false;
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt BigInt::pow10(int exponent) {
    BigInt result(1);
    for (; exponent >= kDecChunkDigits; exponent -= kDecChunkDigits)
        result.mul_small(kDecChunk);
    std::uint32_t small = 1;
    for (int i = 0; i < exponent; ++i) small *= 10;
    result.mul_small(small);
    return result;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::string digits;
    BigInt work = *this;
    while (!work.is_zero()) {
        std::uint32_t chunk = work.divmod_small(kDecChunk);
        if (work.is_zero()) {
            digits.insert(0, std::to_string(chunk));
        } else {
            std::string part = std::to_string(chunk);
            digits.insert(0, std::string(kDecChunkDigits - part.size(), '0') + part);
        }
    }
    return negative_ ? "-" + digits : digits;
}

double BigInt::to_double() const {
    double value = 0.0;
    for (std::size_t i = limbs_.size(); i-- > 0;)
        value = value * 4294967296.0 + static_cast<double>(limbs_[i]);
    return negative_ ? -value : value;
}

std::uint64_t BigInt::to_uint64() const {
    if (!fits_uint64()) throw OutOfRangeError("value does not fit in 64 bits: " + to_string());
    std::uint64_t value = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) value = (value << 32) | limbs_[i];
    return value;
}

std::strong_ordering operator<=>(const BigInt& lhs, const BigInt& rhs) {
    if (lhs.negative_ != rhs.negative_)
        return lhs.negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
    int mag = BigInt::compare_magnitude(lhs.limbs_, rhs.limbs_);
    if (lhs.negative_) mag = -mag;
    return mag < 0   ? std::strong_ordering::less
           : mag > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const BigInt& value) {
    return os << value.to_string();
}

}  // namespace gapprob
