#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "gapprob/bigint.hpp"
#include "gapprob/errors.hpp"
#include "gapprob/exact.hpp"
#include "support.hpp"

using gapprob::BigInt;

TEST_CASE("small integer round trips") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(42).to_string() == "42");
    CHECK(BigInt(-42).to_string() == "-42");
    CHECK(BigInt(1ll << 40).to_string() == "1099511627776");
    CHECK(BigInt::from_string("-000123").to_string() == "-123");
    CHECK(BigInt::from_string("+17") == BigInt(17));
    CHECK(BigInt::from_string("18446744073709551616").to_string() == "18446744073709551616");
    CHECK_THROWS_AS(BigInt::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(BigInt::from_string("12x4"), std::invalid_argument);
    CHECK_THROWS_AS(BigInt::from_string("-"), std::invalid_argument);
}

TEST_CASE("canonical zero") {
    BigInt a(5);
    BigInt b(-5);
    BigInt z = a + b;
    CHECK(z.is_zero());
    CHECK(z.signum() == 0);
    CHECK(z == BigInt(0));
    CHECK((-z) == z);
    CHECK(z.to_string() == "0");
}

TEST_CASE("addition and subtraction across limb boundaries") {
    BigInt max32 = BigInt::from_string("4294967295");
    CHECK((max32 + BigInt(1)).to_string() == "4294967296");
    BigInt big = BigInt::from_string("10000000000000000000000000000000000000000");
    CHECK((big - BigInt(1)).to_string() == "9999999999999999999999999999999999999999");
    CHECK((big - big).is_zero());
    CHECK((BigInt(0) - big).to_string() == "-10000000000000000000000000000000000000000");
    // borrow chain through every limb
    BigInt a = BigInt::from_string("9999999999999999999999999999999999999999");
    BigInt b = BigInt::from_string("9999999999999999999999999999999999999998");
    CHECK((a - b) == BigInt(1));
}

TEST_CASE("multiplication matches precomputed products") {
    BigInt max32 = BigInt::from_string("4294967295");
    CHECK((max32 * max32 * max32).to_string() == "79228162458924105385300197375");
    BigInt two128 = BigInt(1);
    for (int i = 0; i < 128; ++i) two128 += two128;
    CHECK(two128.to_string() == "340282366920938463463374607431768211456");
    BigInt x = BigInt::from_string("10000000000000000000000007");
    BigInt y = BigInt::from_string("10000000000000000011");
    CHECK((x * y).to_string() == "100000000000000000110000070000000000000000077");
    CHECK((x * BigInt(0)).is_zero());
    CHECK((x * BigInt(-1)) == -x);
}

TEST_CASE("divmod truncates toward zero") {
    auto [q, r] = BigInt::divmod(BigInt(7), BigInt(2));
    CHECK(q == BigInt(3));
    CHECK(r == BigInt(1));
    auto [qn, rn] = BigInt::divmod(BigInt(-7), BigInt(2));
    CHECK(qn == BigInt(-3));
    CHECK(rn == BigInt(-1));
    auto [qd, rd] = BigInt::divmod(BigInt(7), BigInt(-2));
    CHECK(qd == BigInt(-3));
    CHECK(rd == BigInt(1));
    CHECK_THROWS_AS(BigInt::divmod(BigInt(1), BigInt(0)), gapprob::ZeroDenominatorError);
}

TEST_CASE("divmod of large values matches precomputed result") {
    BigInt x = BigInt::pow10(40) + BigInt(12345);
    BigInt y = BigInt::pow10(20) - BigInt(3);
    auto [q, r] = BigInt::divmod(x, y);
    CHECK(q.to_string() == "100000000000000000003");
    CHECK(r.to_string() == "12354");
    CHECK(q * y + r == x);
}

TEST_CASE("divmod reconstruction on pseudo-random operands") {
    // a = q*b + r, |r| < |b|, sign(r) == sign(a); exercised across many limb sizes.
    for (std::uint64_t i = 1; i <= 300; ++i) {
        BigInt a(1);
        BigInt b(1);
        int alimbs = 1 + static_cast<int>(i % 7);
        int blimbs = 1 + static_cast<int>((i / 7) % 5);
        for (int l = 0; l < alimbs; ++l)
            a = a * BigInt::from_string("4294967296") +
                BigInt(static_cast<long long>(testsupport::mix64(i * 31 + static_cast<std::uint64_t>(l)) & 0xffffffffull));
        for (int l = 0; l < blimbs; ++l)
            b = b * BigInt::from_string("4294967296") +
                BigInt(static_cast<long long>(testsupport::mix64(i * 77 + static_cast<std::uint64_t>(l)) & 0xffffffffull));
        if (i % 3 == 0) a = -a;
        if (i % 5 == 0) b = -b;
        auto [q, r] = BigInt::divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.is_negative() == a.is_negative());
    }
}

TEST_CASE("gcd") {
    CHECK(BigInt::gcd(BigInt(12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(-12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(0), BigInt(7)) == BigInt(7));
    CHECK(BigInt::gcd(BigInt(0), BigInt(0)) == BigInt(0));
    // gcd(C(100,50), C(100,48)), precomputed independently
    testsupport::PascalTable pascal(100);
    BigInt g = BigInt::gcd(pascal.get(100, 50), pascal.get(100, 48));
    CHECK(g.to_string() == "76086986836775409754760556");
}

TEST_CASE("comparisons order mixed signs") {
    CHECK(BigInt(-2) < BigInt(1));
    CHECK(BigInt(-2) < BigInt(-1));
    CHECK(BigInt(3) > BigInt(2));
    CHECK(BigInt::pow10(30) > BigInt::pow10(29));
    CHECK(-BigInt::pow10(30) < -BigInt::pow10(29));
    CHECK(BigInt(0) > BigInt(-1));
}

TEST_CASE("to_uint64 bounds") {
    CHECK(BigInt::from_string("18446744073709551615").to_uint64() == 18446744073709551615ull);
    CHECK_THROWS_AS(BigInt::from_string("18446744073709551616").to_uint64(),
                    gapprob::OutOfRangeError);
    CHECK_THROWS_AS(BigInt(-1).to_uint64(), gapprob::OutOfRangeError);
}

TEST_CASE("C(10000,500) is representable and renders correctly") {
    // The widest value the library must carry; digits precomputed independently.
    BigInt c = gapprob::binom(10000, 500);
    std::string s = c.to_string();
    CHECK(s.size() == 861);
    CHECK(s.substr(0, 30) == "253068607883683954250099965181");
    CHECK(s.substr(s.size() - 30) == "754086591627180812730710494080");
}
