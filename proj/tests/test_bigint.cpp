#include <doctest.h>

#include <random>
#include <stdexcept>

#include "collatz/bigint.hpp"

using collatz::BigInt;

namespace {

BigInt random_bigint(std::mt19937_64& rng, int limbs) {
  BigInt value(rng());
  for (int i = 1; i < limbs; ++i) {
    value <<= 64;
    value += BigInt(rng());
  }
  return value;
}

}  // namespace

TEST_SUITE("bigint") {

TEST_CASE("decimal round trip") {
  CHECK(BigInt(0).to_decimal() == "0");
  CHECK(BigInt(1).to_decimal() == "1");
  CHECK(BigInt(18446744073709551615ull).to_decimal() == "18446744073709551615");
  CHECK(BigInt::from_decimal("18446744073709551616").to_decimal() ==
        "18446744073709551616");  // 2^64
  CHECK(BigInt::from_decimal("0").is_zero());
  CHECK(BigInt::from_decimal("007") == BigInt(7));

  std::mt19937_64 rng(12345);
  for (int i = 0; i < 200; ++i) {
    const BigInt value = random_bigint(rng, 1 + static_cast<int>(rng() % 6));
    CHECK(BigInt::from_decimal(value.to_decimal()) == value);
  }
}

TEST_CASE("hex round trip") {
  CHECK(BigInt(0).to_hex() == "0");
  CHECK(BigInt(255).to_hex() == "ff");
  CHECK(BigInt::from_hex("Ff") == BigInt(255));
  CHECK(BigInt::from_hex("10000000000000000") == BigInt::pow2(64));
  CHECK_THROWS_AS(BigInt::from_hex(""), std::invalid_argument);
  CHECK_THROWS_AS(BigInt::from_hex("12g"), std::invalid_argument);
  std::mt19937_64 rng(77);
  for (int i = 0; i < 200; ++i) {
    const BigInt value = random_bigint(rng, 1 + static_cast<int>(rng() % 6));
    CHECK(BigInt::from_hex(value.to_hex()) == value);
  }
}

TEST_CASE("decimal parse rejects junk") {
  CHECK_THROWS_AS(BigInt::from_decimal(""), std::invalid_argument);
  CHECK_THROWS_AS(BigInt::from_decimal("12a3"), std::invalid_argument);
  CHECK_THROWS_AS(BigInt::from_decimal("-5"), std::invalid_argument);
  CHECK_THROWS_AS(BigInt::from_decimal(" 5"), std::invalid_argument);
}

TEST_CASE("known powers") {
  CHECK(BigInt::pow(BigInt(3), 0) == BigInt(1));
  CHECK(BigInt::pow(BigInt(3), 5) == BigInt(243));
  CHECK(BigInt::pow(BigInt(3), 100).to_decimal() ==
        "515377520732011331036461129765621272702107522001");
  CHECK(BigInt::pow2(10) == BigInt(1024));
  CHECK(BigInt::pow2(100).to_decimal() == "1267650600228229401496703205376");
  CHECK(BigInt::pow2(100000).bit_length() == 100001);
  CHECK((BigInt::pow2(100000) - BigInt(1)).bit_length() == 100000);
  CHECK((BigInt::pow2(100000) - BigInt(1)).is_odd());
}

TEST_CASE("addition and subtraction against 128-bit arithmetic") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 500; ++i) {
    const uint64_t a = rng(), b = rng();
    const unsigned __int128 sum = static_cast<unsigned __int128>(a) + b;
    BigInt big = BigInt(a) + BigInt(b);
    CHECK(big.low_bits(64).to_u64() == static_cast<uint64_t>(sum));
    CHECK((big >> 64).to_u64() == static_cast<uint64_t>(sum >> 64));
    big -= BigInt(b);
    CHECK(big == BigInt(a));
  }
}

TEST_CASE("subtraction below zero throws") {
  BigInt small(5);
  CHECK_THROWS_AS(small -= BigInt(6), std::underflow_error);
  BigInt big = BigInt::pow2(64);
  CHECK((big - BigInt(1)).to_decimal() == "18446744073709551615");
  CHECK_THROWS_AS(BigInt(0) - BigInt(1), std::underflow_error);
}

TEST_CASE("small-integer operators carry across limbs") {
  BigInt carry = BigInt::pow2(64) - BigInt(1);
  carry += 1;
  CHECK(carry == BigInt::pow2(64));
  carry -= 1;
  CHECK(carry == BigInt::pow2(64) - BigInt(1));
  BigInt self = BigInt::pow2(64) + BigInt(9);
  self += self;
  CHECK(self == BigInt::pow2(65) + BigInt(18));
  self -= self;
  CHECK(self.is_zero());
}

TEST_CASE("multiplication against 128-bit arithmetic") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const uint64_t a = rng(), b = rng();
    const unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
    const BigInt big = BigInt(a) * BigInt(b);
    CHECK(big.low_bits(64).to_u64() == static_cast<uint64_t>(prod));
    CHECK((big >> 64).to_u64() == static_cast<uint64_t>(prod >> 64));
  }
  CHECK((BigInt(0) * BigInt(5)).is_zero());
  // (2^64 - 1)^2 = 2^128 - 2^65 + 1
  const BigInt m = BigInt::pow2(64) - BigInt(1);
  CHECK(m * m == BigInt::pow2(128) - BigInt::pow2(65) + BigInt(1));
}

TEST_CASE("shifts") {
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 200; ++i) {
    const BigInt value = random_bigint(rng, 3);
    const uint64_t bits = rng() % 130;
    CHECK(((value << bits) >> bits) == value);
  }
  CHECK((BigInt(1) << 200).bit_length() == 201);
  CHECK((BigInt(5) >> 10).is_zero());
  BigInt x(6);
  x.halve();
  CHECK(x == BigInt(3));
  BigInt zero;
  zero.halve();
  CHECK(zero.is_zero());
}

TEST_CASE("mul3_add1_halve matches the two-pass route") {
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 500; ++i) {
    BigInt value = random_bigint(rng, 1 + static_cast<int>(rng() % 5));
    if (value.is_even()) value += 1;
    BigInt expected = value;
    expected.mul_u64(3);
    expected += 1;
    expected.halve();
    BigInt fused = value;
    fused.mul3_add1_halve();
    CHECK(fused == expected);
  }
  BigInt one(1);
  one.mul3_add1_halve();
  CHECK(one == BigInt(2));
}

TEST_CASE("bit access and low_bits") {
  const BigInt value = BigInt::from_decimal("1361129467683753853853498429727072845856");  // 2^130 + 2^5
  CHECK(value.bit(130));
  CHECK(value.bit(5));
  CHECK_FALSE(value.bit(64));
  CHECK(value.low_bits(6) == BigInt(32));
  CHECK(value.low_bits(131) == value);
  BigInt built;
  built.set_bit(130);
  built.set_bit(5);
  CHECK(built == value);
}

TEST_CASE("divmod_u64") {
  BigInt value = BigInt::from_decimal("123456789012345678901234567890");
  CHECK(value.divmod_u64(10) == 0);
  CHECK(value.to_decimal() == "12345678901234567890123456789");
  CHECK(value.divmod_u64(1000000007) == 419743487);
  CHECK_THROWS_AS(BigInt(1).divmod_u64(0), std::domain_error);
}

TEST_CASE("comparisons") {
  CHECK(BigInt(2) < BigInt(3));
  CHECK(BigInt::pow2(64) > BigInt(18446744073709551615ull));
  CHECK(BigInt(5) == BigInt(5));
  CHECK(BigInt(0) < BigInt(1));
  std::mt19937_64 rng(55);
  for (int i = 0; i < 200; ++i) {
    const uint64_t a = rng() % 1000, b = rng() % 1000;
    CHECK((BigInt(a) < BigInt(b)) == (a < b));
    CHECK((BigInt(a) == BigInt(b)) == (a == b));
  }
}

TEST_CASE("to_u64 bounds") {
  CHECK(BigInt(0).to_u64() == 0);
  CHECK(BigInt(17).fits_u64());
  CHECK_FALSE(BigInt::pow2(64).fits_u64());
  CHECK_THROWS_AS(BigInt::pow2(64).to_u64(), std::overflow_error);
}

}  // TEST_SUITE
