#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace collatz {

/// Arbitrary-precision non-negative integer.
///
/// Stored as little-endian base-2^64 limbs with no trailing zero limb
/// (an empty limb vector is zero). All operations are exact; subtraction
/// below zero throws. The two Collatz step primitives, halve() and
/// mul3_add1_halve(), are single passes over the limbs.
class BigInt {
 public:
  BigInt() = default;
  BigInt(uint64_t value);  // NOLINT: implicit by design, mirrors integer literals

  static BigInt from_decimal(std::string_view text);
  static BigInt from_hex(std::string_view text);
  static BigInt pow2(uint64_t exponent);
  static BigInt pow(const BigInt& base, uint64_t exponent);

  bool is_zero() const { return limbs_.empty(); }
  bool is_one() const { return limbs_.size() == 1 && limbs_[0] == 1; }
  bool is_odd() const { return !limbs_.empty() && (limbs_[0] & 1u); }
  bool is_even() const { return !is_odd(); }

  /// Number of bits in the binary representation; 0 for zero.
  uint64_t bit_length() const;
  bool bit(uint64_t index) const;
  void set_bit(uint64_t index);

  bool fits_u64() const { return limbs_.size() <= 1; }
  uint64_t to_u64() const;  // throws std::overflow_error if >= 2^64

  std::string to_decimal() const;
  std::string to_hex() const;  // lowercase, no 0x prefix

  BigInt& operator+=(const BigInt& rhs);
  BigInt& operator-=(const BigInt& rhs);  // throws std::underflow_error if rhs > *this
  BigInt& operator+=(uint64_t rhs);
  BigInt& operator-=(uint64_t rhs);

  BigInt& mul_u64(uint64_t factor);
  /// Divides in place by a nonzero single-limb divisor; returns the remainder.
  uint64_t divmod_u64(uint64_t divisor);

  BigInt& operator<<=(uint64_t bits);
  BigInt& operator>>=(uint64_t bits);

  /// x := x / 2 (floor). No-op on zero.
  void halve();
  /// x := (3x + 1) / 2. Requires x odd (so the division is exact).
  void mul3_add1_halve();

  /// Low `bits` bits, i.e. x mod 2^bits.
  BigInt low_bits(uint64_t bits) const;

  friend BigInt operator+(BigInt lhs, const BigInt& rhs) { lhs += rhs; return lhs; }
  friend BigInt operator-(BigInt lhs, const BigInt& rhs) { lhs -= rhs; return lhs; }
  friend BigInt operator*(const BigInt& lhs, const BigInt& rhs);
  friend BigInt operator<<(BigInt lhs, uint64_t bits) { lhs <<= bits; return lhs; }
  friend BigInt operator>>(BigInt lhs, uint64_t bits) { lhs >>= bits; return lhs; }

  friend std::strong_ordering operator<=>(const BigInt& lhs, const BigInt& rhs);
  friend bool operator==(const BigInt& lhs, const BigInt& rhs) = default;

 private:
  void normalize();

  std::vector<uint64_t> limbs_;
};

std::ostream& operator<<(std::ostream& os, const BigInt& value);

}  // namespace collatz
