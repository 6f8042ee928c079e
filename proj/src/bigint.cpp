#include "collatz/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <ostream>
#include <stdexcept>

namespace collatz {

using u128 = unsigned __int128;

namespace {
// Largest power of ten below 2^64, used to chunk decimal conversion.
constexpr uint64_t kDecStep = 10'000'000'000'000'000'000ull;  // 10^19
constexpr unsigned kDecDigits = 19;
}  // namespace

BigInt::BigInt(uint64_t value) {
  if (value != 0) limbs_.push_back(value);
}

void BigInt::normalize() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigInt BigInt::from_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty decimal string");
  BigInt result;
  size_t pos = 0;
  while (pos < text.size()) {
    const size_t take = std::min<size_t>(kDecDigits, text.size() - pos);
    uint64_t chunk = 0;
    uint64_t scale = 1;
    for (size_t i = 0; i < take; ++i) {
      const char c = text[pos + i];
      if (c < '0' || c > '9')
        throw std::invalid_argument("invalid decimal digit at position " +
                                    std::to_string(pos + i));
      chunk = chunk * 10 + static_cast<uint64_t>(c - '0');
      scale *= 10;
    }
    result.mul_u64(scale);
    result += chunk;
    pos += take;
  }
  return result;
}

BigInt BigInt::from_hex(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty hex string");
  const auto digit_of = [&](size_t i) -> uint64_t {
    const char c = text[i];
    if (c >= '0' && c <= '9') return static_cast<uint64_t>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<uint64_t>(c - 'a') + 10;
    if (c >= 'A' && c <= 'F') return static_cast<uint64_t>(c - 'A') + 10;
    throw std::invalid_argument("invalid hex digit at position " +
                                std::to_string(i));
  };
  BigInt result;
  size_t end = text.size();
  while (end > 0) {  // 16 hex digits per limb, right to left
    const size_t begin = end >= 16 ? end - 16 : 0;
    uint64_t limb = 0;
    for (size_t i = begin; i < end; ++i) limb = (limb << 4) | digit_of(i);
    result.limbs_.push_back(limb);
    end = begin;
  }
  result.normalize();
  return result;
}

BigInt BigInt::pow2(uint64_t exponent) {
  BigInt result(1);
  result <<= exponent;
  return result;
}

BigInt BigInt::pow(const BigInt& base, uint64_t exponent) {
  BigInt result(1);
  BigInt square = base;
  while (exponent != 0) {
    if (exponent & 1) result = result * square;
    exponent >>= 1;
    if (exponent != 0) square = square * square;
  }
  return result;
}

uint64_t BigInt::bit_length() const {
  if (limbs_.empty()) return 0;
  return 64 * (limbs_.size() - 1) +
         (64 - static_cast<uint64_t>(std::countl_zero(limbs_.back())));
}

bool BigInt::bit(uint64_t index) const {
  const size_t limb = index / 64;
  if (limb >= limbs_.size()) return false;
  return (limbs_[limb] >> (index % 64)) & 1u;
}

void BigInt::set_bit(uint64_t index) {
  const size_t limb = index / 64;
  if (limb >= limbs_.size()) limbs_.resize(limb + 1, 0);
  limbs_[limb] |= uint64_t{1} << (index % 64);
}

uint64_t BigInt::to_u64() const {
  if (limbs_.size() > 1) throw std::overflow_error("BigInt does not fit in 64 bits");
  return limbs_.empty() ? 0 : limbs_[0];
}

std::string BigInt::to_decimal() const {
  if (limbs_.empty()) return "0";
  BigInt scratch = *this;
  std::string digits;  // little-endian decimal digits
  while (!scratch.limbs_.empty()) {
    uint64_t rem = scratch.divmod_u64(kDecStep);
    const bool last = scratch.limbs_.empty();
    for (unsigned i = 0; i < kDecDigits; ++i) {
      digits.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
      if (last && rem == 0) break;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::string BigInt::to_hex() const {
  if (limbs_.empty()) return "0";
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(limbs_.size() * 16);
  for (size_t i = limbs_.size(); i-- > 0;) {
    for (int shift = 60; shift >= 0; shift -= 4)
      hex.push_back(kDigits[(limbs_[i] >> shift) & 0xF]);
  }
  const size_t first = hex.find_first_not_of('0');
  return hex.substr(first);  // at least one nonzero digit exists
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
  if (rhs.limbs_.size() > limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < limbs_.size(); ++i) {
    u128 t = static_cast<u128>(limbs_[i]) + carry;
    if (i < rhs.limbs_.size()) t += rhs.limbs_[i];
    limbs_[i] = static_cast<uint64_t>(t);
    carry = static_cast<uint64_t>(t >> 64);
    if (carry == 0 && i >= rhs.limbs_.size()) return *this;
  }
  if (carry) limbs_.push_back(carry);
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) {
  if (rhs.limbs_.size() > limbs_.size())
    throw std::underflow_error("BigInt subtraction below zero");
  uint64_t borrow = 0;
  for (size_t i = 0; i < limbs_.size(); ++i) {
    const uint64_t sub = (i < rhs.limbs_.size() ? rhs.limbs_[i] : 0);
    const uint64_t before = limbs_[i];
    const uint64_t mid = before - sub;
    const uint64_t after = mid - borrow;
    borrow = (before < sub) || (mid < borrow) ? 1 : 0;
    limbs_[i] = after;
    if (borrow == 0 && i >= rhs.limbs_.size()) break;
  }
  if (borrow) throw std::underflow_error("BigInt subtraction below zero");
  normalize();
  return *this;
}

BigInt& BigInt::operator+=(uint64_t rhs) {
  uint64_t carry = rhs;
  for (size_t i = 0; carry != 0 && i < limbs_.size(); ++i) {
    u128 t = static_cast<u128>(limbs_[i]) + carry;
    limbs_[i] = static_cast<uint64_t>(t);
    carry = static_cast<uint64_t>(t >> 64);
  }
  if (carry) limbs_.push_back(carry);
  return *this;
}

BigInt& BigInt::operator-=(uint64_t rhs) {
  return *this -= BigInt(rhs);
}

BigInt& BigInt::mul_u64(uint64_t factor) {
  if (factor == 0) {
    limbs_.clear();
    return *this;
  }
  uint64_t carry = 0;
  for (auto& limb : limbs_) {
    u128 t = static_cast<u128>(limb) * factor + carry;
    limb = static_cast<uint64_t>(t);
    carry = static_cast<uint64_t>(t >> 64);
  }
  if (carry) limbs_.push_back(carry);
  return *this;
}

uint64_t BigInt::divmod_u64(uint64_t divisor) {
  if (divisor == 0) throw std::domain_error("division by zero");
  uint64_t rem = 0;
  for (size_t i = limbs_.size(); i-- > 0;) {
    u128 cur = (static_cast<u128>(rem) << 64) | limbs_[i];
    limbs_[i] = static_cast<uint64_t>(cur / divisor);
    rem = static_cast<uint64_t>(cur % divisor);
  }
  normalize();
  return rem;
}

BigInt& BigInt::operator<<=(uint64_t bits) {
  if (limbs_.empty() || bits == 0) return *this;
  const size_t limb_shift = bits / 64;
  const unsigned bit_shift = bits % 64;
  const size_t old_size = limbs_.size();
  limbs_.resize(old_size + limb_shift + (bit_shift ? 1 : 0), 0);
  if (bit_shift == 0) {
    for (size_t i = old_size; i-- > 0;) limbs_[i + limb_shift] = limbs_[i];
  } else {
    for (size_t i = old_size; i-- > 0;) {
      const uint64_t hi = limbs_[i] >> (64 - bit_shift);
      limbs_[i + limb_shift + 1] |= hi;
      limbs_[i + limb_shift] = limbs_[i] << bit_shift;
    }
  }
  for (size_t i = 0; i < limb_shift; ++i) limbs_[i] = 0;
  normalize();
  return *this;
}

BigInt& BigInt::operator>>=(uint64_t bits) {
  if (limbs_.empty() || bits == 0) return *this;
  const size_t limb_shift = bits / 64;
  const unsigned bit_shift = bits % 64;
  if (limb_shift >= limbs_.size()) {
    limbs_.clear();
    return *this;
  }
  const size_t new_size = limbs_.size() - limb_shift;
  if (bit_shift == 0) {
    for (size_t i = 0; i < new_size; ++i) limbs_[i] = limbs_[i + limb_shift];
  } else {
    for (size_t i = 0; i < new_size; ++i) {
      uint64_t lo = limbs_[i + limb_shift] >> bit_shift;
      if (i + limb_shift + 1 < limbs_.size())
        lo |= limbs_[i + limb_shift + 1] << (64 - bit_shift);
      limbs_[i] = lo;
    }
  }
  limbs_.resize(new_size);
  normalize();
  return *this;
}

void BigInt::halve() {
  if (limbs_.empty()) return;
  for (size_t i = 0; i + 1 < limbs_.size(); ++i)
    limbs_[i] = (limbs_[i] >> 1) | (limbs_[i + 1] << 63);
  limbs_.back() >>= 1;
  normalize();
}

void BigInt::mul3_add1_halve() {
  assert(is_odd());
  // One forward pass: accumulate 3x+1 limb by limb and fold the halving in
  // by stitching each limb's low bit onto the previous limb's top bit.
  u128 acc = 1;
  uint64_t prev = 0;
  for (size_t i = 0; i < limbs_.size(); ++i) {
    acc += static_cast<u128>(limbs_[i]) * 3;
    const uint64_t cur = static_cast<uint64_t>(acc);
    acc >>= 64;
    if (i > 0) limbs_[i - 1] = (prev >> 1) | (cur << 63);
    prev = cur;
  }
  const uint64_t carry = static_cast<uint64_t>(acc);  // at most 2
  limbs_.back() = (prev >> 1) | ((carry & 1) << 63);
  if (carry >> 1) limbs_.push_back(carry >> 1);
  normalize();
}

BigInt BigInt::low_bits(uint64_t bits) const {
  BigInt result;
  const size_t full = bits / 64;
  const unsigned partial = bits % 64;
  const size_t take = std::min(limbs_.size(), full + (partial ? 1 : 0));
  result.limbs_.assign(limbs_.begin(), limbs_.begin() + take);
  if (partial && take == full + 1)
    result.limbs_.back() &= (uint64_t{1} << partial) - 1;
  result.normalize();
  return result;
}

BigInt operator*(const BigInt& lhs, const BigInt& rhs) {
  if (lhs.limbs_.empty() || rhs.limbs_.empty()) return {};
  BigInt result;
  result.limbs_.assign(lhs.limbs_.size() + rhs.limbs_.size(), 0);
  for (size_t i = 0; i < lhs.limbs_.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < rhs.limbs_.size(); ++j) {
      u128 t = static_cast<u128>(lhs.limbs_[i]) * rhs.limbs_[j] +
               result.limbs_[i + j] + carry;
      result.limbs_[i + j] = static_cast<uint64_t>(t);
      carry = static_cast<uint64_t>(t >> 64);
    }
    result.limbs_[i + rhs.limbs_.size()] = carry;
  }
  result.normalize();
  return result;
}

std::strong_ordering operator<=>(const BigInt& lhs, const BigInt& rhs) {
  if (lhs.limbs_.size() != rhs.limbs_.size())
    return lhs.limbs_.size() <=> rhs.limbs_.size();
  for (size_t i = lhs.limbs_.size(); i-- > 0;) {
    if (lhs.limbs_[i] != rhs.limbs_[i]) return lhs.limbs_[i] <=> rhs.limbs_[i];
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const BigInt& value) {
  return os << value.to_decimal();
}

}  // namespace collatz
