#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "collatz/bigint.hpp"
#include "collatz/dynamics.hpp"
#include "collatz/word.hpp"

namespace collatz {

/// Exact value numerator / 2^denom_exp. Kept normalized so that either
/// denom_exp = 0 or the numerator is odd; the value is an integer exactly
/// when denom_exp = 0.
struct PrimedValue {
  BigInt numerator;
  uint64_t denom_exp = 0;

  static PrimedValue make(BigInt numerator, uint64_t denom_exp);

  bool is_integer() const { return denom_exp == 0; }
  bool is_even_integer() const { return denom_exp == 0 && numerator.is_even(); }
  /// The integer value; throws std::domain_error when denom_exp > 0.
  const BigInt& as_integer() const;

  friend bool operator==(const PrimedValue&, const PrimedValue&) = default;
};

/// Result of checking d_r(x + k * 2^L) = d_r(x) for k = 1..checked_ks.
struct PeriodReport {
  BigInt x;
  Word word;
  BigInt period;
  uint64_t checked_ks = 0;
  bool all_equal = false;
};

/// The separation-identity preconditions do not hold for the given inputs.
class SeparationPreconditionError : public std::invalid_argument {
 public:
  SeparationPreconditionError(size_t prefix_len, const std::string& what);
  /// Length of the prefix whose primed value is not an even integer.
  size_t prefix_len() const { return prefix_len_; }

 private:
  size_t prefix_len_;
};

/// 2^|w|, the period attached to a reduced word.
BigInt period_of(const Word& w);

/// Value of the primed word (every I replaced by I': x -> 3x/2) applied to
/// p: exactly 3^cnt_i(w) * p / 2^|w|. The empty word returns p.
PrimedValue apply_primed(const Word& w, const BigInt& p);

/// Checks the separation identity along w: for every step j the parity of
/// the j-step value of x+p equals that of x, and the (j+1)-step values
/// differ exactly by the primed prefix value of p. Requires p even and
/// every proper-prefix primed value of p an even integer (throws
/// SeparationPreconditionError otherwise; throws MismatchError if w does
/// not apply to x).
bool verify_separation(const BigInt& x, const Word& w, const BigInt& p);

/// Computes w = d_r(x) and P = 2^|w|, then checks d_r(x + k*P) = w for
/// k = 1..k_max, stopping at the first mismatch.
PeriodReport verify_period(const BigInt& x, uint64_t k_max = 3,
                           uint64_t step_cap = kDefaultReducedStepCap);

/// Smallest P >= 1 with d_r(x+P) = d_r(x), found by linear search. The
/// search is total because 2^|d_r(x)| is guaranteed to match, but it
/// visits every candidate below the answer: 2^|d_r(x)| - 1 of them, which
/// is only practical for short words.
BigInt minimal_period_bruteforce(const BigInt& x,
                                 uint64_t step_cap = kDefaultReducedStepCap);

/// Budgeted variant: gives up and returns nullopt after trying
/// max_candidates values of P without a match.
std::optional<BigInt> minimal_period_bruteforce_bounded(
    const BigInt& x, uint64_t step_cap, uint64_t max_candidates);

}  // namespace collatz
