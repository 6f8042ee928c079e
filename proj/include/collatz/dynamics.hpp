#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "collatz/bigint.hpp"
#include "collatz/word.hpp"

namespace collatz {

inline constexpr uint64_t kDefaultReducedStepCap = 10'000'000;     // 1e7
inline constexpr uint64_t kDefaultOriginalStepCap = 100'000'000;   // 1e8

/// One computed dynamics: the word applied to `start` yields `final_value`.
/// When present, trace[k] is the value after k transforms (trace[0] = start).
struct OrbitRecord {
  BigInt start;
  Word word;
  BigInt final_value;
  std::optional<std::vector<BigInt>> trace;
};

/// Step counts of an original dynamics: stopping_time is the number of
/// shortcut-map steps (= |word|), cnt_3x1 the number of I steps, and
/// cnt_half_total the total number of x/2 operations (each I and each O
/// contributes one halving, so cnt_half_total = |word| as well).
struct StoppingInfo {
  uint64_t stopping_time = 0;
  uint64_t cnt_3x1 = 0;
  uint64_t cnt_half_total = 0;
};

/// A transform did not match the parity of the value it was applied to.
class MismatchError : public std::runtime_error {
 public:
  MismatchError(size_t step, BigInt value);
  /// 1-based index of the offending transform.
  size_t step() const { return step_; }
  const BigInt& value() const { return value_; }

 private:
  size_t step_;
  BigInt value_;
};

/// The iteration did not finish within the step cap. For reduced dynamics
/// this flags a potential counterexample; it is never silently swallowed.
class CapExceededError : public std::runtime_error {
 public:
  CapExceededError(BigInt start, uint64_t cap);
  const BigInt& start() const { return start_; }
  uint64_t cap() const { return cap_; }

 private:
  BigInt start_;
  uint64_t cap_;
};

/// One shortcut-map step: odd x -> ((3x+1)/2, I), even x -> (x/2, O).
/// Throws std::domain_error for x = 0.
std::pair<BigInt, Transform> collatz_step(const BigInt& x);

/// Whether transform t matches the parity of x (I needs odd, O needs even).
bool is_matched(const BigInt& x, Transform t);

/// Applies w to x left to right, checking the parity match at every step.
/// The empty word is the identity. Throws MismatchError on the first
/// mismatched step, std::domain_error for x = 0.
OrbitRecord apply_word(const Word& w, const BigInt& x, bool keep_trace = false);

/// Reduced dynamics d_r(x): iterates the shortcut map until the first value
/// strictly below x. Requires x >= 2 (throws std::domain_error otherwise).
OrbitRecord reduced_dynamics(const BigInt& x,
                             uint64_t step_cap = kDefaultReducedStepCap,
                             bool keep_trace = false);

/// Length of d_r(x) without materializing the word. Same contract as
/// reduced_dynamics; this is the sieve's hot path.
uint64_t reduced_dynamics_length(const BigInt& x,
                                 uint64_t step_cap = kDefaultReducedStepCap);

/// Whether d_r(y) equals w, comparing transform by transform with early
/// exit. Throws CapExceededError only if the orbit of y outruns both the
/// word and the cap.
bool reduced_word_matches(const BigInt& y, const Word& w,
                          uint64_t step_cap = kDefaultReducedStepCap);

/// Original dynamics d(x): iterates to the first occurrence of 1.
/// x = 1 yields the empty word and stopping time 0.
std::pair<OrbitRecord, StoppingInfo> original_dynamics(
    const BigInt& x, uint64_t step_cap = kDefaultOriginalStepCap,
    bool keep_trace = false);

}  // namespace collatz
