#include "collatz/period.hpp"

#include <limits>
#include <string>

namespace collatz {

namespace {

// Candidate check on machine words: returns nullopt when y or an
// intermediate value risks overflowing 64 bits, in which case the caller
// retries with BigInt arithmetic.
std::optional<bool> reduced_word_matches_u64(uint64_t y, const Word& w) {
  constexpr uint64_t kSafe = (std::numeric_limits<uint64_t>::max() - 1) / 3;
  uint64_t cur = y;
  const std::string& text = w.text();
  for (size_t k = 0; k < text.size(); ++k) {
    const bool odd = (cur & 1) != 0;
    if ((text[k] == 'I') != odd) return false;
    if (odd) {
      if (cur > kSafe) return std::nullopt;
      cur = (3 * cur + 1) >> 1;
    } else {
      cur >>= 1;
    }
    if (cur < y) return k + 1 == text.size();
  }
  return false;
}

}  // namespace

PrimedValue PrimedValue::make(BigInt numerator, uint64_t denom_exp) {
  while (denom_exp > 0 && !numerator.is_zero() && numerator.is_even()) {
    numerator.halve();
    --denom_exp;
  }
  return PrimedValue{std::move(numerator), denom_exp};
}

const BigInt& PrimedValue::as_integer() const {
  if (denom_exp != 0)
    throw std::domain_error("primed value " + numerator.to_decimal() + "/2^" +
                            std::to_string(denom_exp) + " is not an integer");
  return numerator;
}

SeparationPreconditionError::SeparationPreconditionError(size_t prefix_len,
                                                         const std::string& what)
    : std::invalid_argument(what), prefix_len_(prefix_len) {}

BigInt period_of(const Word& w) {
  if (w.empty()) throw std::out_of_range("period of the empty word");
  return BigInt::pow2(w.size());
}

PrimedValue apply_primed(const Word& w, const BigInt& p) {
  if (w.empty()) return PrimedValue::make(p, 0);
  return PrimedValue::make(BigInt::pow(BigInt(3), w.cnt_i()) * p, w.size());
}

bool verify_separation(const BigInt& x, const Word& w, const BigInt& p) {
  if (x < BigInt(2)) throw std::domain_error("verify_separation requires x >= 2");
  if (w.empty()) throw std::out_of_range("empty word");
  // Hypothesis of the separation identity: the primed value of every proper
  // prefix of w applied to p must be an even integer (prefix length 0 means
  // p itself).
  if (p.is_odd())
    throw SeparationPreconditionError(0, "p = " + p.to_decimal() + " is odd");
  BigInt pow3(1);
  uint64_t cnt_i = 0;
  for (size_t j = 1; j < w.size(); ++j) {
    if (w.at(j - 1) == Transform::I) {
      pow3.mul_u64(3);
      ++cnt_i;
    }
    const PrimedValue value = PrimedValue::make(pow3 * p, j);
    if (!value.is_even_integer())
      throw SeparationPreconditionError(
          j, "primed prefix of length " + std::to_string(j) +
                 " applied to " + p.to_decimal() + " is not an even integer");
  }

  BigInt plain = x;
  BigInt shifted = x + p;
  for (size_t j = 0; j < w.size(); ++j) {
    if (plain.is_odd() != shifted.is_odd()) return false;
    const Transform t = w.at(j);
    if (!is_matched(plain, t)) throw MismatchError(j + 1, plain);
    if (t == Transform::I) {
      plain.mul3_add1_halve();
      shifted.mul3_add1_halve();
    } else {
      plain.halve();
      shifted.halve();
    }
    // value identity: (x+p after j+1 steps) = (x after j+1 steps) + s'(p)
    const PrimedValue primed = apply_primed(w.prefix(j + 1), p);
    if (!primed.is_integer()) return false;
    if (shifted != plain + primed.as_integer()) return false;
  }
  return true;
}

PeriodReport verify_period(const BigInt& x, uint64_t k_max, uint64_t step_cap) {
  const OrbitRecord base = reduced_dynamics(x, step_cap);
  PeriodReport report;
  report.x = x;
  report.word = base.word;
  report.period = period_of(base.word);
  report.all_equal = true;
  BigInt shifted = x;
  for (uint64_t k = 1; k <= k_max; ++k) {
    shifted += report.period;
    ++report.checked_ks;
    if (!reduced_word_matches(shifted, report.word, step_cap)) {
      report.all_equal = false;
      break;
    }
  }
  return report;
}

std::optional<BigInt> minimal_period_bruteforce_bounded(const BigInt& x,
                                                        uint64_t step_cap,
                                                        uint64_t max_candidates) {
  const Word word = reduced_dynamics(x, step_cap).word;
  const bool small = x.fits_u64();
  const uint64_t base = small ? x.to_u64() : 0;
  BigInt candidate = x;
  for (uint64_t p = 1; max_candidates == 0 || p <= max_candidates; ++p) {
    candidate += 1;
    bool matched;
    // fast path while x + p fits comfortably in 64 bits
    if (small && base <= std::numeric_limits<uint64_t>::max() - p) {
      if (auto r = reduced_word_matches_u64(base + p, word)) {
        matched = *r;
      } else {
        matched = reduced_word_matches(candidate, word, step_cap);
      }
    } else {
      matched = reduced_word_matches(candidate, word, step_cap);
    }
    if (matched) return candidate - x;
    if (p == std::numeric_limits<uint64_t>::max()) break;  // unreachable in practice
  }
  return std::nullopt;
}

BigInt minimal_period_bruteforce(const BigInt& x, uint64_t step_cap) {
  auto result = minimal_period_bruteforce_bounded(x, step_cap, 0);
  return *result;  // the search is total: 2^|d_r(x)| always matches
}

}  // namespace collatz
