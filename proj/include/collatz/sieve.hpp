#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "collatz/bigint.hpp"
#include "collatz/dynamics.hpp"

namespace collatz {

/// An integer whose reduced dynamics could not be established.
struct RangeFailure {
  BigInt x;
  std::string reason;

  friend bool operator==(const RangeFailure&, const RangeFailure&) = default;
};

/// Aggregated result of verifying reduced dynamics over [lo, hi].
struct RangeReport {
  BigInt lo;
  BigInt hi;
  uint64_t verified_count = 0;
  uint64_t max_word_len = 0;
  std::map<uint64_t, uint64_t> length_histogram;
  std::vector<RangeFailure> failures;

  friend bool operator==(const RangeReport&, const RangeReport&) = default;
};

/// Fraction of residues mod 2^exponent settled by reduced words of length
/// <= exponent, plus the smallest representatives of unsettled classes.
struct CoverageReport {
  uint64_t exponent = 0;
  uint64_t covered_residues = 0;
  uint64_t total_residues = 0;
  std::vector<BigInt> uncovered_sample;
};

/// Checkpoint file cannot be created or written.
class CheckpointIoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Checkpoint file exists but cannot be used to resume this run.
class CheckpointResumeError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerifyOptions {
  unsigned jobs = 0;  // 0 = available hardware parallelism
  uint64_t step_cap = kDefaultReducedStepCap;
  std::optional<std::string> checkpoint_path;
  uint64_t chunk_size = 1u << 16;
  /// Called after each finished chunk with (chunks_done, chunks_total).
  std::function<void(uint64_t, uint64_t)> progress;
};

/// Verifies reduced dynamics for every x in [lo, hi], data-parallel over
/// fixed-size sub-ranges with a deterministic merge: the report is
/// identical whatever the job count or interruption history. Requires
/// 2 <= lo <= hi. Failures are recorded, never thrown.
RangeReport verify_range(const BigInt& lo, const BigInt& hi,
                         const VerifyOptions& options = {});

/// Coverage of the residue classes mod 2^level by words of length
/// <= level. sample_limit bounds the uncovered-representative list.
CoverageReport coverage(uint64_t level, size_t sample_limit = 10);

/// Checks, for every x in [2, n], that x's residue mod 2^level is covered
/// exactly when |d_r(x)| <= level.
bool cross_check_coverage(uint64_t level, const BigInt& n,
                          uint64_t step_cap = kDefaultReducedStepCap);

}  // namespace collatz
