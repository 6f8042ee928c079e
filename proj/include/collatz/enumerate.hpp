#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "collatz/bigint.hpp"
#include "collatz/dynamics.hpp"
#include "collatz/word.hpp"

namespace collatz {

/// The residue class [residue] mod 2^exponent.
struct ResidueClass {
  BigInt residue;
  uint64_t exponent = 0;

  friend bool operator==(const ResidueClass&, const ResidueClass&) = default;
};

/// A reduced word together with the residue class it owns and the smallest
/// member >= 2 of that class.
struct ClassEntry {
  Word word;
  ResidueClass cls;
  BigInt representative;
};

/// Cross-validation between independently computed routes failed; this
/// signals an implementation bug, not a mathematical counterexample.
class InternalConsistencyError : public std::logic_error {
  using std::logic_error::logic_error;
};

using WordSink = std::function<void(const Word&)>;
using ClassSink = std::function<void(const ClassEntry&)>;

/// Streams every valid reduced word of length <= max_len in
/// length-then-lexicographic order (I before O). The search is a pruned
/// DFS that keeps 3^cnt_i and 2^len trackers incrementally and never
/// extends a prefix whose ratio has dropped below 1.
void enumerate_words(uint64_t max_len, const WordSink& sink);

/// Materialized convenience wrapper.
std::vector<Word> enumerate_words(uint64_t max_len);

/// The unique residue class mod 2^|w| whose members match the parity
/// required by every step of w. Defined for any word over {I, O}, valid or
/// not; computed by bit-by-bit 2-adic lifting. Throws std::out_of_range on
/// the empty word.
ResidueClass residue_of_word(const Word& w);

/// Builds the entry for one word: its class and representative, checked by
/// running reduced_dynamics on the representative. Throws
/// InternalConsistencyError if the round trip disagrees.
ClassEntry make_class_entry(const Word& w,
                            uint64_t step_cap = kDefaultReducedStepCap);

/// Streams one cross-validated entry per enumerated word of length
/// <= max_len, in enumeration order.
void class_table(uint64_t max_len, const ClassSink& sink,
                 uint64_t step_cap = kDefaultReducedStepCap);

/// Materialized convenience wrapper.
std::vector<ClassEntry> class_table(uint64_t max_len,
                                    uint64_t step_cap = kDefaultReducedStepCap);

}  // namespace collatz
