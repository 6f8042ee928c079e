#include "collatz/enumerate.hpp"

#include <string>

namespace collatz {

namespace {

// DFS over extendable prefixes, emitting completed words of exactly
// target_len. pow3 tracks 3^cnt_i(prefix); a prefix of length j is
// extendable iff 3^cnt_i > 2^j, i.e. pow3.bit_length() > j. Appending I
// keeps a prefix extendable (3^(a+1) > 3*2^j > 2^(j+1)); appending O either
// keeps it extendable or completes a valid word, so every leaf is a member
// of the enumerated set and no branch is ever discarded late.
void dfs_exact_length(std::string& prefix, BigInt& pow3, uint64_t target_len,
                      const WordSink& sink) {
  const uint64_t j = prefix.size();
  if (j == target_len) return;
  prefix.push_back('I');
  pow3.mul_u64(3);
  dfs_exact_length(prefix, pow3, target_len, sink);
  pow3.divmod_u64(3);
  prefix.pop_back();

  prefix.push_back('O');
  if (pow3.bit_length() <= j + 1) {
    // ratio dropped below 1: the word is complete
    if (j + 1 == target_len) sink(Word(prefix));
  } else {
    dfs_exact_length(prefix, pow3, target_len, sink);
  }
  prefix.pop_back();
}

}  // namespace

void enumerate_words(uint64_t max_len, const WordSink& sink) {
  if (max_len < 1) throw std::invalid_argument("max_len must be >= 1");
  std::string prefix;
  prefix.reserve(max_len);
  for (uint64_t target = 1; target <= max_len; ++target) {
    BigInt pow3(1);
    dfs_exact_length(prefix, pow3, target, sink);
  }
}

std::vector<Word> enumerate_words(uint64_t max_len) {
  std::vector<Word> words;
  enumerate_words(max_len, [&](const Word& w) { words.push_back(w); });
  return words;
}

ResidueClass residue_of_word(const Word& w) {
  if (w.empty()) throw std::out_of_range("empty word");
  // Bit-by-bit lifting. Invariant: applying the first j transforms of w to
  // residue parity-matches at every step, and value is that j-step image.
  // Flipping bit j of the residue shifts the j-step image by exactly
  // 3^cnt_i(prefix_j), an odd amount, so exactly one of the two lifts mod
  // 2^(j+1) matches the parity required at step j.
  BigInt residue;
  BigInt value;
  BigInt pow3(1);
  for (size_t j = 0; j < w.size(); ++j) {
    const bool need_odd = w.at(j) == Transform::I;
    if (value.is_odd() != need_odd) {
      residue.set_bit(j);
      value += pow3;
    }
    if (need_odd) {
      value.mul3_add1_halve();
      pow3.mul_u64(3);
    } else {
      value.halve();
    }
  }
  return ResidueClass{std::move(residue), w.size()};
}

ClassEntry make_class_entry(const Word& w, uint64_t step_cap) {
  ClassEntry entry;
  entry.word = w;
  entry.cls = residue_of_word(w);
  entry.representative = entry.cls.residue < BigInt(2)
                             ? entry.cls.residue + BigInt::pow2(entry.cls.exponent)
                             : entry.cls.residue;
  const OrbitRecord check = reduced_dynamics(entry.representative, step_cap);
  if (!(check.word == w))
    throw InternalConsistencyError(
        "reduced dynamics of representative " + entry.representative.to_decimal() +
        " is " + check.word.text() + ", expected " + w.text());
  return entry;
}

void class_table(uint64_t max_len, const ClassSink& sink, uint64_t step_cap) {
  enumerate_words(max_len,
                  [&](const Word& w) { sink(make_class_entry(w, step_cap)); });
}

std::vector<ClassEntry> class_table(uint64_t max_len, uint64_t step_cap) {
  std::vector<ClassEntry> entries;
  class_table(max_len, [&](const ClassEntry& e) { entries.push_back(e); },
              step_cap);
  return entries;
}

}  // namespace collatz
