#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace collatz {

/// One application of the shortcut map: I is (3x+1)/2, O is x/2.
enum class Transform : uint8_t { I, O };

char to_char(Transform t);
Transform transform_from_char(char c);  // throws std::invalid_argument

/// A finite sequence over {I, O} with cached symbol counts.
///
/// The text form is the canonical serialization: uppercase 'I'/'O' only,
/// no whitespace. Equality and hashing use the symbol sequence alone.
class Word {
 public:
  Word() = default;
  explicit Word(std::string_view text);  // validates every byte

  size_t size() const { return seq_.size(); }
  bool empty() const { return seq_.empty(); }
  size_t cnt_i() const { return cnt_i_; }
  size_t cnt_o() const { return seq_.size() - cnt_i_; }

  Transform at(size_t index) const;  // 0-based, throws std::out_of_range
  /// First `len` symbols; len must not exceed size().
  Word prefix(size_t len) const;

  const std::string& text() const { return seq_; }

  friend bool operator==(const Word& lhs, const Word& rhs) {
    return lhs.seq_ == rhs.seq_;
  }

 private:
  std::string seq_;
  size_t cnt_i_ = 0;
};

/// Segment of length `len` starting at 1-based position `start`.
/// len = 0 yields the empty word. Out-of-range arguments throw
/// std::out_of_range.
Word substr(const Word& w, size_t start, size_t len);

std::ostream& operator<<(std::ostream& os, const Word& w);

/// Ordering of 3^a versus 2^b. Equality is impossible unless a = b = 0,
/// which throws std::domain_error.
enum class PowerOrdering { Less, Greater };

/// Exact comparison of 3^a and 2^b; never touches floating point.
PowerOrdering cmp_pow3_pow2(uint64_t a, uint64_t b);

/// Whether w is the reduced dynamics of some integer: w = O, or w satisfies
/// 2^(|w|-1) < 3^cnt_i(w) < 2^|w| with 3^cnt_i(p) > 2^|p| on every proper
/// prefix p. All comparisons are exact. Throws std::out_of_range on the
/// empty word.
bool is_reduced_form(const Word& w);

/// Whether w can still grow into a reduced word: 3^cnt_i(w) > 2^|w|.
/// This is the DFS pruning predicate. Throws std::out_of_range on the
/// empty word.
bool is_extendable_prefix(const Word& w);

}  // namespace collatz

template <>
struct std::hash<collatz::Word> {
  size_t operator()(const collatz::Word& w) const noexcept {
    return std::hash<std::string>{}(w.text());
  }
};
