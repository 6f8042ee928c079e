#include "collatz/word.hpp"

#include <ostream>
#include <stdexcept>

#include "collatz/bigint.hpp"

namespace collatz {

char to_char(Transform t) { return t == Transform::I ? 'I' : 'O'; }

Transform transform_from_char(char c) {
  if (c == 'I') return Transform::I;
  if (c == 'O') return Transform::O;
  throw std::invalid_argument(std::string("invalid transform byte '") + c +
                              "': expected 'I' or 'O'");
}

Word::Word(std::string_view text) : seq_(text) {
  for (char c : seq_) {
    if (c == 'I')
      ++cnt_i_;
    else if (c != 'O')
      throw std::invalid_argument(std::string("invalid word byte '") + c +
                                  "': expected 'I' or 'O'");
  }
}

Transform Word::at(size_t index) const {
  if (index >= seq_.size()) throw std::out_of_range("word index out of range");
  return seq_[index] == 'I' ? Transform::I : Transform::O;
}

Word Word::prefix(size_t len) const {
  if (len > seq_.size()) throw std::out_of_range("prefix longer than word");
  return Word(std::string_view(seq_).substr(0, len));
}

Word substr(const Word& w, size_t start, size_t len) {
  if (start < 1 || start > w.size())
    throw std::out_of_range("substr start out of range");
  if (len > w.size() - (start - 1))
    throw std::out_of_range("substr length out of range");
  return Word(std::string_view(w.text()).substr(start - 1, len));
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  return os << w.text();
}

PowerOrdering cmp_pow3_pow2(uint64_t a, uint64_t b) {
  if (a == 0 && b == 0)
    throw std::domain_error("3^0 = 2^0: degenerate equal comparison");
  // 3^a and 2^b are never equal for positive exponents, so the bit length
  // of 3^a settles the order: 3^a > 2^b iff bit_length(3^a) > b.
  const BigInt p3 = BigInt::pow(BigInt(3), a);
  return p3.bit_length() > b ? PowerOrdering::Greater : PowerOrdering::Less;
}

bool is_reduced_form(const Word& w) {
  if (w.empty()) throw std::out_of_range("empty word");
  if (w.size() == 1) return w.at(0) == Transform::O;
  BigInt pow3(1);
  for (size_t j = 1; j <= w.size(); ++j) {
    if (w.at(j - 1) == Transform::I) pow3.mul_u64(3);
    if (j < w.size()) {
      // proper prefix must satisfy 3^cnt_i > 2^j
      if (pow3.bit_length() <= j) return false;
    }
  }
  // 2^(L-1) < 3^cnt_i < 2^L holds exactly when the bit length equals L
  return pow3.bit_length() == w.size();
}

bool is_extendable_prefix(const Word& w) {
  if (w.empty()) throw std::out_of_range("empty word");
  const BigInt p3 = BigInt::pow(BigInt(3), w.cnt_i());
  return p3.bit_length() > w.size();
}

}  // namespace collatz
