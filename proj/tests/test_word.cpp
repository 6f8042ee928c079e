#include <doctest.h>

#include <random>
#include <stdexcept>
#include <unordered_set>

#include "collatz/bigint.hpp"
#include "collatz/dynamics.hpp"
#include "collatz/word.hpp"

using collatz::BigInt;
using collatz::cmp_pow3_pow2;
using collatz::PowerOrdering;
using collatz::Transform;
using collatz::Word;

namespace {

// Brute-force oracle for Set_rd members up to a length bound: collect
// d_r(x) for every x in [2, 2^max_len + 2]. Every residue class mod
// 2^max_len has a representative in that range, so the set is complete for
// words of length <= max_len.
std::unordered_set<std::string> brute_force_words(uint64_t max_len) {
  std::unordered_set<std::string> words;
  const uint64_t limit = (uint64_t{1} << max_len) + 2;
  for (uint64_t x = 2; x <= limit; ++x) {
    const Word w = collatz::reduced_dynamics(BigInt(x)).word;
    if (w.size() <= max_len) words.insert(w.text());
  }
  return words;
}

}  // namespace

TEST_SUITE("word") {

TEST_CASE("symbol counts") {
  CHECK(Word("IIOO").cnt_i() == 2);
  CHECK(Word("III").cnt_i() == 3);
  CHECK(Word("O").cnt_i() == 0);
  CHECK(Word("IIOO").cnt_o() == 2);
  CHECK(Word("IO").cnt_o() == 1);
  CHECK(Word("I").cnt_o() == 0);
  CHECK(Word("").size() == 0);
}

TEST_CASE("parser rejects anything but uppercase I and O") {
  CHECK_THROWS_AS(Word("IIxO"), std::invalid_argument);
  CHECK_THROWS_AS(Word("io"), std::invalid_argument);
  CHECK_THROWS_AS(Word("I O"), std::invalid_argument);
  CHECK_THROWS_AS(Word("IO\n"), std::invalid_argument);
  CHECK_THROWS_AS(collatz::transform_from_char('x'), std::invalid_argument);
  CHECK(collatz::transform_from_char('I') == Transform::I);
}

TEST_CASE("substr selects 1-based segments") {
  const Word w("IIOO");
  CHECK(substr(w, 1, 4) == w);
  CHECK(substr(w, 1, 3) == Word("IIO"));
  CHECK(substr(w, 2, 0) == Word(""));
  CHECK(substr(w, 4, 1) == Word("O"));
  CHECK(substr(w, 2, 3) == Word("IOO"));
  CHECK_THROWS_AS(substr(w, 0, 1), std::out_of_range);
  CHECK_THROWS_AS(substr(w, 5, 1), std::out_of_range);
  CHECK_THROWS_AS(substr(w, 2, 4), std::out_of_range);
}

TEST_CASE("cmp_pow3_pow2 fixtures") {
  CHECK(cmp_pow3_pow2(1, 1) == PowerOrdering::Greater);
  CHECK(cmp_pow3_pow2(2, 3) == PowerOrdering::Greater);  // 9 > 8
  CHECK(cmp_pow3_pow2(5, 8) == PowerOrdering::Less);     // 243 < 256
  CHECK(cmp_pow3_pow2(0, 1) == PowerOrdering::Less);
  CHECK(cmp_pow3_pow2(1, 0) == PowerOrdering::Greater);
  CHECK_THROWS_AS(cmp_pow3_pow2(0, 0), std::domain_error);
}

TEST_CASE("cmp_pow3_pow2 agrees with direct big-integer comparison") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 300; ++i) {
    const uint64_t a = 1 + rng() % 400;
    const uint64_t b = 1 + rng() % 640;
    const BigInt p3 = BigInt::pow(BigInt(3), a);
    const BigInt p2 = BigInt::pow2(b);
    REQUIRE(p3 != p2);
    const auto expected = p3 > p2 ? PowerOrdering::Greater : PowerOrdering::Less;
    CHECK(cmp_pow3_pow2(a, b) == expected);
  }
}

TEST_CASE("is_reduced_form fixtures") {
  CHECK(is_reduced_form(Word("O")));
  CHECK(is_reduced_form(Word("IIOO")));
  CHECK_FALSE(is_reduced_form(Word("IIO")));  // 3^2 = 9 > 2^3 = 8
  CHECK_FALSE(is_reduced_form(Word("OI")));   // prefix O fails 3^0 > 2^1
  CHECK_FALSE(is_reduced_form(Word("I")));
  CHECK_FALSE(is_reduced_form(Word("IO" "O")));  // 3 < 4 already at length 2
  CHECK_THROWS_AS(is_reduced_form(Word("")), std::out_of_range);
}

TEST_CASE("is_reduced_form is exactly membership in the brute-forced set") {
  // Exhaustive over all 2^1..2^12 words; the oracle never touches the
  // power-comparison route.
  const auto oracle = brute_force_words(12);
  for (uint64_t len = 1; len <= 12; ++len) {
    for (uint64_t bits = 0; bits < (uint64_t{1} << len); ++bits) {
      std::string text;
      for (uint64_t i = 0; i < len; ++i)
        text.push_back((bits >> i) & 1 ? 'I' : 'O');
      const bool expected = oracle.count(text) > 0;
      CHECK(is_reduced_form(Word(text)) == expected);
    }
  }
}

TEST_CASE("valid words start with I and end with O") {
  for (const auto& text : brute_force_words(12)) {
    const Word w(text);
    if (w.size() == 1) {
      CHECK(w == Word("O"));
      continue;
    }
    CHECK(w.at(0) == Transform::I);
    CHECK(w.at(w.size() - 1) == Transform::O);
    // two-sided length condition: 2^(L-1) < 3^cnt_i < 2^L
    const BigInt p3 = BigInt::pow(BigInt(3), w.cnt_i());
    CHECK(BigInt::pow2(w.size() - 1) < p3);
    CHECK(p3 < BigInt::pow2(w.size()));
  }
}

TEST_CASE("is_extendable_prefix") {
  CHECK(is_extendable_prefix(Word("I")));
  CHECK(is_extendable_prefix(Word("II")));
  CHECK_FALSE(is_extendable_prefix(Word("IO")));  // 3 < 4: IO is terminal
  CHECK_FALSE(is_extendable_prefix(Word("O")));
  CHECK_THROWS_AS(is_extendable_prefix(Word("")), std::out_of_range);
}

TEST_CASE("word equality and hashing use the sequence only") {
  const Word a("IIOO");
  const Word b = substr(Word("IIIOO"), 2, 4);
  CHECK(a == b);
  CHECK(std::hash<Word>{}(a) == std::hash<Word>{}(b));
  CHECK_FALSE(a == Word("IIOI"));
}

}  // TEST_SUITE
