#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "collatz/bigint.hpp"
#include "collatz/dynamics.hpp"

using collatz::BigInt;
using collatz::CapExceededError;
using collatz::MismatchError;
using collatz::Transform;
using collatz::Word;

TEST_SUITE("dynamics") {

TEST_CASE("collatz_step") {
  CHECK(collatz_step(BigInt(3)) == std::pair{BigInt(5), Transform::I});
  CHECK(collatz_step(BigInt(8)) == std::pair{BigInt(4), Transform::O});
  CHECK(collatz_step(BigInt(1)) == std::pair{BigInt(2), Transform::I});
  CHECK_THROWS_AS(collatz_step(BigInt(0)), std::domain_error);
}

TEST_CASE("is_matched") {
  CHECK(is_matched(BigInt(3), Transform::I));
  CHECK_FALSE(is_matched(BigInt(4), Transform::I));
  CHECK(is_matched(BigInt(4), Transform::O));
  CHECK_FALSE(is_matched(BigInt(3), Transform::O));
}

TEST_CASE("apply_word fixtures") {
  const auto record = apply_word(Word("IIOO"), BigInt(3), true);
  CHECK(record.final_value == BigInt(2));
  REQUIRE(record.trace.has_value());
  const std::vector<BigInt> expected{BigInt(3), BigInt(5), BigInt(8), BigInt(4),
                                     BigInt(2)};
  CHECK(*record.trace == expected);

  CHECK(apply_word(Word("II"), BigInt(3)).final_value == BigInt(8));
  CHECK(apply_word(Word(""), BigInt(7)).final_value == BigInt(7));
  CHECK_FALSE(apply_word(Word(""), BigInt(7)).trace.has_value());
}

TEST_CASE("apply_word mismatch carries step and value") {
  try {
    apply_word(Word("O"), BigInt(3));
    FAIL("expected MismatchError");
  } catch (const MismatchError& e) {
    CHECK(e.step() == 1);
    CHECK(e.value() == BigInt(3));
  }
  try {
    apply_word(Word("IIII"), BigInt(3));
    FAIL("expected MismatchError");
  } catch (const MismatchError& e) {
    CHECK(e.step() == 3);  // I(I(3)) = 8 is even, third I cannot apply
    CHECK(e.value() == BigInt(8));
  }
  CHECK_THROWS_AS(apply_word(Word("O"), BigInt(0)), std::domain_error);
}

TEST_CASE("reduced_dynamics fixtures") {
  CHECK(collatz::reduced_dynamics(BigInt(3)).word == Word("IIOO"));
  CHECK(collatz::reduced_dynamics(BigInt(5)).word == Word("IO"));
  CHECK(collatz::reduced_dynamics(BigInt(7)).word == Word("IIIOIOO"));
  CHECK(collatz::reduced_dynamics(BigInt(9)).word == Word("IO"));
  CHECK(collatz::reduced_dynamics(BigInt(11)).word == Word("IIOIO"));
  CHECK(collatz::reduced_dynamics(BigInt(10)).word == Word("O"));
  CHECK(collatz::reduced_dynamics(BigInt(1048576)).word == Word("O"));
  CHECK(collatz::reduced_dynamics(BigInt(3)).final_value == BigInt(2));
  CHECK_THROWS_AS(collatz::reduced_dynamics(BigInt(1)), std::domain_error);
  CHECK_THROWS_AS(collatz::reduced_dynamics(BigInt(0)), std::domain_error);
}

TEST_CASE("step cap is an error, not a hang") {
  CHECK_THROWS_AS(collatz::reduced_dynamics(BigInt(27), 10), CapExceededError);
  try {
    collatz::reduced_dynamics(BigInt(27), 10);
  } catch (const CapExceededError& e) {
    CHECK(e.start() == BigInt(27));
    CHECK(e.cap() == 10);
  }
  CHECK(collatz::reduced_dynamics(BigInt(27), 59).word.size() == 59);
  CHECK_THROWS_AS(collatz::reduced_dynamics_length(BigInt(27), 58), CapExceededError);
  CHECK(collatz::reduced_dynamics_length(BigInt(27), 59) == 59);
}

TEST_CASE("original_dynamics fixtures") {
  const auto [record3, info3] = collatz::original_dynamics(BigInt(3));
  CHECK(record3.word == Word("IIOOO"));
  CHECK(info3.stopping_time == 5);
  CHECK(info3.cnt_3x1 == 2);
  CHECK(info3.cnt_half_total == 5);
  CHECK(record3.final_value == BigInt(1));

  const auto [record2, info2] = collatz::original_dynamics(BigInt(2));
  CHECK(record2.word == Word("O"));
  CHECK(info2.stopping_time == 1);

  const auto [record1, info1] = collatz::original_dynamics(BigInt(1));
  CHECK(record1.word.empty());
  CHECK(info1.stopping_time == 0);
  CHECK(record1.final_value == BigInt(1));

  CHECK_THROWS_AS(collatz::original_dynamics(BigInt(0)), std::domain_error);
  CHECK_THROWS_AS(collatz::original_dynamics(BigInt(27), 10), CapExceededError);
}

TEST_CASE("reduced dynamics invariants over a sweep") {
  // final < x, intermediates >= x, last transform is O, and the word
  // applied back to x lands on the same final value.
  for (uint64_t x = 2; x <= 20000; ++x) {
    const auto record = collatz::reduced_dynamics(BigInt(x), 10000, true);
    REQUIRE(record.word.size() >= 1);
    CHECK(record.final_value < BigInt(x));
    CHECK(record.word.at(record.word.size() - 1) == Transform::O);
    const auto& trace = *record.trace;
    for (size_t k = 0; k + 1 < trace.size(); ++k) CHECK(trace[k] >= BigInt(x));
    const auto replay = apply_word(record.word, BigInt(x));
    CHECK(replay.final_value == record.final_value);
  }
  // length-only route agrees with the word route over a wider range
  for (uint64_t x = 2; x <= 1000000; x += 997)
    CHECK(collatz::reduced_dynamics_length(BigInt(x), 10000) ==
          collatz::reduced_dynamics(BigInt(x), 10000).word.size());
}

TEST_CASE("every x in [2, 10^6] reduces under a 10^4 step cap") {
  for (uint64_t x = 2; x <= 1000000; ++x)
    CHECK_NOTHROW(collatz::reduced_dynamics_length(BigInt(x), 10000));
}

TEST_CASE("original dynamics is the concatenation of reduced blocks") {
  for (uint64_t x = 2; x <= 100000; ++x) {
    const auto [record, info] = collatz::original_dynamics(BigInt(x));
    std::string concatenated;
    BigInt y(x);
    while (!y.is_one()) {
      const auto block = collatz::reduced_dynamics(y);
      concatenated += block.word.text();
      y = block.final_value;
    }
    CHECK(record.word.text() == concatenated);
    CHECK(info.stopping_time == record.word.size());
    CHECK(info.cnt_3x1 == record.word.cnt_i());
  }
}

TEST_CASE("x in [1]_4 has reduced word IO") {
  for (uint64_t x = 5; x <= 100000; x += 4)
    CHECK(collatz::reduced_dynamics(BigInt(x)).word == Word("IO"));
}

TEST_CASE("reduced_word_matches is an early-exit equality check") {
  const Word w3 = collatz::reduced_dynamics(BigInt(3)).word;
  CHECK(reduced_word_matches(BigInt(3), w3));
  CHECK(reduced_word_matches(BigInt(19), w3));  // 19 = 3 + 16
  CHECK_FALSE(reduced_word_matches(BigInt(4), w3));
  CHECK_FALSE(reduced_word_matches(BigInt(5), w3));
  CHECK_FALSE(reduced_word_matches(BigInt(7), w3));  // longer word
  CHECK_FALSE(reduced_word_matches(BigInt(5), Word("I")));
  for (uint64_t x = 2; x <= 3000; ++x) {
    const Word w = collatz::reduced_dynamics(BigInt(x)).word;
    for (uint64_t y = x; y < x + 40; ++y) {
      const bool expected = collatz::reduced_dynamics(BigInt(y)).word == w;
      CHECK(reduced_word_matches(BigInt(y), w) == expected);
    }
  }
}

TEST_CASE("trace layout") {
  const auto record = collatz::reduced_dynamics(BigInt(7), 100, true);
  REQUIRE(record.trace.has_value());
  CHECK(record.trace->size() == record.word.size() + 1);
  CHECK(record.trace->front() == BigInt(7));
  CHECK(record.trace->back() == record.final_value);
}

}  // TEST_SUITE
