#include "collatz/dynamics.hpp"

#include <string>

namespace collatz {

MismatchError::MismatchError(size_t step, BigInt value)
    : std::runtime_error("transform at step " + std::to_string(step) +
                         " does not match parity of " + value.to_decimal()),
      step_(step),
      value_(std::move(value)) {}

CapExceededError::CapExceededError(BigInt start, uint64_t cap)
    : std::runtime_error("step cap " + std::to_string(cap) +
                         " exceeded starting from " + start.to_decimal()),
      start_(std::move(start)),
      cap_(cap) {}

std::pair<BigInt, Transform> collatz_step(const BigInt& x) {
  if (x.is_zero()) throw std::domain_error("collatz_step requires x >= 1");
  BigInt next = x;
  if (next.is_odd()) {
    next.mul3_add1_halve();
    return {std::move(next), Transform::I};
  }
  next.halve();
  return {std::move(next), Transform::O};
}

bool is_matched(const BigInt& x, Transform t) {
  return (t == Transform::I) == x.is_odd();
}

OrbitRecord apply_word(const Word& w, const BigInt& x, bool keep_trace) {
  if (x.is_zero()) throw std::domain_error("apply_word requires x >= 1");
  OrbitRecord record;
  record.start = x;
  record.word = w;
  if (keep_trace) {
    record.trace.emplace();
    record.trace->reserve(w.size() + 1);
    record.trace->push_back(x);
  }
  BigInt cur = x;
  for (size_t k = 0; k < w.size(); ++k) {
    const Transform t = w.at(k);
    if (!is_matched(cur, t)) throw MismatchError(k + 1, std::move(cur));
    if (t == Transform::I)
      cur.mul3_add1_halve();
    else
      cur.halve();
    if (keep_trace) record.trace->push_back(cur);
  }
  record.final_value = std::move(cur);
  return record;
}

OrbitRecord reduced_dynamics(const BigInt& x, uint64_t step_cap,
                             bool keep_trace) {
  if (x < BigInt(2))
    throw std::domain_error("reduced dynamics requires x >= 2");
  OrbitRecord record;
  record.start = x;
  if (keep_trace) {
    record.trace.emplace();
    record.trace->push_back(x);
  }
  std::string symbols;
  BigInt cur = x;
  for (uint64_t step = 0; step < step_cap; ++step) {
    if (cur.is_odd()) {
      cur.mul3_add1_halve();
      symbols.push_back('I');
    } else {
      cur.halve();
      symbols.push_back('O');
    }
    if (keep_trace) record.trace->push_back(cur);
    if (cur < x) {
      record.word = Word(symbols);
      record.final_value = std::move(cur);
      return record;
    }
  }
  throw CapExceededError(x, step_cap);
}

uint64_t reduced_dynamics_length(const BigInt& x, uint64_t step_cap) {
  if (x < BigInt(2))
    throw std::domain_error("reduced dynamics requires x >= 2");
  BigInt cur = x;
  for (uint64_t step = 1; step <= step_cap; ++step) {
    if (cur.is_odd())
      cur.mul3_add1_halve();
    else
      cur.halve();
    if (cur < x) return step;
  }
  throw CapExceededError(x, step_cap);
}

bool reduced_word_matches(const BigInt& y, const Word& w, uint64_t step_cap) {
  if (y < BigInt(2))
    throw std::domain_error("reduced dynamics requires x >= 2");
  if (w.empty()) return false;
  BigInt cur = y;
  for (size_t k = 0; k < w.size(); ++k) {
    if ((w.at(k) == Transform::I) != cur.is_odd()) return false;
    if (cur.is_odd())
      cur.mul3_add1_halve();
    else
      cur.halve();
    const bool dropped = cur < y;
    if (dropped) return k + 1 == w.size();
    if (k + 1 >= step_cap && k + 1 < w.size()) throw CapExceededError(y, step_cap);
  }
  return false;  // orbit still above y after |w| steps, so d_r(y) is longer
}

std::pair<OrbitRecord, StoppingInfo> original_dynamics(const BigInt& x,
                                                       uint64_t step_cap,
                                                       bool keep_trace) {
  if (x.is_zero())
    throw std::domain_error("original dynamics requires x >= 1");
  OrbitRecord record;
  record.start = x;
  StoppingInfo info;
  if (keep_trace) {
    record.trace.emplace();
    record.trace->push_back(x);
  }
  std::string symbols;
  BigInt cur = x;
  while (!cur.is_one()) {
    if (info.stopping_time >= step_cap) throw CapExceededError(x, step_cap);
    if (cur.is_odd()) {
      cur.mul3_add1_halve();
      symbols.push_back('I');
      ++info.cnt_3x1;
    } else {
      cur.halve();
      symbols.push_back('O');
    }
    ++info.stopping_time;
    if (keep_trace) record.trace->push_back(cur);
  }
  info.cnt_half_total = info.stopping_time;
  record.word = Word(symbols);
  record.final_value = std::move(cur);
  return {std::move(record), info};
}

}  // namespace collatz
