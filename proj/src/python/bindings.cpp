#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "collatz/bigint.hpp"
#include "collatz/dynamics.hpp"
#include "collatz/enumerate.hpp"
#include "collatz/expr.hpp"
#include "collatz/period.hpp"
#include "collatz/sieve.hpp"
#include "collatz/word.hpp"

namespace py = pybind11;

namespace {

using collatz::BigInt;
using collatz::Word;

// Integers cross the boundary as Python ints via their hex form: exact at
// any size and unaffected by CPython's decimal-conversion digit limit.
BigInt to_bigint(const py::int_& value) {
  const std::string text =
      py::module_::import("builtins").attr("hex")(value).cast<std::string>();
  if (text.size() >= 1 && text[0] == '-')
    throw py::value_error("expected a non-negative integer");
  return BigInt::from_hex(std::string_view(text).substr(2));  // drop "0x"
}

py::int_ to_py(const BigInt& value) {
  return py::cast<py::int_>(
      py::module_::import("builtins").attr("int")(value.to_hex(), 16));
}

py::dict orbit_dict(const collatz::OrbitRecord& record) {
  py::dict d;
  d["start"] = to_py(record.start);
  d["word"] = record.word.text();
  d["final"] = to_py(record.final_value);
  if (record.trace) {
    py::list trace;
    for (const auto& value : *record.trace) trace.append(to_py(value));
    d["trace"] = std::move(trace);
  } else {
    d["trace"] = py::none();
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Reduced Collatz dynamics: words, periods, residue classes, and "
            "range verification over arbitrary-precision integers";

  py::register_exception<collatz::MismatchError>(m, "MismatchError",
                                                 PyExc_ValueError);
  py::register_exception<collatz::CapExceededError>(m, "CapExceededError",
                                                    PyExc_RuntimeError);
  py::register_exception<collatz::CheckpointIoError>(m, "CheckpointIoError",
                                                     PyExc_OSError);
  py::register_exception<collatz::CheckpointResumeError>(
      m, "CheckpointResumeError", PyExc_RuntimeError);

  m.def(
      "collatz_step",
      [](const py::int_& x) {
        const auto [next, t] = collatz::collatz_step(to_bigint(x));
        return py::make_tuple(to_py(next), std::string(1, collatz::to_char(t)));
      },
      py::arg("x"), "One shortcut-map step: returns (next_value, 'I' or 'O').");

  m.def(
      "is_matched",
      [](const py::int_& x, const std::string& transform) {
        if (transform.size() != 1)
          throw py::value_error("transform must be 'I' or 'O'");
        return collatz::is_matched(to_bigint(x),
                                   collatz::transform_from_char(transform[0]));
      },
      py::arg("x"), py::arg("transform"));

  m.def(
      "apply_word",
      [](const std::string& word, const py::int_& x, bool keep_trace) {
        return orbit_dict(collatz::apply_word(Word(word), to_bigint(x), keep_trace));
      },
      py::arg("word"), py::arg("x"), py::arg("keep_trace") = false);

  m.def(
      "reduced_dynamics",
      [](const py::int_& x, uint64_t step_cap, bool keep_trace) {
        return orbit_dict(collatz::reduced_dynamics(to_bigint(x), step_cap, keep_trace));
      },
      py::arg("x"), py::arg("step_cap") = collatz::kDefaultReducedStepCap,
      py::arg("keep_trace") = false,
      "Reduced dynamics d_r(x): word, final value and optional trace.");

  m.def(
      "original_dynamics",
      [](const py::int_& x, uint64_t step_cap) {
        const auto [record, info] = collatz::original_dynamics(to_bigint(x), step_cap);
        py::dict d = orbit_dict(record);
        d["stopping_time"] = info.stopping_time;
        d["cnt_3x1"] = info.cnt_3x1;
        d["cnt_half_total"] = info.cnt_half_total;
        return d;
      },
      py::arg("x"), py::arg("step_cap") = collatz::kDefaultOriginalStepCap,
      "Original dynamics d(x) down to 1, with step counts.");

  m.def(
      "is_reduced_form",
      [](const std::string& word) { return collatz::is_reduced_form(Word(word)); },
      py::arg("word"));

  m.def(
      "is_extendable_prefix",
      [](const std::string& word) {
        return collatz::is_extendable_prefix(Word(word));
      },
      py::arg("word"));

  m.def(
      "substr",
      [](const std::string& word, size_t start, size_t length) {
        return collatz::substr(Word(word), start, length).text();
      },
      py::arg("word"), py::arg("start"), py::arg("length"),
      "Segment of length `length` starting at 1-based position `start`.");

  m.def(
      "cmp_pow3_pow2",
      [](uint64_t a, uint64_t b) {
        return collatz::cmp_pow3_pow2(a, b) == collatz::PowerOrdering::Greater
                   ? "greater"
                   : "less";
      },
      py::arg("a"), py::arg("b"),
      "Exact order of 3^a vs 2^b: 'greater' or 'less'.");

  m.def(
      "enumerate_words",
      [](uint64_t max_len) {
        py::list words;
        collatz::enumerate_words(max_len,
                                 [&](const Word& w) { words.append(w.text()); });
        return words;
      },
      py::arg("max_len"),
      "All valid reduced words of length <= max_len, shortest first.");

  m.def(
      "residue_of_word",
      [](const std::string& word) {
        const auto cls = collatz::residue_of_word(Word(word));
        return py::make_tuple(to_py(cls.residue), cls.exponent);
      },
      py::arg("word"),
      "The (residue, exponent) of the class [r] mod 2^exponent owned by the word.");

  m.def(
      "class_table",
      [](uint64_t max_len, uint64_t step_cap) {
        py::list entries;
        collatz::class_table(
            max_len,
            [&](const collatz::ClassEntry& entry) {
              py::dict d;
              d["word"] = entry.word.text();
              d["residue"] = to_py(entry.cls.residue);
              d["modulus_exp"] = entry.cls.exponent;
              d["representative"] = to_py(entry.representative);
              entries.append(std::move(d));
            },
            step_cap);
        return entries;
      },
      py::arg("max_len"), py::arg("step_cap") = collatz::kDefaultReducedStepCap);

  m.def(
      "period_of",
      [](const std::string& word) { return to_py(collatz::period_of(Word(word))); },
      py::arg("word"), "2^|word|.");

  m.def(
      "apply_primed",
      [](const std::string& word, const py::int_& p) {
        const auto value = collatz::apply_primed(Word(word), to_bigint(p));
        return py::make_tuple(to_py(value.numerator), value.denom_exp);
      },
      py::arg("word"), py::arg("p"),
      "Exact primed-word value as (numerator, denom_exp): numerator / 2^denom_exp.");

  m.def(
      "verify_separation",
      [](const py::int_& x, const std::string& word, const py::int_& p) {
        return collatz::verify_separation(to_bigint(x), Word(word), to_bigint(p));
      },
      py::arg("x"), py::arg("word"), py::arg("p"));

  m.def(
      "verify_period",
      [](const py::int_& x, uint64_t k_max, uint64_t step_cap) {
        const auto report = collatz::verify_period(to_bigint(x), k_max, step_cap);
        py::dict d;
        d["x"] = to_py(report.x);
        d["word"] = report.word.text();
        d["period"] = to_py(report.period);
        d["checked_ks"] = report.checked_ks;
        d["all_equal"] = report.all_equal;
        return d;
      },
      py::arg("x"), py::arg("k_max") = 3,
      py::arg("step_cap") = collatz::kDefaultReducedStepCap);

  m.def(
      "minimal_period_bruteforce",
      [](const py::int_& x, uint64_t step_cap,
         uint64_t max_candidates) -> py::object {
        const auto found = collatz::minimal_period_bruteforce_bounded(
            to_bigint(x), step_cap, max_candidates);
        if (!found) return py::none();
        return to_py(*found);
      },
      py::arg("x"), py::arg("step_cap") = collatz::kDefaultReducedStepCap,
      py::arg("max_candidates") = 0,
      "Linear-search minimal period; None when max_candidates > 0 runs out.");

  m.def(
      "verify_range",
      [](const py::int_& lo, const py::int_& hi, unsigned jobs, uint64_t step_cap,
         const std::optional<std::string>& checkpoint, uint64_t chunk_size) {
        collatz::VerifyOptions options;
        options.jobs = jobs;
        options.step_cap = step_cap;
        options.checkpoint_path = checkpoint;
        options.chunk_size = chunk_size;
        const BigInt big_lo = to_bigint(lo);
        const BigInt big_hi = to_bigint(hi);
        collatz::RangeReport report;
        {
          py::gil_scoped_release release;
          report = collatz::verify_range(big_lo, big_hi, options);
        }
        py::dict d;
        d["lo"] = to_py(report.lo);
        d["hi"] = to_py(report.hi);
        d["verified_count"] = report.verified_count;
        d["max_word_len"] = report.max_word_len;
        py::dict histogram;
        for (const auto& [len, count] : report.length_histogram)
          histogram[py::int_(len)] = count;
        d["length_histogram"] = std::move(histogram);
        py::list failures;
        for (const auto& failure : report.failures) {
          py::dict f;
          f["x"] = to_py(failure.x);
          f["reason"] = failure.reason;
          failures.append(std::move(f));
        }
        d["failures"] = std::move(failures);
        return d;
      },
      py::arg("lo"), py::arg("hi"), py::arg("jobs") = 0,
      py::arg("step_cap") = collatz::kDefaultReducedStepCap,
      py::arg("checkpoint") = std::nullopt, py::arg("chunk_size") = 1u << 16,
      "Parallel verification of reduced dynamics over [lo, hi].");

  m.def(
      "coverage",
      [](uint64_t level, size_t sample_limit) {
        const auto report = collatz::coverage(level, sample_limit);
        py::dict d;
        d["exponent"] = report.exponent;
        d["covered_residues"] = report.covered_residues;
        d["total_residues"] = report.total_residues;
        py::list sample;
        for (const auto& rep : report.uncovered_sample) sample.append(to_py(rep));
        d["uncovered_sample"] = std::move(sample);
        return d;
      },
      py::arg("level"), py::arg("sample_limit") = 10);

  m.def(
      "cross_check_coverage",
      [](uint64_t level, const py::int_& n, uint64_t step_cap) {
        const BigInt big_n = to_bigint(n);
        bool ok;
        {
          py::gil_scoped_release release;
          ok = collatz::cross_check_coverage(level, big_n, step_cap);
        }
        return ok;
      },
      py::arg("level"), py::arg("n"),
      py::arg("step_cap") = collatz::kDefaultReducedStepCap);

  m.def(
      "eval_int_expr",
      [](const std::string& text, uint64_t exponent_limit) {
        return to_py(collatz::eval_int_expr(text, exponent_limit));
      },
      py::arg("text"), py::arg("exponent_limit") = collatz::kDefaultExponentLimit,
      "Evaluate an integer expression such as '2^100000-1'.");
}
