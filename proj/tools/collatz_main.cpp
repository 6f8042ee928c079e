// Command-line front end for the reduced Collatz dynamics library.
//
// Exit codes: 0 success, 1 verification failure found, 2 usage or parse
// error, 3 I/O error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "collatz/dynamics.hpp"
#include "collatz/enumerate.hpp"
#include "collatz/expr.hpp"
#include "collatz/period.hpp"
#include "collatz/serialize.hpp"
#include "collatz/sieve.hpp"
#include "collatz/word.hpp"

namespace {

using collatz::BigInt;
using collatz::Word;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw CLI::ValidationError("--format", "expected one of text|json|csv");
}

void add_format_option(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format: text, json or csv")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json", "csv"}));
}

unsigned default_jobs() {
  if (const char* env = std::getenv("COLLATZ_JOBS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    std::cerr << "warning: ignoring invalid COLLATZ_JOBS value '" << env << "'\n";
  }
  return 0;  // auto
}

std::string orbit_csv(const collatz::OrbitRecord& record) {
  return "start,word,final,stopping_time,cnt_3x1,cnt_half_total\n" +
         record.start.to_decimal() + "," + record.word.text() + "," +
         record.final_value.to_decimal() + "," +
         std::to_string(record.word.size()) + "," +
         std::to_string(record.word.cnt_i()) + "," +
         std::to_string(record.word.size()) + "\n";
}

void print_orbit_text(const collatz::OrbitRecord& record, bool with_counts,
                      bool with_trace) {
  std::cout << "word: " << record.word << "\n"
            << "length: " << record.word.size() << "\n"
            << "final: " << record.final_value << "\n";
  if (with_counts) {
    std::cout << "stopping_time: " << record.word.size() << "\n"
              << "cnt_3x1: " << record.word.cnt_i() << "\n"
              << "cnt_half_total: " << record.word.size() << "\n";
  }
  if (with_trace && record.trace) {
    std::cout << "trace:";
    for (const auto& value : *record.trace) std::cout << ' ' << value;
    std::cout << "\n";
  }
}

int run_dr(const std::string& expr, uint64_t step_cap, uint64_t exp_limit,
           bool trace, Format format) {
  const BigInt x = collatz::eval_int_expr(expr, exp_limit);
  if (x == BigInt(1)) {
    std::cout << "1 is trivially at 1; reduced dynamics is defined for x >= 2\n";
    return kExitOk;
  }
  const auto record = collatz::reduced_dynamics(x, step_cap, trace);
  switch (format) {
    case Format::Text:
      print_orbit_text(record, false, trace);
      break;
    case Format::Json:
      std::cout << collatz::to_json(record) << "\n";
      break;
    case Format::Csv:
      std::cout << orbit_csv(record);
      break;
  }
  return kExitOk;
}

int run_orbit(const std::string& expr, uint64_t step_cap, uint64_t exp_limit,
              bool counts_only, Format format) {
  const BigInt x = collatz::eval_int_expr(expr, exp_limit);
  const auto [record, info] = collatz::original_dynamics(x, step_cap);
  switch (format) {
    case Format::Text:
      if (!counts_only) std::cout << "word: " << record.word << "\n";
      std::cout << "final: " << record.final_value << "\n"
                << "stopping_time: " << info.stopping_time << "\n"
                << "cnt_3x1: " << info.cnt_3x1 << "\n"
                << "cnt_half_total: " << info.cnt_half_total << "\n";
      break;
    case Format::Json:
      if (counts_only) {
        const json j{{"final", record.final_value.to_decimal()},
                     {"stopping_time", std::to_string(info.stopping_time)},
                     {"cnt_3x1", std::to_string(info.cnt_3x1)},
                     {"cnt_half_total", std::to_string(info.cnt_half_total)}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << collatz::to_json(record) << "\n";
      }
      break;
    case Format::Csv:
      if (counts_only) {
        std::cout << "stopping_time,cnt_3x1,cnt_half_total\n"
                  << info.stopping_time << "," << info.cnt_3x1 << ","
                  << info.cnt_half_total << "\n";
      } else {
        std::cout << orbit_csv(record);
      }
      break;
  }
  return kExitOk;
}

int run_apply(const std::string& word_text, const std::string& expr,
              uint64_t exp_limit, bool trace, Format format) {
  const Word word{word_text};
  const BigInt x = collatz::eval_int_expr(expr, exp_limit);
  try {
    const auto record = collatz::apply_word(word, x, trace);
    switch (format) {
      case Format::Text:
        print_orbit_text(record, false, trace);
        break;
      case Format::Json:
        std::cout << collatz::to_json(record) << "\n";
        break;
      case Format::Csv:
        std::cout << orbit_csv(record);
        break;
    }
    return kExitOk;
  } catch (const collatz::MismatchError& e) {
    std::cout << "mismatch at step " << e.step() << ": value " << e.value()
              << (e.value().is_odd() ? " is odd" : " is even") << "\n";
    return kExitVerificationFailure;
  }
}

int run_enum(uint64_t max_len, Format format) {
  switch (format) {
    case Format::Text:
      collatz::enumerate_words(max_len,
                               [](const Word& w) { std::cout << w << "\n"; });
      break;
    case Format::Json: {
      json words = json::array();
      uint64_t count = 0;
      collatz::enumerate_words(max_len, [&](const Word& w) {
        words.push_back(w.text());
        ++count;
      });
      const json j{{"max_len", max_len}, {"count", count}, {"words", std::move(words)}};
      std::cout << j.dump() << "\n";
      break;
    }
    case Format::Csv:
      std::cout << "word,length,cnt_i,cnt_o\n";
      collatz::enumerate_words(max_len, [](const Word& w) {
        std::cout << w << "," << w.size() << "," << w.cnt_i() << ","
                  << w.cnt_o() << "\n";
      });
      break;
  }
  return kExitOk;
}

int run_residue(const std::string& word_text, Format format) {
  const Word word{word_text};
  const auto cls = collatz::residue_of_word(word);
  switch (format) {
    case Format::Text:
      std::cout << "word: " << word << "\n"
                << "class: [" << cls.residue << "]_"
                << BigInt::pow2(cls.exponent) << "\n"
                << "residue: " << cls.residue << "\n"
                << "modulus_exp: " << cls.exponent << "\n";
      break;
    case Format::Json:
      std::cout << collatz::to_json(cls, word) << "\n";
      break;
    case Format::Csv:
      std::cout << "word,residue,modulus_exp\n"
                << word << "," << cls.residue << "," << cls.exponent << "\n";
      break;
  }
  return kExitOk;
}

int run_classes(uint64_t max_len, uint64_t step_cap, Format format) {
  switch (format) {
    case Format::Text:
      collatz::class_table(
          max_len,
          [](const collatz::ClassEntry& e) {
            std::cout << e.word << "  [" << e.cls.residue << "]_"
                      << BigInt::pow2(e.cls.exponent) << "  representative "
                      << e.representative << "\n";
          },
          step_cap);
      break;
    case Format::Json:
      collatz::class_table(
          max_len,
          [](const collatz::ClassEntry& e) {
            std::cout << collatz::to_json(e) << "\n";
          },
          step_cap);
      break;
    case Format::Csv:
      std::cout << "word,residue,modulus_exp,representative\n";
      collatz::class_table(
          max_len,
          [](const collatz::ClassEntry& e) {
            std::cout << e.word << "," << e.cls.residue << ","
                      << e.cls.exponent << "," << e.representative << "\n";
          },
          step_cap);
      break;
  }
  return kExitOk;
}

int run_period(const std::string& expr, uint64_t k_max, bool min_brute,
               uint64_t step_cap, uint64_t exp_limit, Format format) {
  const BigInt x = collatz::eval_int_expr(expr, exp_limit);
  const auto report = collatz::verify_period(x, k_max, step_cap);
  std::optional<BigInt> min_period;
  if (min_brute) {
    if (report.word.size() > 34)
      std::cerr << "warning: brute-force minimal period scans 2^"
                << report.word.size() << " candidates; this will take a very "
                << "long time (interrupt with Ctrl-C)\n";
    min_period = collatz::minimal_period_bruteforce(x, step_cap);
  }
  switch (format) {
    case Format::Text:
      std::cout << "x: " << report.x << "\n"
                << "word: " << report.word << "\n"
                << "period: " << report.period << "\n"
                << "checked_ks: " << report.checked_ks << "\n"
                << "all_equal: " << (report.all_equal ? "true" : "false") << "\n";
      if (min_period) std::cout << "min_period_bruteforce: " << *min_period << "\n";
      break;
    case Format::Json: {
      json j = json::parse(collatz::to_json(report));
      if (min_period) j["min_period_bruteforce"] = min_period->to_decimal();
      std::cout << j.dump() << "\n";
      break;
    }
    case Format::Csv:
      std::cout << "x,word,period,checked_ks,all_equal"
                << (min_period ? ",min_period_bruteforce" : "") << "\n"
                << report.x << "," << report.word << "," << report.period << ","
                << report.checked_ks << "," << (report.all_equal ? "true" : "false");
      if (min_period) std::cout << "," << *min_period;
      std::cout << "\n";
      break;
  }
  if (!report.all_equal) return kExitVerificationFailure;
  if (min_period && !(*min_period == report.period)) return kExitVerificationFailure;
  return kExitOk;
}

int run_verify_range(const std::string& lo_expr, const std::string& hi_expr,
                     unsigned jobs, uint64_t step_cap, uint64_t chunk_size,
                     const std::string& checkpoint, uint64_t exp_limit,
                     Format format) {
  const BigInt lo = collatz::eval_int_expr(lo_expr, exp_limit);
  const BigInt hi = collatz::eval_int_expr(hi_expr, exp_limit);
  collatz::VerifyOptions options;
  options.jobs = jobs;
  options.step_cap = step_cap;
  options.chunk_size = chunk_size;
  if (!checkpoint.empty()) options.checkpoint_path = checkpoint;
  options.progress = [](uint64_t done, uint64_t total) {
    const uint64_t stride = total > 200 ? total / 100 : 1;
    if (done % stride == 0 || done == total)
      std::cerr << "verify-range: " << done << "/" << total << " chunks\r"
                << (done == total ? "\n" : "") << std::flush;
  };
  const auto report = collatz::verify_range(lo, hi, options);
  switch (format) {
    case Format::Text:
      std::cout << "range: [" << report.lo << ", " << report.hi << "]\n"
                << "verified: " << report.verified_count << "\n"
                << "failures: " << report.failures.size() << "\n"
                << "max_word_len: " << report.max_word_len << "\n"
                << "histogram (length: count):\n";
      for (const auto& [len, count] : report.length_histogram)
        std::cout << "  " << len << ": " << count << "\n";
      for (const auto& failure : report.failures)
        std::cout << "failure: x=" << failure.x << " (" << failure.reason << ")\n";
      break;
    case Format::Json:
      std::cout << collatz::to_json(report) << "\n";
      break;
    case Format::Csv:
      std::cout << collatz::histogram_csv(report);
      break;
  }
  return report.failures.empty() ? kExitOk : kExitVerificationFailure;
}

int run_coverage(uint64_t level, const std::string& cross_check_expr,
                 size_t sample_limit, uint64_t exp_limit, Format format) {
  const auto report = collatz::coverage(level, sample_limit);
  std::optional<bool> cross_ok;
  if (!cross_check_expr.empty()) {
    const BigInt n = collatz::eval_int_expr(cross_check_expr, exp_limit);
    cross_ok = collatz::cross_check_coverage(level, n);
  }
  switch (format) {
    case Format::Text: {
      std::cout << "level: " << report.exponent << "\n"
                << "covered: " << report.covered_residues << " / "
                << report.total_residues << "\n";
      std::cout << "uncovered sample:";
      for (const auto& rep : report.uncovered_sample) std::cout << ' ' << rep;
      std::cout << "\n";
      if (cross_ok)
        std::cout << "cross_check: " << (*cross_ok ? "ok" : "FAILED") << "\n";
      break;
    }
    case Format::Json: {
      json j = json::parse(collatz::to_json(report));
      if (cross_ok) j["cross_check"] = *cross_ok;
      std::cout << j.dump() << "\n";
      break;
    }
    case Format::Csv: {
      std::cout << "exponent,covered_residues,total_residues,uncovered_sample"
                << (cross_ok ? ",cross_check" : "") << "\n"
                << report.exponent << "," << report.covered_residues << ","
                << report.total_residues << ",";
      for (size_t i = 0; i < report.uncovered_sample.size(); ++i)
        std::cout << (i ? ";" : "") << report.uncovered_sample[i];
      if (cross_ok) std::cout << "," << (*cross_ok ? "true" : "false");
      std::cout << "\n";
      break;
    }
  }
  if (cross_ok && !*cross_ok) return kExitVerificationFailure;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduced Collatz dynamics: words, periods, residue classes, "
               "and range verification over arbitrary-precision integers"};
  app.require_subcommand(1);

  uint64_t exp_limit = collatz::kDefaultExponentLimit;
  app.add_option("--exp-limit", exp_limit,
                 "Largest exponent allowed in integer expressions")
      ->capture_default_str();

  std::string expr, expr_hi, word_text, checkpoint, cross_check_expr, format_name;
  uint64_t step_cap = collatz::kDefaultReducedStepCap;
  uint64_t orbit_step_cap = collatz::kDefaultOriginalStepCap;
  uint64_t max_len = 0, k_max = 3, chunk_size = 1u << 16, level = 0;
  size_t sample_limit = 10;
  unsigned jobs = default_jobs();
  bool trace = false, counts_only = false, min_brute = false;

  auto* dr = app.add_subcommand("dr", "Reduced dynamics d_r(x)");
  dr->add_option("expr", expr, "Starting integer (expression)")->required();
  dr->add_option("--step-cap", step_cap, "Abort after this many steps")
      ->capture_default_str();
  dr->add_flag("--trace", trace, "Show intermediate values (text format)");
  add_format_option(dr, format_name);

  auto* orbit = app.add_subcommand("orbit", "Original dynamics d(x) down to 1");
  orbit->add_option("expr", expr, "Starting integer (expression)")->required();
  orbit->add_option("--step-cap", orbit_step_cap, "Abort after this many steps")
      ->capture_default_str();
  orbit->add_flag("--counts-only", counts_only, "Print step counts, not the word");
  add_format_option(orbit, format_name);

  auto* apply = app.add_subcommand("apply", "Apply a word to an integer");
  apply->add_option("word", word_text, "Word over {I,O}, e.g. IIOO")->required();
  apply->add_option("expr", expr, "Starting integer (expression)")->required();
  apply->add_flag("--trace", trace, "Show intermediate values (text format)");
  add_format_option(apply, format_name);

  auto* enum_cmd = app.add_subcommand("enum", "Enumerate valid reduced words");
  enum_cmd->add_option("--max-len", max_len, "Maximum word length")->required();
  add_format_option(enum_cmd, format_name);

  auto* residue = app.add_subcommand("residue", "Residue class owned by a word");
  residue->add_option("word", word_text, "Word over {I,O}")->required();
  add_format_option(residue, format_name);

  auto* classes = app.add_subcommand("classes", "Word-to-residue-class table");
  classes->add_option("--max-len", max_len, "Maximum word length")->required();
  classes->add_option("--step-cap", step_cap, "Cross-validation step cap")
      ->capture_default_str();
  add_format_option(classes, format_name);

  auto* period = app.add_subcommand("period", "Period of the reduced dynamics");
  period->add_option("expr", expr, "Starting integer (expression)")->required();
  period->add_option("--k", k_max, "Check d_r(x + k*2^L) for k = 1..K")
      ->capture_default_str();
  period->add_flag("--min-brute", min_brute,
                   "Also find the minimal period by linear search");
  period->add_option("--step-cap", step_cap, "Abort after this many steps")
      ->capture_default_str();
  add_format_option(period, format_name);

  auto* verify = app.add_subcommand("verify-range",
                                    "Verify reduced dynamics over [lo, hi]");
  verify->add_option("lo", expr, "Lower bound (expression, >= 2)")->required();
  verify->add_option("hi", expr_hi, "Upper bound (expression)")->required();
  verify->add_option("--jobs", jobs, "Worker threads (default: COLLATZ_JOBS or all cores)");
  verify->add_option("--step-cap", step_cap, "Per-integer step cap")
      ->capture_default_str();
  verify->add_option("--chunk-size", chunk_size, "Integers per work unit")
      ->capture_default_str();
  verify->add_option("--checkpoint", checkpoint,
                     "Checkpoint file to write and resume from");
  add_format_option(verify, format_name);

  auto* coverage = app.add_subcommand("coverage",
                                      "Residue coverage at modulus 2^level");
  coverage->add_option("--level", level, "Modulus exponent L")->required();
  coverage->add_option("--cross-check", cross_check_expr,
                       "Sweep x in [2, N] and compare against |d_r(x)|");
  coverage->add_option("--sample-limit", sample_limit,
                       "Max uncovered representatives to list")
      ->capture_default_str();
  add_format_option(coverage, format_name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const Format format = parse_format(format_name);
    if (dr->parsed()) return run_dr(expr, step_cap, exp_limit, trace, format);
    if (orbit->parsed())
      return run_orbit(expr, orbit_step_cap, exp_limit, counts_only, format);
    if (apply->parsed())
      return run_apply(word_text, expr, exp_limit, trace, format);
    if (enum_cmd->parsed()) return run_enum(max_len, format);
    if (residue->parsed()) return run_residue(word_text, format);
    if (classes->parsed()) return run_classes(max_len, step_cap, format);
    if (period->parsed())
      return run_period(expr, k_max, min_brute, step_cap, exp_limit, format);
    if (verify->parsed())
      return run_verify_range(expr, expr_hi, jobs, step_cap, chunk_size,
                              checkpoint, exp_limit, format);
    if (coverage->parsed())
      return run_coverage(level, cross_check_expr, sample_limit, exp_limit, format);
    std::cerr << "no subcommand selected\n";
    return kExitUsage;
  } catch (const collatz::CapExceededError& e) {
    std::cerr << "potential counterexample or cap too low: " << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (const collatz::InternalConsistencyError& e) {
    std::cerr << "internal consistency error: " << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (const collatz::CheckpointIoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const collatz::CheckpointResumeError& e) {
    std::cerr << "checkpoint resume error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
