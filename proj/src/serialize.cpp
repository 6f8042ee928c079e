#include "collatz/serialize.hpp"

#include <nlohmann/json.hpp>

namespace collatz {

namespace {
using json = nlohmann::ordered_json;
}

std::string to_json(const OrbitRecord& record) {
  const json j{{"start", record.start.to_decimal()},
               {"word", record.word.text()},
               {"final", record.final_value.to_decimal()},
               {"stopping_time", std::to_string(record.word.size())},
               {"cnt_3x1", std::to_string(record.word.cnt_i())},
               {"cnt_half_total", std::to_string(record.word.size())}};
  return j.dump();
}

std::string to_json(const PeriodReport& report) {
  const json j{{"x", report.x.to_decimal()},
               {"word", report.word.text()},
               {"period", report.period.to_decimal()},
               {"checked_ks", std::to_string(report.checked_ks)},
               {"all_equal", report.all_equal}};
  return j.dump();
}

std::string to_json(const ClassEntry& entry) {
  const json j{{"word", entry.word.text()},
               {"residue", entry.cls.residue.to_decimal()},
               {"modulus_exp", entry.cls.exponent},
               {"representative", entry.representative.to_decimal()}};
  return j.dump();
}

std::string to_json(const ResidueClass& cls, const Word& word) {
  const json j{{"word", word.text()},
               {"residue", cls.residue.to_decimal()},
               {"modulus_exp", cls.exponent}};
  return j.dump();
}

std::string to_json(const RangeReport& report) {
  json hist = json::object();
  for (const auto& [len, count] : report.length_histogram)
    hist[std::to_string(len)] = count;
  json failures = json::array();
  for (const auto& failure : report.failures)
    failures.push_back({{"x", failure.x.to_decimal()}, {"reason", failure.reason}});
  const json j{{"lo", report.lo.to_decimal()},
               {"hi", report.hi.to_decimal()},
               {"verified_count", report.verified_count},
               {"max_word_len", report.max_word_len},
               {"length_histogram", std::move(hist)},
               {"failures", std::move(failures)}};
  return j.dump();
}

std::string to_json(const CoverageReport& report) {
  json sample = json::array();
  for (const auto& rep : report.uncovered_sample) sample.push_back(rep.to_decimal());
  const json j{{"exponent", report.exponent},
               {"covered_residues", report.covered_residues},
               {"total_residues", report.total_residues},
               {"uncovered_sample", std::move(sample)}};
  return j.dump();
}

std::string histogram_csv(const RangeReport& report) {
  std::string csv = "length,count\n";
  for (const auto& [len, count] : report.length_histogram)
    csv += std::to_string(len) + "," + std::to_string(count) + "\n";
  return csv;
}

}  // namespace collatz
