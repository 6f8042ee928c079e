#pragma once

#include <string>

#include "collatz/dynamics.hpp"
#include "collatz/enumerate.hpp"
#include "collatz/period.hpp"
#include "collatz/sieve.hpp"

namespace collatz {

/// {"start","word","final","stopping_time","cnt_3x1","cnt_half_total"},
/// every integer as a decimal string. The step counts are derived from the
/// word: stopping_time = cnt_half_total = |word|, cnt_3x1 = cnt_i.
std::string to_json(const OrbitRecord& record);

/// {"x","word","period","checked_ks","all_equal"}, integers as decimal strings.
std::string to_json(const PeriodReport& report);

/// {"word","residue","modulus_exp","representative"}; residue and
/// representative are decimal strings, modulus_exp a plain number. One
/// line of the class-table format.
std::string to_json(const ClassEntry& entry);

/// {"word","residue","modulus_exp"}.
std::string to_json(const ResidueClass& cls, const Word& word);

/// {"lo","hi","verified_count","max_word_len","length_histogram","failures"};
/// lo, hi and failure x values are decimal strings, counts plain numbers.
std::string to_json(const RangeReport& report);

/// {"exponent","covered_residues","total_residues","uncovered_sample"};
/// sample entries are decimal strings.
std::string to_json(const CoverageReport& report);

/// Histogram CSV with header "length,count".
std::string histogram_csv(const RangeReport& report);

}  // namespace collatz
