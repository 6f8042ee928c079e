#include <doctest.h>

#include <nlohmann/json.hpp>

#include "collatz/bigint.hpp"
#include "collatz/dynamics.hpp"
#include "collatz/enumerate.hpp"
#include "collatz/period.hpp"
#include "collatz/serialize.hpp"
#include "collatz/sieve.hpp"

using collatz::BigInt;
using collatz::Word;
using json = nlohmann::json;

TEST_SUITE("serialize") {

TEST_CASE("orbit record schema") {
  const auto record = collatz::reduced_dynamics(BigInt(3));
  const json j = json::parse(collatz::to_json(record));
  CHECK(j.at("start") == "3");
  CHECK(j.at("word") == "IIOO");
  CHECK(j.at("final") == "2");
  CHECK(j.at("stopping_time") == "4");
  CHECK(j.at("cnt_3x1") == "2");
  CHECK(j.at("cnt_half_total") == "4");
  CHECK(j.size() == 6);
}

TEST_CASE("class entry line matches the documented shape exactly") {
  const auto entry = collatz::make_class_entry(Word("IIOO"));
  CHECK(collatz::to_json(entry) ==
        R"({"word":"IIOO","residue":"3","modulus_exp":4,"representative":"3"})");
}

TEST_CASE("period report schema") {
  const auto report = collatz::verify_period(BigInt(3), 2);
  const json j = json::parse(collatz::to_json(report));
  CHECK(j.at("x") == "3");
  CHECK(j.at("word") == "IIOO");
  CHECK(j.at("period") == "16");
  CHECK(j.at("checked_ks") == "2");
  CHECK(j.at("all_equal") == true);
}

TEST_CASE("range report schema and histogram csv") {
  const auto report = collatz::verify_range(BigInt(2), BigInt(10));
  const json j = json::parse(collatz::to_json(report));
  CHECK(j.at("lo") == "2");
  CHECK(j.at("hi") == "10");
  CHECK(j.at("verified_count") == 9);
  CHECK(j.at("failures").is_array());
  CHECK(j.at("length_histogram").at("1") == 5);  // 2,4,6,8,10

  const std::string csv = collatz::histogram_csv(report);
  CHECK(csv.rfind("length,count\n", 0) == 0);
  CHECK(csv.find("1,5\n") != std::string::npos);
}

TEST_CASE("coverage report schema") {
  const auto report = collatz::coverage(4);
  const json j = json::parse(collatz::to_json(report));
  CHECK(j.at("exponent") == 4);
  CHECK(j.at("covered_residues") == 13);
  CHECK(j.at("total_residues") == 16);
  CHECK(j.at("uncovered_sample") == json::array({"7", "11", "15"}));
}

TEST_CASE("residue class schema") {
  const auto cls = collatz::residue_of_word(Word("IIOIO"));
  const json j = json::parse(collatz::to_json(cls, Word("IIOIO")));
  CHECK(j.at("word") == "IIOIO");
  CHECK(j.at("residue") == "11");
  CHECK(j.at("modulus_exp") == 5);
}

}  // TEST_SUITE
