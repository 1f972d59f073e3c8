#pragma once

// Verification sweeps shared by the command-line tool and the test suites.

#include <cstddef>
#include <string>
#include <vector>

namespace cjp {

struct SuiteResult {
  std::string name;
  bool pass = true;
  std::size_t checks = 0;
  std::vector<std::string> failures;
};

struct SymfunSweep {
  int max_g = 3;
  int max_color = 4;
  int max_p = 3;
};

// verify_coefficients for every ordered color vector of length <= max_g with
// entries in 1..max_color, and every p in 1..max_p.
SuiteResult run_symfun_suite(const SymfunSweep& sweep = {});

struct TorusPair {
  int r = 0;
  int s = 0;
};

const std::vector<TorusPair>& default_bracket_pairs();

// Engine value J(cable(r,s;1;unknot); 2,...,2) / [2] against the bracket
// Jones polynomial of the closed torus braid, up to sign, monomial and mirror.
SuiteResult run_bracket_suite(const std::vector<TorusPair>& pairs = default_bracket_pairs());

}  // namespace cjp
