#pragma once

#include <cstdint>
#include <vector>

#include "tilecert/interp.hpp"

namespace tilecert {

// One bidegree-(d,e) system with p, q, r base points of multiplicity 1, 2, 3.
// Requires 0 <= d <= e (specialty is symmetric under transposing).
struct ClassificationCase {
  int d = 0, e = 0;
  int p = 0, q = 0, r = 0;
};

// The classification predicate: true iff the system is special according to
// the closed-form conditions for multiplicities up to 3.
bool predicted_special(const ClassificationCase& c);

struct Discrepancy {
  ClassificationCase c;
  bool predicted = false;
  SpecialtyVerdict verdict;
};

struct SweepReport {
  long long cases_checked = 0;
  std::vector<Discrepancy> discrepancies;
};

// Exhaustive comparison of the predicate against randomized rank verdicts
// over all cases with 0 <= d <= e <= max_e and p+3q+6r <= (d+1)(e+1)+slack.
SweepReport verify_range(int max_e, int slack, uint64_t seed, int trials,
                         uint32_t prime = kDefaultPrime);

}  // namespace tilecert
