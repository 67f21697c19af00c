#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tilecert/diagram.hpp"
#include "tilecert/field.hpp"

namespace tilecert {

// One linear system: polynomials supported on `diagram` vanishing to order
// mults[i] at the i-th generic point.
struct SystemSpec {
  Diagram diagram;
  std::vector<int> mults;  // zero entries permitted; they contribute no rows
};

// Row (i, dx, dy): the condition d^(dx+dy) f / dX^dx dY^dy (x_i, y_i) = 0.
struct ConditionRow {
  int point_index;  // 1-based
  int dx;
  int dy;
};

// EmptyByCount is a pure count statement (edim = -1 with rows > cols) used
// for reporting; specialty_test itself decides by rank and never returns it.
enum class VerdictKind { NonSpecialCertified, ProbablySpecial, EmptyByCount };

struct SpecialtyVerdict {
  VerdictKind kind;
  int rank = 0;
  int rows = 0;
  int cols = 0;
  long long edim = 0;
  uint64_t seed = 0;  // witness seed for certified verdicts
  int trials = 0;
  // Upper bound on the probability that a ProbablySpecial verdict is wrong;
  // 0 for certified verdicts.
  double failure_bound = 0.0;

  bool is_special() const { return kind == VerdictKind::ProbablySpecial; }
};

const char* to_string(VerdictKind k);

long long binom2(long long m);  // C(m+1, 2)

// max{-1, (d+1)(e+1) - sum C(m_i+1,2) - 1}
long long expected_dimension(int d, int e, const std::vector<int>& mults);
// Same with #D in place of (d+1)(e+1).
long long expected_dimension(const SystemSpec& spec);

// Rows ordered by point index, then total derivative order, then dx.
std::vector<ConditionRow> build_matrix_rows(const SystemSpec& spec);

// Entry for row (i, a, b) and column (d1, d2):
//   d1(d1-1)...(d1-a+1) * d2(d2-1)...(d2-b+1) * x_i^(d1-a) * y_i^(d2-b),
// zero when a > d1 or b > d2. Columns follow the diagram's lexicographic
// point order; `points` holds x_1, y_1, ..., x_r, y_r.
MatrixModP evaluate_matrix(const SystemSpec& spec,
                           const std::vector<uint32_t>& points,
                           uint32_t p = kDefaultPrime);

// Randomized specialty verdict: a single full-rank evaluation certifies
// non-specialty (one-sided); otherwise the system is reported special with a
// Schwartz-Zippel failure bound of (deg/(p-1))^trials.
SpecialtyVerdict specialty_test(const SystemSpec& spec, uint64_t seed,
                                int trials, uint32_t p = kDefaultPrime);

// True iff a nonzero curve of total degree <= m-1 passes through all points
// of d (d special of degree m). Integer rank over two fixed primes; a
// disagreement between the primes throws.
bool diagram_degree_specialty(const Diagram& d, int m);

// Same verdict, memoized on (canonical_form(d), m).
bool diagram_degree_specialty_cached(const Diagram& d, int m);

// Checks the monomial form of det M_D(m) for a non-special d: evaluated at
// (x*t, y*u) the determinant scales by t^(sum d1 - C(m+1,3)) *
// u^(sum d2 - C(m+1,3)). Returns true on agreement.
bool single_point_monomial_check(const Diagram& d, int m, uint64_t seed);

}  // namespace tilecert
