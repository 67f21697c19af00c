#include "tilecert/classify.hpp"

#include <stdexcept>
#include <string>

namespace tilecert {

bool predicted_special(const ClassificationCase& c) {
  if (c.d < 0 || c.e < 0 || c.p < 0 || c.q < 0 || c.r < 0 || c.d > c.e)
    throw std::invalid_argument("predicted_special: need 0 <= d <= e");
  const int d = c.d, e = c.e, p = c.p, q = c.q, r = c.r;

  // (0): parsed as d=0 and p+2q+3r <= e and (q >= 1 or r >= 1)
  if (d == 0 && p + 2 * q + 3 * r <= e && (q >= 1 || r >= 1)) return true;
  // (1)
  if (d == 1 && p + 3 * q + 5 * r <= 2 * e + 1 && r >= 1) return true;
  // (2)
  if (d == 2 && p == 0 && e == q + 2 * r - 1 && (q + r) % 2 == 1) return true;
  // (3.1)-(3.4), n >= 1
  if (d == 3) {
    if (e % 3 == 0) {
      int n = e / 3;
      if (n >= 1 && p == 0 && q == 0 && r == 2 * n + 1) return true;
      if (n >= 1 && p <= 1 && q == 1 && r == 2 * n) return true;
    }
    if (e % 3 == 1) {
      int n = (e - 1) / 3;
      if (n >= 1 && p <= 2 && q == 0 && r == 2 * n + 1) return true;
    }
    if (e % 3 == 2) {
      int n = (e - 2) / 3;
      if (n >= 1 && p == 0 && q == 2 && r == 2 * n + 1) return true;
    }
  }
  // (4)
  if (d == 4 && e == 5 && p == 0 && q == 0 && r == 5) return true;
  return false;
}

SweepReport verify_range(int max_e, int slack, uint64_t seed, int trials,
                         uint32_t prime) {
  SweepReport rep;
  for (int d = 0; d <= max_e; ++d)
    for (int e = d; e <= max_e; ++e) {
      const Diagram rect = Diagram::rect(d + 1, e + 1);
      const long long bound = (long long)(d + 1) * (e + 1) + slack;
      for (int r = 0; 6 * r <= bound; ++r)
        for (int q = 0; 3 * q + 6 * r <= bound; ++q)
          for (int p = 0; p + 3 * q + 6 * r <= bound; ++p) {
            if (p + q + r == 0) continue;  // no conditions, trivially clean
            SystemSpec spec{rect, {}};
            spec.mults.reserve(p + q + r);
            for (int i = 0; i < p; ++i) spec.mults.push_back(1);
            for (int i = 0; i < q; ++i) spec.mults.push_back(2);
            for (int i = 0; i < r; ++i) spec.mults.push_back(3);
            uint64_t cs = derive_seed(
                seed, "classify:" + std::to_string(d) + "," +
                          std::to_string(e) + "," + std::to_string(p) + "," +
                          std::to_string(q) + "," + std::to_string(r));
            SpecialtyVerdict v = specialty_test(spec, cs, trials, prime);
            bool predicted = predicted_special({d, e, p, q, r});
            ++rep.cases_checked;
            if (predicted != v.is_special())
              rep.discrepancies.push_back({{d, e, p, q, r}, predicted, v});
          }
    }
  return rep;
}

}  // namespace tilecert
