#include "tilecert/interp.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace tilecert {

const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::NonSpecialCertified:
      return "NonSpecialCertified";
    case VerdictKind::ProbablySpecial:
      return "ProbablySpecial";
    case VerdictKind::EmptyByCount:
      return "EmptyByCount";
  }
  return "?";
}

long long binom2(long long m) { return m * (m + 1) / 2; }

long long expected_dimension(int d, int e, const std::vector<int>& mults) {
  long long v = (long long)(d + 1) * (e + 1) - 1;
  for (int m : mults) v -= binom2(m);
  return std::max(-1ll, v);
}

long long expected_dimension(const SystemSpec& spec) {
  long long v = spec.diagram.size() - 1ll;
  for (int m : spec.mults) v -= binom2(m);
  return std::max(-1ll, v);
}

std::vector<ConditionRow> build_matrix_rows(const SystemSpec& spec) {
  std::vector<ConditionRow> rows;
  for (int i = 0; i < (int)spec.mults.size(); ++i) {
    int m = spec.mults[i];
    if (m < 0) throw std::invalid_argument("negative multiplicity");
    for (int tot = 0; tot < m; ++tot)
      for (int a = tot; a >= 0; --a) rows.push_back({i + 1, a, tot - a});
  }
  return rows;
}

namespace {

// Falling factorial d*(d-1)*...*(d-k+1) mod p.
uint32_t falling(int d, int k, uint32_t p) {
  uint32_t v = 1 % p;
  for (int j = 0; j < k; ++j) v = mul_mod(v, (uint32_t)((d - j) % (long long)p), p);
  return v;
}

}  // namespace

MatrixModP evaluate_matrix(const SystemSpec& spec,
                           const std::vector<uint32_t>& points, uint32_t p) {
  const auto rows = build_matrix_rows(spec);
  const auto& cols = spec.diagram.points();
  if (points.size() != 2 * spec.mults.size())
    throw std::invalid_argument("evaluate_matrix: need 2r field elements");

  int maxx = spec.diagram.max_x(), maxy = spec.diagram.max_y();
  // Power tables per point.
  int r = (int)spec.mults.size();
  std::vector<std::vector<uint32_t>> px(r), py(r);
  for (int i = 0; i < r; ++i) {
    px[i].assign(maxx + 1, 1 % p);
    py[i].assign(maxy + 1, 1 % p);
    for (int k = 1; k <= maxx; ++k)
      px[i][k] = mul_mod(px[i][k - 1], points[2 * i] % p, p);
    for (int k = 1; k <= maxy; ++k)
      py[i][k] = mul_mod(py[i][k - 1], points[2 * i + 1] % p, p);
  }

  MatrixModP m((int)rows.size(), (int)cols.size(), p);
  for (int ri = 0; ri < (int)rows.size(); ++ri) {
    const ConditionRow& row = rows[ri];
    int i = row.point_index - 1;
    for (int ci = 0; ci < (int)cols.size(); ++ci) {
      const Point& d = cols[ci];
      if (row.dx > d.x || row.dy > d.y) continue;
      uint32_t v = mul_mod(falling(d.x, row.dx, p), falling(d.y, row.dy, p), p);
      v = mul_mod(v, px[i][d.x - row.dx], p);
      v = mul_mod(v, py[i][d.y - row.dy], p);
      m.at(ri, ci) = v;
    }
  }
  return m;
}

SpecialtyVerdict specialty_test(const SystemSpec& spec, uint64_t seed,
                                int trials, uint32_t p) {
  if (trials < 1) throw std::invalid_argument("specialty_test: trials < 1");
  long long nrows = 0;
  for (int m : spec.mults) nrows += binom2(m);
  long long ncols = spec.diagram.size();
  if (nrows == 0 || ncols == 0)
    throw std::invalid_argument("specialty_test: zero rows or columns");

  SpecialtyVerdict v;
  v.rows = (int)nrows;
  v.cols = (int)ncols;
  v.edim = expected_dimension(spec);
  v.trials = trials;
  const int full = (int)std::min(nrows, ncols);

  int best = 0;
  uint64_t last_seed = 0;
  for (int t = 0; t < trials; ++t) {
    uint64_t ts = derive_seed(seed, "specialty-trial:" + std::to_string(t));
    auto pts = seeded_points(ts, (int)spec.mults.size(), p);
    int rk = rank(evaluate_matrix(spec, pts, p));
    last_seed = ts;
    if (rk > best) best = rk;
    if (rk == full) {
      v.kind = VerdictKind::NonSpecialCertified;
      v.rank = rk;
      v.seed = ts;
      v.trials = t + 1;
      v.failure_bound = 0.0;
      return v;
    }
  }
  v.kind = VerdictKind::ProbablySpecial;
  v.rank = best;
  v.seed = last_seed;
  int maxdeg = 0;
  for (const Point& q : spec.diagram.points())
    maxdeg = std::max(maxdeg, q.x + q.y);
  double per_trial = (double)full * maxdeg / (double)(p - 1);
  v.failure_bound = std::pow(per_trial, trials);
  return v;
}

namespace {

bool degree_specialty_one_prime(const Diagram& d, int m, uint32_t p) {
  const int s = (int)binom2(m);
  MatrixModP mat(s, s, p);
  int ri = 0;
  for (const Point& pt : d.points()) {
    int ci = 0;
    for (int a = 0; a <= m - 1; ++a)
      for (int b = 0; a + b <= m - 1; ++b) {
        mat.at(ri, ci) = mul_mod(pow_mod((uint32_t)(pt.x % (long long)p), a, p),
                                 pow_mod((uint32_t)(pt.y % (long long)p), b, p),
                                 p);
        ++ci;
      }
    ++ri;
  }
  return rank(std::move(mat)) < s;
}

}  // namespace

bool diagram_degree_specialty(const Diagram& d, int m) {
  if (m < 1 || d.size() != binom2(m))
    throw std::invalid_argument(
        "diagram_degree_specialty: #D must equal C(m+1,2)");
  bool s1 = degree_specialty_one_prime(d, m, kDefaultPrime);
  bool s2 = degree_specialty_one_prime(d, m, kAltPrime);
  if (s1 != s2)
    throw std::runtime_error(
        "diagram_degree_specialty: verdicts disagree between primes");
  return s1;
}

bool diagram_degree_specialty_cached(const Diagram& d, int m) {
  static std::map<std::pair<int, std::vector<Point>>, bool> cache;
  auto key = std::make_pair(m, canonical_form(d).points());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  bool v = diagram_degree_specialty(d, m);
  cache.emplace(std::move(key), v);
  return v;
}

bool single_point_monomial_check(const Diagram& d, int m, uint64_t seed) {
  if (m < 1 || d.size() != binom2(m))
    throw std::invalid_argument("monomial check: #D must equal C(m+1,2)");
  if (diagram_degree_specialty(d, m))
    throw std::invalid_argument("monomial check: diagram is special");
  const uint32_t p = kDefaultPrime;
  uint64_t state = derive_seed(seed, "monomial-check");
  auto draw = [&] { return 1 + (uint32_t)(splitmix64(state) % (p - 1)); };
  uint32_t x = draw(), y = draw(), t = draw(), u = draw();

  SystemSpec spec{d, {m}};
  uint32_t det1 = determinant(evaluate_matrix(spec, {x, y}, p));
  uint32_t det2 = determinant(
      evaluate_matrix(spec, {mul_mod(x, t, p), mul_mod(y, u, p)}, p));
  if (det1 == 0 || det2 == 0) return false;  // contradicts non-specialty

  // det M_D(m) = A * x^(sum d1 - C(m+1,3)) * y^(sum d2 - C(m+1,3)): every
  // determinant term has the same exponent pair, since the column exponent
  // sums are fixed and the rows remove C(m+1,3) from each axis in total.
  long long shift = (long long)(m + 1) * m * (m - 1) / 6;
  long long ex = d.sum_x() - shift;
  long long ey = d.sum_y() - shift;
  auto spow = [&](uint32_t base, long long e) {
    return e >= 0 ? pow_mod(base, (uint64_t)e, p)
                  : inv_mod(pow_mod(base, (uint64_t)(-e), p), p);
  };
  uint32_t expect = mul_mod(det1, mul_mod(spow(t, ex), spow(u, ey), p), p);
  return det2 == expect;
}

}  // namespace tilecert
