#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace tilecert {

// Default evaluation prime (Mersenne, 2^31 - 1) and the second prime used by
// the two-prime integer rank checks (2^31 - 19).
inline constexpr uint32_t kDefaultPrime = 2147483647u;
inline constexpr uint32_t kAltPrime = 2147483629u;

inline uint32_t add_mod(uint32_t a, uint32_t b, uint32_t p) {
  uint64_t s = (uint64_t)a + b;
  return (uint32_t)(s >= p ? s - p : s);
}
inline uint32_t sub_mod(uint32_t a, uint32_t b, uint32_t p) {
  return a >= b ? a - b : (uint32_t)(a + (uint64_t)p - b);
}
inline uint32_t mul_mod(uint32_t a, uint32_t b, uint32_t p) {
  return (uint32_t)((uint64_t)a * b % p);
}
uint32_t pow_mod(uint32_t base, uint64_t exp, uint32_t p);
uint32_t inv_mod(uint32_t a, uint32_t p);

// Dense row-major matrix over Z/p.
class MatrixModP {
 public:
  MatrixModP(int rows, int cols, uint32_t p);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  uint32_t prime() const { return p_; }

  uint32_t& at(int r, int c) { return a_[(size_t)r * cols_ + c]; }
  uint32_t at(int r, int c) const { return a_[(size_t)r * cols_ + c]; }

 private:
  int rows_;
  int cols_;
  uint32_t p_;
  std::vector<uint32_t> a_;
};

// Rank by in-place Gaussian elimination with row pivoting; deterministic.
int rank(MatrixModP m);

// Determinant mod p; requires a square matrix.
uint32_t determinant(MatrixModP m);

// splitmix64 step; the one PRNG of the project. All randomness derives from
// a single 64-bit seed through this generator and derive_seed.
inline constexpr const char* kPrngName = "splitmix64";
uint64_t splitmix64(uint64_t& state);

// Independent labeled substream of a base seed.
uint64_t derive_seed(uint64_t seed, std::string_view label);

// 2*count field elements drawn uniformly from [1, p); deterministic in seed.
std::vector<uint32_t> seeded_points(uint64_t seed, int count,
                                    uint32_t p = kDefaultPrime);

}  // namespace tilecert
