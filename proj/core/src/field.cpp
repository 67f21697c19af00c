#include "tilecert/field.hpp"

#include <stdexcept>

namespace tilecert {

uint32_t pow_mod(uint32_t base, uint64_t exp, uint32_t p) {
  uint64_t r = 1 % p, b = base % p;
  while (exp) {
    if (exp & 1) r = r * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return (uint32_t)r;
}

uint32_t inv_mod(uint32_t a, uint32_t p) {
  if (a % p == 0) throw std::domain_error("inv_mod: zero element");
  return pow_mod(a, p - 2, p);  // p prime
}

MatrixModP::MatrixModP(int rows, int cols, uint32_t p)
    : rows_(rows), cols_(cols), p_(p), a_((size_t)rows * cols, 0) {
  if (rows < 0 || cols < 0)
    throw std::invalid_argument("MatrixModP: negative shape");
}

int rank(MatrixModP m) {
  const uint32_t p = m.prime();
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = c; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
    uint32_t inv = inv_mod(m.at(r, c), p);
    for (int i = r + 1; i < m.rows(); ++i) {
      uint32_t f = m.at(i, c);
      if (f == 0) continue;
      uint32_t fac = mul_mod(f, inv, p);
      m.at(i, c) = 0;
      for (int j = c + 1; j < m.cols(); ++j)
        m.at(i, j) = sub_mod(m.at(i, j), mul_mod(fac, m.at(r, j), p), p);
    }
    ++r;
  }
  return r;
}

uint32_t determinant(MatrixModP m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant: matrix not square");
  const uint32_t p = m.prime();
  const int n = m.rows();
  uint32_t det = 1 % p;
  bool neg = false;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = c; j < n; ++j) std::swap(m.at(piv, j), m.at(c, j));
      neg = !neg;
    }
    det = mul_mod(det, m.at(c, c), p);
    uint32_t inv = inv_mod(m.at(c, c), p);
    for (int i = c + 1; i < n; ++i) {
      uint32_t f = m.at(i, c);
      if (f == 0) continue;
      uint32_t fac = mul_mod(f, inv, p);
      for (int j = c + 1; j < n; ++j)
        m.at(i, j) = sub_mod(m.at(i, j), mul_mod(fac, m.at(c, j), p), p);
    }
  }
  return neg ? (p - det) % p : det;
}

uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

uint64_t derive_seed(uint64_t seed, std::string_view label) {
  // FNV-1a over the label, folded into the base seed and mixed once.
  uint64_t h = 0xcbf29ce484222325ull;
  for (char c : label) {
    h ^= (unsigned char)c;
    h *= 0x100000001b3ull;
  }
  uint64_t s = seed ^ h;
  return splitmix64(s);
}

std::vector<uint32_t> seeded_points(uint64_t seed, int count, uint32_t p) {
  if (count < 0) throw std::invalid_argument("seeded_points: negative count");
  std::vector<uint32_t> out;
  out.reserve((size_t)2 * count);
  uint64_t state = seed;
  for (int i = 0; i < 2 * count; ++i)
    out.push_back(1 + (uint32_t)(splitmix64(state) % (p - 1)));
  return out;
}

}  // namespace tilecert
