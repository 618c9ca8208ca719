#pragma once

#include <random>
#include <vector>

#include "polygcd/linalg.hpp"
#include "polygcd/poly.hpp"

namespace polygcd::testing {

/// Monic polynomial of degree uniform in [1, max_degree], lower coefficients
/// uniform in [lo, hi].
inline MonicIntPoly random_monic(std::mt19937_64& rng, int max_degree, int lo, int hi) {
  std::uniform_int_distribution<int> deg(1, max_degree);
  std::uniform_int_distribution<int> coeff(lo, hi);
  std::vector<Integer> c{1};
  for (int i = deg(rng); i > 0; --i) c.push_back(coeff(rng));
  return MonicIntPoly(std::move(c));
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim, int lo, int hi) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_int_distribution<int> entry(lo, hi);
  const std::size_t rows = dim(rng), cols = dim(rng);
  std::vector<Integer> e;
  for (std::size_t i = 0; i < rows * cols; ++i) e.push_back(entry(rng));
  return IntMatrix(rows, cols, std::move(e));
}

/// Every monic polynomial of exactly this degree with lower coefficients in
/// [0, p).
inline std::vector<MonicIntPoly> all_monic(int degree, int p) {
  std::vector<MonicIntPoly> out;
  std::vector<int> digits(static_cast<std::size_t>(degree), 0);
  for (;;) {
    std::vector<Integer> c{1};
    for (int d : digits) c.push_back(d);
    out.emplace_back(std::move(c));
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  return out;
}

}  // namespace polygcd::testing
