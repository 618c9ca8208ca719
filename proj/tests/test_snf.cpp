#include <doctest.h>

#include <random>

#include "polygcd/linalg.hpp"
#include "polygcd/modp.hpp"
#include "polygcd/snf.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace polygcd;
using polygcd::testing::minor_gcd_invariants;
using polygcd::testing::random_matrix;
using polygcd::testing::random_monic;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }
IntMatrix rows(std::vector<std::vector<Integer>> r) { return IntMatrix::from_rows(r); }

void check_snf(const IntMatrix& m) {
  const SnfResult s = smith_normal_form(m);
  const auto& d = s.invariant_factors;
  REQUIRE(d.size() == std::min(m.rows(), m.cols()));
  IntMatrix diag(m.rows(), m.cols());
  for (std::size_t i = 0; i < d.size(); ++i) diag(i, i) = d[i];
  CHECK(s.u * m * s.v == diag);
  CHECK(abs(det_bareiss(s.u)) == 1);
  CHECK(abs(det_bareiss(s.v)) == 1);
  for (std::size_t i = 0; i < d.size(); ++i) {
    CHECK(d[i] >= 0);
    if (i + 1 < d.size()) CHECK(divides(d[i], d[i + 1]));
  }
  if (m.is_square()) {
    Integer prod = 1;
    for (const auto& v : d) prod *= v;
    CHECK(prod == abs(det_bareiss(m)));
  }
  CHECK(d == minor_gcd_invariants(m));
}

}  // namespace

TEST_CASE("smith_normal_form examples") {
  CHECK(invariant_factors(rows({{2, 0}, {0, 3}})) == ints({1, 6}));
  CHECK(invariant_factors(IntMatrix::identity(3)) == ints({1, 1, 1}));
  CHECK(invariant_factors(sylvester_matrix(parse_monic("x^2+3"), parse_monic("x^2+2*x+4"))) ==
        ints({1, 1, 1, 13}));
  CHECK(invariant_factors(sylvester_matrix(parse_monic("x^2-1"), parse_monic("x^2+1"))) ==
        ints({1, 1, 2, 2}));
  CHECK(invariant_factors(IntMatrix(2, 2)) == ints({0, 0}));
  CHECK(invariant_factors(rows({{1, 1}, {1, -1}})) == ints({1, 2}));
  CHECK(invariant_factors(rows({{-4}})) == ints({4}));
  CHECK(invariant_factors(rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})) == ints({2, 6, 12}));
  CHECK(invariant_factors(rows({{0, 0, 0}, {0, 0, 5}})) == ints({5, 0}));
}

TEST_CASE("smith_normal_form satisfies its contract on edge shapes") {
  check_snf(rows({{0}}));
  check_snf(rows({{0, 0}, {0, 7}}));
  check_snf(rows({{6, 10, 15}}));
  check_snf(rows({{6}, {10}, {15}}));
  check_snf(rows({{4, 0}, {0, 6}}));
  check_snf(sylvester_matrix(parse_monic("x^2-1"), parse_monic("x^2+1")));
}

TEST_CASE("property: random matrices against the minor-gcd oracle") {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 300; ++iter) check_snf(random_matrix(rng, 5, -9, 9));
}

TEST_CASE("property: invariant factors divisible by p count the corank mod p") {
  std::mt19937_64 rng(32);
  for (int iter = 0; iter < 200; ++iter) {
    const IntMatrix m = random_matrix(rng, 5, -9, 9);
    const auto d = invariant_factors(m);
    for (int p : {2, 3, 5, 7}) {
      std::size_t divisible = 0;
      for (const auto& v : d) divisible += divides(Integer(p), v) ? 1 : 0;
      CHECK(std::min(m.rows(), m.cols()) - rank_mod_p(m, p) == divisible);
    }
  }
}

TEST_CASE("property: p || det gives exactly one invariant factor divisible by p") {
  std::mt19937_64 rng(33);
  int seen = 0;
  for (int iter = 0; iter < 3000 && seen < 100; ++iter) {
    const MonicIntPoly f = random_monic(rng, 4, -9, 9);
    const MonicIntPoly g = random_monic(rng, 4, -9, 9);
    const IntMatrix m = sylvester_matrix(f, g);
    const Integer r = det_bareiss(m);
    if (r == 0) continue;
    const auto d = invariant_factors(m);
    for (int p : {2, 3, 5, 7, 11, 13}) {
      const Integer P = p;
      if (!divides(P, r)) continue;
      std::size_t divisible = 0;
      for (const auto& v : d) divisible += divides(P, v) ? 1 : 0;
      if (!divides(Integer(P * P), r)) {
        ++seen;
        CHECK(divisible == 1);
        CHECK(divides(P, d.back()));
      }
      // p^p does not divide r: at most p - 1 factors (the last ones) carry p.
      if (!divides(ipow(P, static_cast<unsigned long>(p)), r)) {
        CHECK(divisible <= static_cast<std::size_t>(p - 1));
        for (std::size_t i = 0; i + divisible < d.size(); ++i) CHECK_FALSE(divides(P, d[i]));
      }
    }
  }
  CHECK(seen >= 100);
}
