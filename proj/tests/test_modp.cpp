#include <doctest.h>

#include <random>

#include "polygcd/errors.hpp"
#include "polygcd/linalg.hpp"
#include "polygcd/modp.hpp"
#include "support/generators.hpp"

using namespace polygcd;
using polygcd::testing::all_monic;
using polygcd::testing::random_monic;

namespace {

const Integer kP52("8936582237915716659950962253358945635793453256935559");
const Integer kN52("8424432925592889329288197322308900672459420460792433");

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

PrimeFieldPoly fp(const char* text, long p) { return PrimeFieldPoly::from(parse_poly(text), p); }

bool divides_poly(const PrimeFieldPoly& d, const PrimeFieldPoly& a) {
  return divrem(a, d).remainder.is_zero();
}

PrimeFieldPoly random_fp(std::mt19937_64& rng, int max_degree, const Integer& p) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<unsigned long> coeff(0, 1ul << 62);
  std::vector<Integer> c;
  for (int i = deg(rng); i >= 0; --i) c.push_back(mod_nonneg(Integer(coeff(rng)), p));
  return PrimeFieldPoly(p, std::move(c));
}

// Monic polynomials over F_p of exactly this degree (degree 0 gives {1}).
std::vector<PrimeFieldPoly> all_monic_fp(int degree, int p) {
  std::vector<PrimeFieldPoly> out;
  std::vector<int> digits(static_cast<std::size_t>(degree), 0);
  for (;;) {
    std::vector<Integer> c{1};
    for (int d : digits) c.push_back(d);
    out.emplace_back(p, std::move(c));
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  return out;
}

}  // namespace

TEST_CASE("poly_gcd_mod_p examples") {
  CHECK(poly_gcd_mod_p(fp("x^2+3", 13), fp("x^2+2*x+4", 13)).coeffs() == ints({1, 7}));
  CHECK(poly_gcd_mod_p(fp("2*x+4", 5), fp("0", 5)).coeffs() == ints({1, 2}));
  CHECK(poly_gcd_mod_p(fp("0", 5), fp("3*x^2+3", 5)).coeffs() == ints({1, 0, 1}));
  CHECK(poly_gcd_mod_p(fp("x^2-1", 2), fp("x^2+1", 2)).coeffs() == ints({1, 0, 1}));
  CHECK(poly_gcd_mod_p(fp("x^2+1", 7), fp("x^3", 7)).coeffs() == ints({1}));
}

TEST_CASE("poly_gcd_mod_p errors") {
  CHECK_THROWS_AS(poly_gcd_mod_p(fp("x", 5), fp("x", 7)), InputError);
  CHECK_THROWS_AS(poly_gcd_mod_p(fp("0", 5), fp("5*x", 5)), InputError);
  CHECK_THROWS_AS(PrimeFieldPoly(15, ints({1, 2})), InputError);
  CHECK_THROWS_AS(PrimeFieldPoly(1, ints({1})), InputError);
  CHECK_THROWS_AS(divrem(fp("x", 5), fp("0", 5)), InputError);
}

TEST_CASE("rank_mod_p examples") {
  const auto s13 = sylvester_matrix(parse_monic("x^2+3"), parse_monic("x^2+2*x+4"));
  CHECK(rank_mod_p(s13, 13) == 3);
  CHECK(rank_mod_p(s13, 11) == 4);
  CHECK(rank_mod_p(IntMatrix::identity(5), 2) == 5);
  CHECK(rank_mod_p(IntMatrix::identity(5), kP52) == 5);
  CHECK(rank_mod_p(sylvester_matrix(parse_monic("x^2-1"), parse_monic("x^2+1")), 2) == 2);
  CHECK(rank_mod_p(IntMatrix(3, 2), 3) == 0);
  CHECK_THROWS_AS(rank_mod_p(IntMatrix::identity(2), 4), InputError);
}

TEST_CASE("common_root_mod_p examples") {
  CHECK(common_root_mod_p(parse_monic("x^2+3"), parse_monic("(x+1)^2+3"), 13) == Integer(6));
  CHECK(common_root_mod_p(parse_monic("x^17+9"), parse_monic("(x+1)^17+9"), kP52) == kN52);
  CHECK_FALSE(common_root_mod_p(parse_monic("x^2-1"), parse_monic("x^2+1"), 2).has_value());
  // Coprime mod 11: no common root at all.
  CHECK_FALSE(common_root_mod_p(parse_monic("x^2+3"), parse_monic("(x+1)^2+3"), 11).has_value());
}

TEST_CASE("the 52-digit root is a common root mod the 52-digit prime") {
  const MonicIntPoly f = parse_monic("x^17+9"), g = parse_monic("(x+1)^17+9");
  CHECK(divides(kP52, eval(f, kN52)));
  CHECK(divides(kP52, eval(g, kN52)));
  const auto d = poly_gcd_mod_p(PrimeFieldPoly::from(f, kP52), PrimeFieldPoly::from(g, kP52));
  CHECK(d.degree() == 1);
}

TEST_CASE("property: corank of the Sylvester matrix mod p is the gcd degree") {
  std::mt19937_64 rng(41);
  for (int p : {2, 3, 5, 7, 13}) {
    for (int iter = 0; iter < 300; ++iter) {
      const MonicIntPoly f = random_monic(rng, 4, 0, p - 1);
      const MonicIntPoly g = random_monic(rng, 4, 0, p - 1);
      const auto m = sylvester_matrix(f, g);
      const auto d = poly_gcd_mod_p(PrimeFieldPoly::from(f, p), PrimeFieldPoly::from(g, p));
      CHECK(m.rows() - rank_mod_p(m, p) == static_cast<std::size_t>(d.degree()));
    }
  }
  // Exhaustive up to degree 2 for p = 7 and 13.
  for (int p : {7, 13}) {
    std::vector<MonicIntPoly> polys = all_monic(1, p);
    for (auto& q : all_monic(2, p)) polys.push_back(std::move(q));
    for (const auto& f : polys) {
      for (const auto& g : polys) {
        const auto m = sylvester_matrix(f, g);
        const auto d = poly_gcd_mod_p(PrimeFieldPoly::from(f, p), PrimeFieldPoly::from(g, p));
        REQUIRE(m.rows() - rank_mod_p(m, p) == static_cast<std::size_t>(d.degree()));
      }
    }
  }
}

TEST_CASE("property: gcd is the greatest common divisor (exhaustive divisor check)") {
  std::mt19937_64 rng(42);
  for (int p : {2, 3, 5}) {
    std::vector<PrimeFieldPoly> candidates;
    for (int deg = 0; deg <= 3; ++deg) {
      for (const auto& h : all_monic_fp(deg, p)) candidates.push_back(h);
    }
    for (int iter = 0; iter < 150; ++iter) {
      const auto f = random_fp(rng, 3, p);
      const auto g = random_fp(rng, 3, p);
      if (f.is_zero() && g.is_zero()) continue;
      const auto d = poly_gcd_mod_p(f, g);
      CHECK(d.coeffs().front() == 1);
      CHECK(divides_poly(d, f));
      CHECK(divides_poly(d, g));
      for (const auto& h : candidates) {
        if (divides_poly(h, f) && divides_poly(h, g)) CHECK(divides_poly(h, d));
      }
    }
  }
}

TEST_CASE("property: Bezout coefficients reproduce the gcd") {
  std::mt19937_64 rng(43);
  for (const Integer& p : {Integer(2), Integer(101), Integer("4294967311"), kP52}) {
    for (int iter = 0; iter < 100; ++iter) {
      const auto f = random_fp(rng, 6, p);
      const auto g = random_fp(rng, 6, p);
      if (f.is_zero() && g.is_zero()) continue;
      const ExtendedGcd e = extended_gcd_mod_p(f, g);
      CHECK(e.phi * f + e.psi * g == e.gcd);
      CHECK(divides_poly(e.gcd, f));
      CHECK(divides_poly(e.gcd, g));
    }
  }
}

TEST_CASE("property: multiples of the gcd of degree < k+l lie in the row space mod p") {
  std::mt19937_64 rng(44);
  for (int p : {2, 3, 5, 7}) {
    for (int iter = 0; iter < 100; ++iter) {
      const MonicIntPoly f = random_monic(rng, 4, 0, p - 1);
      const MonicIntPoly g = random_monic(rng, 4, 0, p - 1);
      const auto m = sylvester_matrix(f, g);
      const std::size_t n = m.rows();
      const auto d = poly_gcd_mod_p(PrimeFieldPoly::from(f, p), PrimeFieldPoly::from(g, p));
      const auto mult = random_fp(rng, static_cast<int>(n) - 1 - d.degree(), p);
      const auto target = d * mult;
      REQUIRE(target.degree() < static_cast<int>(n));
      IntMatrix extended(n + 1, n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) extended(i, j) = m(i, j);
      }
      const auto& c = target.coeffs();
      for (std::size_t j = 0; j < c.size(); ++j) extended(n, n - c.size() + j) = c[j];
      CHECK(rank_mod_p(extended, p) == rank_mod_p(m, p));
    }
  }
}

TEST_CASE("property: p || r gives a common root c with p | f(c), g(c)") {
  std::mt19937_64 rng(45);
  int seen = 0;
  for (int iter = 0; iter < 2000 && seen < 150; ++iter) {
    const MonicIntPoly f = random_monic(rng, 4, -9, 9);
    const MonicIntPoly g = random_monic(rng, 4, -9, 9);
    const Integer r = resultant(f, g);
    if (r == 0) continue;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19}) {
      const Integer P = p;
      if (!divides(P, r) || divides(Integer(P * P), r)) continue;
      ++seen;
      const auto c = common_root_mod_p(f, g, P);
      REQUIRE(c.has_value());
      CHECK(divides(P, eval(f, *c)));
      CHECK(divides(P, eval(g, *c)));
    }
  }
  CHECK(seen >= 150);
}
