#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polygcd/integer.hpp"
#include "polygcd/linalg.hpp"
#include "polygcd/poly.hpp"

namespace polygcd {

/// Polynomial over F_p, coefficients leading-first in [0, p). The zero
/// polynomial is the empty sequence.
class PrimeFieldPoly {
 public:
  /// Reduces coeffs mod p and strips leading zeros. Throws InputError unless
  /// p is prime.
  PrimeFieldPoly(Integer modulus, std::vector<Integer> coeffs);
  static PrimeFieldPoly from(const IntPoly& p, const Integer& modulus);

  const Integer& modulus() const noexcept { return modulus_; }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Value at n (reduced mod p).
  Integer eval(const Integer& n) const;

  friend PrimeFieldPoly operator+(const PrimeFieldPoly& a, const PrimeFieldPoly& b);
  friend PrimeFieldPoly operator-(const PrimeFieldPoly& a, const PrimeFieldPoly& b);
  friend PrimeFieldPoly operator*(const PrimeFieldPoly& a, const PrimeFieldPoly& b);
  friend bool operator==(const PrimeFieldPoly&, const PrimeFieldPoly&) = default;

 private:
  struct Trusted {};
  PrimeFieldPoly(Trusted, Integer modulus, std::vector<Integer> coeffs);
  friend struct ModpAccess;

  Integer modulus_;
  std::vector<Integer> coeffs_;
};

struct PolyDivision {
  PrimeFieldPoly quotient;
  PrimeFieldPoly remainder;
};

/// a = q*b + r with deg r < deg b. Throws InputError if b is zero or the
/// moduli differ.
PolyDivision divrem(const PrimeFieldPoly& a, const PrimeFieldPoly& b);

/// gcd = phi*f + psi*g, gcd monic.
struct ExtendedGcd {
  PrimeFieldPoly gcd;
  PrimeFieldPoly phi;
  PrimeFieldPoly psi;
};

/// Throws InputError on modulus mismatch or when both inputs are zero.
ExtendedGcd extended_gcd_mod_p(const PrimeFieldPoly& f, const PrimeFieldPoly& g);

/// Monic gcd in F_p[x].
PrimeFieldPoly poly_gcd_mod_p(const PrimeFieldPoly& f, const PrimeFieldPoly& g);

/// Rank of m reduced mod p. Throws InputError unless p is prime.
std::size_t rank_mod_p(const IntMatrix& m, const Integer& p);

/// If gcd(f mod p, g mod p) is x - c, returns c in [0, p); otherwise nullopt.
std::optional<Integer> common_root_mod_p(const MonicIntPoly& f, const MonicIntPoly& g,
                                         const Integer& p);

}  // namespace polygcd
