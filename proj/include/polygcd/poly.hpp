#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polygcd/integer.hpp"

namespace polygcd {

/// Dense univariate polynomial over the integers.
///
/// Coefficients are stored LEADING-FIRST: {a0, a1, ..., ak} denotes
/// a0*x^k + a1*x^(k-1) + ... + ak. This is the reverse of the low-to-high
/// order many libraries use. Leading zeros are stripped on construction, so
/// the zero polynomial is the empty sequence and has degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);

  static IntPoly constant(const Integer& c);
  /// c * x^power
  static IntPoly monomial(const Integer& c, std::size_t power);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  /// Requires a nonzero polynomial.
  const Integer& leading() const;
  /// Coefficient of x^power (zero past the degree).
  Integer coeff_of(std::size_t power) const;

  /// Nonnegative gcd of the coefficients; 0 for the zero polynomial.
  Integer content() const;
  /// p / content(p), with positive leading coefficient.
  IntPoly primitive_part() const;

  IntPoly pow(unsigned exponent) const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const Integer& c, const IntPoly& a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

 private:
  std::vector<Integer> coeffs_;
};

/// Monic integer polynomial of degree >= 1.
class MonicIntPoly {
 public:
  /// Throws NotMonicError if the leading coefficient is not 1, InputError if
  /// the polynomial is constant.
  explicit MonicIntPoly(IntPoly p);
  explicit MonicIntPoly(std::vector<Integer> coeffs)
      : MonicIntPoly(IntPoly(std::move(coeffs))) {}

  int degree() const noexcept { return poly_.degree(); }
  const std::vector<Integer>& coeffs() const noexcept { return poly_.coeffs(); }
  const IntPoly& poly() const noexcept { return poly_; }
  operator const IntPoly&() const noexcept { return poly_; }

  friend bool operator==(const MonicIntPoly&, const MonicIntPoly&) = default;

 private:
  IntPoly poly_;
};

/// Parses and fully expands a polynomial in x.
///
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' natlit)?
///   base   := intlit | 'x' | '(' expr ')' | '-' factor
///
/// Whitespace is ignored. Throws ParseError carrying the offending offset.
IntPoly parse_poly(std::string_view text);

/// parse_poly followed by the monic/degree checks of MonicIntPoly.
MonicIntPoly parse_monic(std::string_view text);

/// Compact text that parse_poly reads back to the same polynomial,
/// e.g. "x^2+2*x-4". The zero polynomial prints as "0".
std::string to_string(const IntPoly& p);

/// Horner evaluation at n.
Integer eval(const IntPoly& p, const Integer& n);

/// Coefficientwise residues in [0, m), leading zeros stripped. Requires m >= 2.
std::vector<Integer> reduce_mod(const IntPoly& p, const Integer& m);

/// lc(b)^(deg a - deg b + 1) * a  mod b. Requires b nonzero.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// q with a = q*b over Z[x], or nullopt if b does not divide a there.
std::optional<IntPoly> exact_quotient(const IntPoly& a, const IntPoly& b);

/// Primitive gcd in Z[x] with positive leading coefficient (content is
/// ignored, so coprime inputs give 1). Throws InputError if both are zero.
IntPoly gcd_over_z(const IntPoly& f, const IntPoly& g);

}  // namespace polygcd
