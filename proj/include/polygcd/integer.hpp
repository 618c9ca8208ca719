#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace polygcd {

/// Arbitrary-precision signed integer used throughout the library.
using Integer = mpz_class;

/// Parses an optionally signed decimal literal. Throws InputError on bad input.
Integer parse_integer(std::string_view text);

inline std::string to_decimal(const Integer& n) { return n.get_str(10); }

/// Canonical residue of a modulo m, in [0, |m|). m must be nonzero.
inline Integer mod_nonneg(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Integer ipow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

/// a / b where b is known to divide a.
inline Integer divexact(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool divides(const Integer& d, const Integer& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Converts to uint64 if the value is nonnegative and fits.
bool fits_u64(const Integer& n);
std::uint64_t to_u64(const Integer& n);
Integer from_u64(std::uint64_t v);

}  // namespace polygcd
