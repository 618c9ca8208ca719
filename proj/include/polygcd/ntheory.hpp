#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "polygcd/integer.hpp"

namespace polygcd {

/// Below this bound is_prime is a deterministic Miller-Rabin test; at or
/// above it, a Baillie-PSW probable-prime test.
const Integer& deterministic_primality_bound();

bool is_prime(const Integer& n);

struct PrimePower {
  Integer prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = sign * prod(prime^exponent), primes strictly increasing.
struct Factorization {
  Integer n;
  int sign = 1;
  std::vector<PrimePower> factors;

  /// True if some listed prime is only a probable prime.
  bool has_probable_primes() const;
  /// |n| rebuilt from the factors.
  Integer abs_value() const;
};

inline constexpr std::uint64_t kDefaultFactorSeed = 0x5eed5eedULL;
inline constexpr int kPollardRetries = 20;

/// Trial division up to 10^6, then Brent's variant of Pollard rho with a
/// generator seeded from `seed` (reproducible). Throws InputError for n = 0
/// and CapExceeded if a composite survives every re-seed.
Factorization factor(const Integer& n, std::uint64_t seed = kDefaultFactorSeed);

bool is_squarefree(const Factorization& f);

inline constexpr std::size_t kDefaultDivisorCap = std::size_t{1} << 20;

/// Positive divisors of |n| in ascending order. Throws CapExceeded if there
/// would be more than `cap` of them.
std::vector<Integer> divisors(const Factorization& f, std::size_t cap = kDefaultDivisorCap);

struct Congruence {
  Integer residue;
  Integer modulus;

  friend bool operator==(const Congruence&, const Congruence&) = default;
};

/// Solves the system of congruences. Moduli must be >= 1 and pairwise
/// coprime (InputError otherwise). The empty system gives 0 mod 1.
Congruence crt(std::span<const Congruence> system);

/// Nonnegative gcd; int_gcd(0, 0) = 0.
Integer int_gcd(const Integer& a, const Integer& b);

}  // namespace polygcd
