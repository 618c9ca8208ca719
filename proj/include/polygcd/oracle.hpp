#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "polygcd/integer.hpp"
#include "polygcd/poly.hpp"

namespace polygcd {

inline constexpr std::uint64_t kDefaultBruteForceCap = 1'000'000;

/// gcd(f(n), g(n)) for every residue n in [0, |r|), computed by direct
/// evaluation.
struct BruteForceProfile {
  Integer modulus;                              // |r|
  std::vector<Integer> values;                  // values[n] = gcd(f(n), g(n))
  std::map<Integer, std::uint64_t> histogram;   // gcd value -> count
  std::vector<Integer> range;                   // distinct values, ascending
};

/// int_gcd(eval(f, n), eval(g, n))
Integer gcd_at(const IntPoly& f, const IntPoly& g, const Integer& n);

/// Scans one full period [0, |r|) in independent chunks (`workers` threads;
/// 0 picks the hardware concurrency). Throws InputError if r = 0 and
/// CapExceeded if |r| > cap.
BruteForceProfile brute_force_profile(const MonicIntPoly& f, const MonicIntPoly& g,
                                      std::uint64_t cap = kDefaultBruteForceCap,
                                      unsigned workers = 0);

/// True iff r is divisible by gcd(f(n), g(n)) for every n in sample.
bool check_divides(const MonicIntPoly& f, const MonicIntPoly& g, std::span<const Integer> sample);

/// True iff gcd(f(n), g(n)) = gcd(f(n+|r|), g(n+|r|)) for all n in [0, |r|)
/// and for n = -1, ..., -min(16, |r|).
bool check_periodicity(const MonicIntPoly& f, const MonicIntPoly& g,
                       std::uint64_t cap = kDefaultBruteForceCap);

}  // namespace polygcd
