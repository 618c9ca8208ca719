#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "polygcd/integer.hpp"
#include "polygcd/ntheory.hpp"
#include "polygcd/oracle.hpp"
#include "polygcd/poly.hpp"

namespace polygcd {

inline constexpr std::size_t kDefaultResidueCap = 10'000;

/// Residues n mod |r| with gcd(f(n), g(n)) = divisor.
struct AtlasEntry {
  Integer divisor;
  /// Exact count of such residues: prod (p - 1) over primes p of |r|/divisor.
  Integer multiplicity;
  /// The lowest residues, ascending; at most the listing cap.
  std::vector<Integer> residues;
  bool residues_truncated = false;
};

/// Complete description of n -> gcd(f(n), g(n)) for a square-free resultant.
struct GcdAtlas {
  MonicIntPoly f;
  MonicIntPoly g;
  Integer resultant;
  Factorization factorization;
  bool squarefree = true;
  /// prime p | r -> the unique common root of f and g mod p
  std::map<Integer, Integer> roots;
  /// One entry per positive divisor of |r|, ascending.
  std::vector<AtlasEntry> entries;
};

/// Outcome of the p^p coprimality criterion.
struct WitnessReport {
  /// n with gcd(f(n), g(n)) = 1, in [0, rad(|r|)).
  std::optional<Integer> witness;
  /// Set when the criterion is inapplicable: a prime p with p^p | r.
  std::optional<Integer> blocking_prime;

  bool applicable() const noexcept { return !blocking_prime.has_value(); }
};

/// r = 0: f and g share a non-constant factor over Z[x].
struct ZeroResultant {
  IntPoly common_factor;
  /// gcd(f(n), g(n)) for n = 0, 1, ..., 7.
  std::vector<Integer> sample_values;
};

/// r != 0 but not square-free: only empirical results are available.
struct NotSquarefree {
  Integer resultant;
  Factorization factorization;
  /// Full-period scan, present when |r| is within the brute-force cap.
  std::optional<BruteForceProfile> profile;
  std::optional<Integer> minimal_period;
  WitnessReport witness;
};

using AnalysisOutcome = std::variant<GcdAtlas, ZeroResultant, NotSquarefree>;

struct AnalysisOptions {
  std::size_t residue_cap = kDefaultResidueCap;
  std::uint64_t brute_force_cap = kDefaultBruteForceCap;
  std::size_t divisor_cap = kDefaultDivisorCap;
  std::uint64_t seed = kDefaultFactorSeed;
  /// Cross-check the resultant by PRS and, within the brute-force cap, the
  /// atlas against the oracle. Mismatches throw InvariantBreach.
  bool verify = false;
};

AnalysisOutcome analyze(const MonicIntPoly& f, const MonicIntPoly& g,
                        const AnalysisOptions& options = {});

/// Builds the atlas from the factorization of a nonzero square-free r.
/// Throws InputError if r is not square-free and InvariantBreach if some
/// prime of r has no unique common root.
GcdAtlas build_atlas(const MonicIntPoly& f, const MonicIntPoly& g,
                     const Factorization& r_factorization,
                     std::size_t residue_cap = kDefaultResidueCap,
                     std::size_t divisor_cap = kDefaultDivisorCap);

/// Smallest positive period of n -> gcd(f(n), g(n)). Only divisors of |r|
/// are tried since |r| is always a period.
Integer minimal_period(const MonicIntPoly& f, const MonicIntPoly& g,
                       std::uint64_t cap = kDefaultBruteForceCap);
Integer minimal_period(const BruteForceProfile& profile);

/// Finds n with gcd(f(n), g(n)) = 1 via one good residue per prime of r and
/// CRT. Reports blocking_prime instead when some p^p divides r. Throws
/// InputError if r = 0.
WitnessReport coprime_witness(const MonicIntPoly& f, const MonicIntPoly& g,
                              const Factorization& r_factorization);

/// Describes the first disagreement between an atlas and a full-period
/// scan of the same pair, or nullopt if they agree. Truncated residue lists
/// are compared as prefixes.
std::optional<std::string> atlas_mismatch(const GcdAtlas& atlas, const BruteForceProfile& profile);

}  // namespace polygcd
