#include "polygcd/analysis.hpp"

#include <algorithm>

#include "polygcd/errors.hpp"
#include "polygcd/linalg.hpp"
#include "polygcd/modp.hpp"

namespace polygcd {

namespace {

// Lowest residues n in [0, modulus) with n = c_p (mod p) for p in `inside`
// and n != c_p (mod p) for p in `outside`, stopping after `limit` hits.
std::vector<Integer> list_residues(const Integer& modulus, const Congruence& inside,
                                   const std::vector<std::pair<Integer, Integer>>& outside,
                                   const Integer& limit) {
  std::vector<Integer> out;
  for (Integer n = inside.residue; n < modulus && Integer(out.size()) < limit; n += inside.modulus) {
    const bool ok = std::none_of(outside.begin(), outside.end(), [&](const auto& pc) {
      return mod_nonneg(n, pc.first) == pc.second;
    });
    if (ok) out.push_back(n);
  }
  return out;
}

}  // namespace

GcdAtlas build_atlas(const MonicIntPoly& f, const MonicIntPoly& g,
                     const Factorization& r_factorization, std::size_t residue_cap,
                     std::size_t divisor_cap) {
  if (r_factorization.n == 0) throw InputError("atlas requires a nonzero resultant");
  if (!is_squarefree(r_factorization)) {
    throw InputError("atlas requires a square-free resultant, got " + to_decimal(r_factorization.n));
  }
  GcdAtlas atlas{f, g, r_factorization.n, r_factorization, true, {}, {}};
  const Integer modulus = abs(atlas.resultant);

  for (const auto& pp : r_factorization.factors) {
    auto root = common_root_mod_p(f, g, pp.prime);
    if (!root) {
      throw InvariantBreach("gcd of f and g mod " + to_decimal(pp.prime) +
                            " does not have degree 1 although p divides r exactly once");
    }
    atlas.roots.emplace(pp.prime, *root);
  }

  for (const Integer& d : divisors(r_factorization, divisor_cap)) {
    std::vector<Congruence> inside;
    std::vector<std::pair<Integer, Integer>> outside;
    Integer multiplicity = 1;
    for (const auto& [p, c] : atlas.roots) {
      if (divides(p, d)) {
        inside.push_back({c, p});
      } else {
        outside.emplace_back(p, c);
        multiplicity *= p - 1;
      }
    }
    AtlasEntry entry;
    entry.divisor = d;
    entry.multiplicity = multiplicity;
    const Integer limit = std::min(multiplicity, Integer(from_u64(residue_cap)));
    entry.residues = list_residues(modulus, crt(inside), outside, limit);
    entry.residues_truncated = Integer(entry.residues.size()) < multiplicity;
    atlas.entries.push_back(std::move(entry));
  }
  return atlas;
}

Integer minimal_period(const BruteForceProfile& profile) {
  const std::size_t m = profile.values.size();
  for (const Integer& t : divisors(factor(profile.modulus))) {
    const std::size_t shift = to_u64(t);
    bool periodic = true;
    for (std::size_t n = 0; n < m && periodic; ++n) {
      periodic = profile.values[n] == profile.values[(n + shift) % m];
    }
    if (periodic) return t;
  }
  throw InvariantBreach("|r| is not a period of the scanned gcd values");
}

Integer minimal_period(const MonicIntPoly& f, const MonicIntPoly& g, std::uint64_t cap) {
  return minimal_period(brute_force_profile(f, g, cap));
}

WitnessReport coprime_witness(const MonicIntPoly& f, const MonicIntPoly& g,
                              const Factorization& r_factorization) {
  if (r_factorization.n == 0) throw InputError("coprime witness requires a nonzero resultant");
  WitnessReport report;
  for (const auto& pp : r_factorization.factors) {
    if (Integer(pp.exponent) >= pp.prime) {
      report.blocking_prime = pp.prime;
      return report;
    }
  }
  // For each p, some n_p in [0, p) is not a common root mod p, because the
  // gcd mod p has degree < p and cannot vanish on all of F_p.
  std::vector<Congruence> system;
  for (const auto& pp : r_factorization.factors) {
    const Integer& p = pp.prime;
    std::optional<Integer> good;
    for (Integer n = 0; n < p && !good; ++n) {
      if (!divides(p, eval(f, n)) || !divides(p, eval(g, n))) good = n;
    }
    if (!good) {
      throw InvariantBreach("f and g vanish on all of F_" + to_decimal(p) + " although " +
                            to_decimal(p) + "^" + to_decimal(p) + " does not divide r");
    }
    system.push_back({*good, p});
  }
  const Integer n = crt(system).residue;
  if (gcd_at(f, g, n) != 1) {
    throw InvariantBreach("CRT witness " + to_decimal(n) + " does not give gcd 1");
  }
  report.witness = n;
  return report;
}

std::optional<std::string> atlas_mismatch(const GcdAtlas& atlas, const BruteForceProfile& profile) {
  if (profile.modulus != abs(atlas.resultant)) return "period differs from |r|";
  Integer total = 0;
  for (const auto& entry : atlas.entries) {
    total += entry.multiplicity;
    auto it = profile.histogram.find(entry.divisor);
    const Integer seen = it == profile.histogram.end() ? Integer(0) : from_u64(it->second);
    if (seen != entry.multiplicity) {
      return "divisor " + to_decimal(entry.divisor) + ": atlas multiplicity " +
             to_decimal(entry.multiplicity) + ", oracle count " + to_decimal(seen);
    }
    if (!entry.residues_truncated && Integer(entry.residues.size()) != entry.multiplicity) {
      return "divisor " + to_decimal(entry.divisor) + ": untruncated list has wrong length";
    }
    std::vector<Integer> expected;
    for (std::size_t n = 0; n < profile.values.size() && expected.size() < entry.residues.size();
         ++n) {
      if (profile.values[n] == entry.divisor) expected.push_back(from_u64(n));
    }
    if (expected != entry.residues) {
      return "divisor " + to_decimal(entry.divisor) + ": residue lists differ";
    }
  }
  if (total != profile.modulus) return "multiplicities do not sum to |r|";
  return std::nullopt;
}

AnalysisOutcome analyze(const MonicIntPoly& f, const MonicIntPoly& g,
                        const AnalysisOptions& options) {
  const Integer r = resultant(f, g, options.verify);

  if (r == 0) {
    ZeroResultant zero{gcd_over_z(f, g), {}};
    if (zero.common_factor.degree() < 1) {
      throw InvariantBreach("resultant is 0 but gcd over Z[x] is constant");
    }
    for (int n = 0; n < 8; ++n) zero.sample_values.push_back(gcd_at(f, g, n));
    return zero;
  }

  Factorization fac = factor(r, options.seed);
  const Integer modulus = abs(r);
  const bool within_cap = modulus <= from_u64(options.brute_force_cap);

  if (is_squarefree(fac)) {
    GcdAtlas atlas = build_atlas(f, g, fac, options.residue_cap, options.divisor_cap);
    if (options.verify && within_cap) {
      const BruteForceProfile profile = brute_force_profile(f, g, options.brute_force_cap);
      if (auto why = atlas_mismatch(atlas, profile)) {
        throw InvariantBreach("atlas disagrees with brute force: " + *why);
      }
    }
    return atlas;
  }

  NotSquarefree out{r, fac, std::nullopt, std::nullopt, {}};
  if (within_cap) {
    out.profile = brute_force_profile(f, g, options.brute_force_cap);
    out.minimal_period = minimal_period(*out.profile);
  }
  out.witness = coprime_witness(f, g, fac);
  return out;
}

}  // namespace polygcd
