#include "polygcd/ntheory.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

#include "polygcd/errors.hpp"

static_assert(__GNU_MP_VERSION > 6 || (__GNU_MP_VERSION == 6 && __GNU_MP_VERSION_MINOR >= 2),
              "mpz_probab_prime_p runs Baillie-PSW only from GMP 6.2 on");

namespace polygcd {

namespace {

constexpr std::uint32_t kTrialLimit = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool miller_rabin(const Integer& n, unsigned long base) {
  const Integer n1 = n - 1;
  Integer d = n1;
  const auto s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  Integer x;
  const Integer a = base;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n1) return true;
  for (mp_bitcnt_t i = 1; i < s; ++i) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == n1) return true;
    if (x == 1) return false;
  }
  return false;
}

Integer random_below(std::mt19937_64& rng, const Integer& n) {
  Integer r = 0;
  const auto words = mpz_sizeinbase(n.get_mpz_t(), 2) / 64 + 2;
  for (std::size_t i = 0; i < words; ++i) {
    r <<= 64;
    r += from_u64(rng());
  }
  return mod_nonneg(r, n);
}

// Brent's cycle-finding variant of Pollard rho. Returns a nontrivial factor
// of the odd composite n, or 0 when this seed gives up.
Integer pollard_brent(const Integer& n, std::mt19937_64& rng) {
  constexpr unsigned long kBatch = 128;
  constexpr unsigned long kMaxCycle = 1ul << 26;
  const Integer c = random_below(rng, Integer(n - 1)) + 1;
  Integer y = random_below(rng, n);
  Integer x, ys, g = 1, q = 1;
  auto step = [&](Integer& v) {
    v = v * v + c;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  };
  for (unsigned long r = 1; g == 1; r <<= 1) {
    if (r > kMaxCycle) return 0;
    x = y;
    for (unsigned long i = 0; i < r; ++i) step(y);
    for (unsigned long k = 0; k < r && g == 1; k += kBatch) {
      ys = y;
      const unsigned long lim = std::min(kBatch, r - k);
      for (unsigned long i = 0; i < lim; ++i) {
        step(y);
        q *= abs(x - y);
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
    }
  }
  if (g == n) {
    // The batch overshot; replay it one step at a time.
    g = 1;
    for (unsigned long i = 0; i < kBatch && g == 1; ++i) {
      step(ys);
      Integer diff = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
  }
  if (g == n || g == 1) return 0;
  return g;
}

}  // namespace

const Integer& deterministic_primality_bound() {
  static const Integer bound("3317044064679887385961981", 10);
  return bound;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul, 41ul}) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) return false;
  }
  if (n < 43 * 43) return true;
  if (n < deterministic_primality_bound()) {
    for (unsigned long a : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul, 41ul}) {
      if (!miller_rabin(n, a)) return false;
    }
    return true;
  }
  // GMP >= 6.2 runs Baillie-PSW here, followed by extra Miller-Rabin rounds.
  return mpz_probab_prime_p(n.get_mpz_t(), 25) != 0;
}

bool Factorization::has_probable_primes() const {
  return std::any_of(factors.begin(), factors.end(), [](const PrimePower& pp) {
    return pp.prime >= deterministic_primality_bound();
  });
}

Integer Factorization::abs_value() const {
  Integer v = 1;
  for (const auto& pp : factors) v *= ipow(pp.prime, pp.exponent);
  return v;
}

Factorization factor(const Integer& n, std::uint64_t seed) {
  if (n == 0) throw InputError("cannot factor 0");
  Factorization out;
  out.n = n;
  out.sign = n < 0 ? -1 : 1;
  std::map<Integer, unsigned> found;
  Integer m = abs(n);

  for (std::uint32_t p : small_primes()) {
    if (Integer(p) * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++found[Integer(p)];
    }
  }

  std::mt19937_64 rng(seed);
  std::vector<Integer> pending;
  if (m > 1) pending.push_back(m);
  while (!pending.empty()) {
    Integer c = std::move(pending.back());
    pending.pop_back();
    if (is_prime(c)) {
      ++found[c];
      continue;
    }
    if (mpz_perfect_power_p(c.get_mpz_t()) != 0) {
      const auto bits = mpz_sizeinbase(c.get_mpz_t(), 2);
      bool split = false;
      for (unsigned long k = bits; k >= 2 && !split; --k) {
        Integer root;
        if (mpz_root(root.get_mpz_t(), c.get_mpz_t(), k) != 0) {
          pending.insert(pending.end(), k, root);
          split = true;
        }
      }
      if (split) continue;
    }
    Integer d = 0;
    for (int attempt = 0; attempt < kPollardRetries && d == 0; ++attempt) {
      d = pollard_brent(c, rng);
    }
    if (d == 0) {
      throw CapExceeded("Pollard rho failed to split " + to_decimal(c) + " after " +
                        std::to_string(kPollardRetries) + " seeds");
    }
    pending.push_back(d);
    pending.push_back(divexact(c, d));
  }

  for (auto& [p, e] : found) out.factors.push_back({p, e});
  return out;
}

bool is_squarefree(const Factorization& f) {
  return std::all_of(f.factors.begin(), f.factors.end(),
                     [](const PrimePower& pp) { return pp.exponent == 1; });
}

std::vector<Integer> divisors(const Factorization& f, std::size_t cap) {
  std::size_t count = 1;
  for (const auto& pp : f.factors) {
    if (count > cap / (std::size_t{pp.exponent} + 1)) {
      throw CapExceeded("more than " + std::to_string(cap) + " divisors of " + to_decimal(f.n));
    }
    count *= pp.exponent + 1;
  }
  if (count > cap) {
    throw CapExceeded("more than " + std::to_string(cap) + " divisors of " + to_decimal(f.n));
  }
  std::vector<Integer> out{1};
  out.reserve(count);
  for (const auto& pp : f.factors) {
    const std::size_t base = out.size();
    Integer power = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Congruence crt(std::span<const Congruence> system) {
  Congruence acc{0, 1};
  for (const auto& c : system) {
    if (c.modulus < 1) throw InputError("CRT modulus must be >= 1, got " + to_decimal(c.modulus));
    if (int_gcd(acc.modulus, c.modulus) != 1) {
      throw InputError("CRT moduli are not pairwise coprime (" + to_decimal(c.modulus) + ")");
    }
    // x = a + M * ((b - a) * M^-1 mod m)
    Integer inv;
    mpz_invert(inv.get_mpz_t(), acc.modulus.get_mpz_t(), c.modulus.get_mpz_t());
    if (c.modulus == 1) inv = 0;
    const Integer t = mod_nonneg(Integer((c.residue - acc.residue) * inv), c.modulus);
    acc.residue += acc.modulus * t;
    acc.modulus *= c.modulus;
    acc.residue = mod_nonneg(acc.residue, acc.modulus);
  }
  return acc;
}

Integer int_gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace polygcd
