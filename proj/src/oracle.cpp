#include "polygcd/oracle.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "polygcd/errors.hpp"
#include "polygcd/linalg.hpp"
#include "polygcd/ntheory.hpp"

namespace polygcd {

namespace {

std::uint64_t period_within_cap(const MonicIntPoly& f, const MonicIntPoly& g, std::uint64_t cap) {
  const Integer r = resultant(f, g);
  if (r == 0) throw InputError("resultant is 0: gcd(f(n), g(n)) has no nonzero period");
  const Integer m = abs(r);
  if (m > from_u64(cap)) {
    throw CapExceeded("|resultant| = " + to_decimal(m) + " exceeds brute-force cap " +
                      std::to_string(cap));
  }
  return to_u64(m);
}

}  // namespace

Integer gcd_at(const IntPoly& f, const IntPoly& g, const Integer& n) {
  return int_gcd(eval(f, n), eval(g, n));
}

BruteForceProfile brute_force_profile(const MonicIntPoly& f, const MonicIntPoly& g,
                                      std::uint64_t cap, unsigned workers) {
  const std::uint64_t period = period_within_cap(f, g, cap);
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  constexpr std::uint64_t kMinChunk = 4096;
  const std::uint64_t chunks =
      std::clamp<std::uint64_t>(period / kMinChunk, 1, std::uint64_t{workers});

  BruteForceProfile out;
  out.modulus = from_u64(period);
  out.values.resize(period);

  // Each chunk fills a disjoint slice of values and returns its own
  // histogram; merging is addition, so completion order is irrelevant.
  auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
    std::map<Integer, std::uint64_t> hist;
    for (std::uint64_t n = lo; n < hi; ++n) {
      out.values[n] = gcd_at(f, g, from_u64(n));
      ++hist[out.values[n]];
    }
    return hist;
  };
  std::vector<std::map<Integer, std::uint64_t>> partial;
  if (chunks == 1) {
    partial.push_back(scan(0, period));
  } else {
    std::vector<std::future<std::map<Integer, std::uint64_t>>> jobs;
    for (std::uint64_t c = 0; c < chunks; ++c) {
      jobs.push_back(std::async(std::launch::async, scan, period * c / chunks,
                                period * (c + 1) / chunks));
    }
    for (auto& j : jobs) partial.push_back(j.get());
  }
  for (const auto& h : partial) {
    for (const auto& [value, count] : h) out.histogram[value] += count;
  }
  for (const auto& [value, count] : out.histogram) out.range.push_back(value);
  return out;
}

bool check_divides(const MonicIntPoly& f, const MonicIntPoly& g, std::span<const Integer> sample) {
  const Integer r = resultant(f, g);
  return std::all_of(sample.begin(), sample.end(), [&](const Integer& n) {
    const Integer d = gcd_at(f, g, n);
    // gcd(0, 0) = 0 can only occur at a common integer root, where r = 0.
    if (d == 0) return r == 0;
    return divides(d, r);
  });
}

bool check_periodicity(const MonicIntPoly& f, const MonicIntPoly& g, std::uint64_t cap) {
  const std::uint64_t period = period_within_cap(f, g, cap);
  const Integer t = from_u64(period);
  for (std::uint64_t n = 0; n < period; ++n) {
    const Integer v = from_u64(n);
    if (gcd_at(f, g, v) != gcd_at(f, g, Integer(v + t))) return false;
  }
  const std::uint64_t negatives = std::min<std::uint64_t>(16, period);
  for (std::uint64_t k = 1; k <= negatives; ++k) {
    const Integer v = -from_u64(k);
    if (gcd_at(f, g, v) != gcd_at(f, g, Integer(v + t))) return false;
  }
  return true;
}

}  // namespace polygcd
