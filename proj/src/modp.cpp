#include "polygcd/modp.hpp"

#include <algorithm>
#include <array>
#include <tuple>
#include <cstdint>
#include <utility>

#include "polygcd/errors.hpp"
#include "polygcd/ntheory.hpp"

namespace polygcd {

namespace {

// Moduli below 2^32 take the machine-word path: products fit in 64 bits.
struct WordField {
  using Elem = std::uint64_t;
  std::uint64_t p;

  Elem from(const Integer& v) const { return mod_nonneg(v, from_u64(p)).get_ui(); }
  Integer lift(Elem a) const { return from_u64(a); }
  Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p ? s - p : s; }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem mul(Elem a, Elem b) const { return a * b % p; }
  Elem inv(Elem a) const {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a);
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::tie(t, nt) = std::pair{nt, t - q * nt};
      std::tie(r, nr) = std::pair{nr, r - q * nr};
    }
    return static_cast<Elem>(t < 0 ? t + static_cast<std::int64_t>(p) : t);
  }
};

struct BigField {
  using Elem = Integer;
  Integer p;

  Elem from(const Integer& v) const { return mod_nonneg(v, p); }
  Integer lift(const Elem& a) const { return a; }
  Elem add(const Elem& a, const Elem& b) const {
    Elem s = a + b;
    if (s >= p) s -= p;
    return s;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem s = a - b;
    if (s < 0) s += p;
    return s;
  }
  Elem mul(const Elem& a, const Elem& b) const { return mod_nonneg(Integer(a * b), p); }
  Elem inv(const Elem& a) const {
    Elem r;
    mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return r;
  }
};

template <typename F>
using Vec = std::vector<typename F::Elem>;

template <typename F>
void strip(Vec<F>& v) {
  auto first = std::find_if(v.begin(), v.end(), [](const auto& c) { return c != 0; });
  v.erase(v.begin(), first);
}

template <typename F>
Vec<F> to_elems(const F& field, const std::vector<Integer>& c) {
  Vec<F> out;
  out.reserve(c.size());
  for (const auto& v : c) out.push_back(field.from(v));
  return out;
}

template <typename F>
std::vector<Integer> to_ints(const F& field, const Vec<F>& c) {
  std::vector<Integer> out;
  out.reserve(c.size());
  for (const auto& v : c) out.push_back(field.lift(v));
  return out;
}

template <typename F>
Vec<F> sub_poly(const F& field, const Vec<F>& a, const Vec<F>& b) {
  const std::size_t n = std::max(a.size(), b.size());
  Vec<F> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    typename F::Elem x = i < a.size() ? a[a.size() - 1 - i] : typename F::Elem(0);
    typename F::Elem y = i < b.size() ? b[b.size() - 1 - i] : typename F::Elem(0);
    out[n - 1 - i] = field.sub(x, y);
  }
  strip<F>(out);
  return out;
}

template <typename F>
Vec<F> mul_poly(const F& field, const Vec<F>& a, const Vec<F>& b) {
  if (a.empty() || b.empty()) return {};
  Vec<F> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = field.add(out[i + j], field.mul(a[i], b[j]));
    }
  }
  strip<F>(out);
  return out;
}

template <typename F>
std::pair<Vec<F>, Vec<F>> divrem_poly(const F& field, const Vec<F>& a, const Vec<F>& b) {
  if (a.size() < b.size()) return {{}, a};
  Vec<F> r = a;
  const auto lead_inv = field.inv(b.front());
  const std::size_t qlen = a.size() - b.size() + 1;
  Vec<F> q(qlen);
  for (std::size_t i = 0; i < qlen; ++i) {
    if (r[i] == 0) continue;
    q[i] = field.mul(r[i], lead_inv);
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = field.sub(r[i + j], field.mul(q[i], b[j]));
  }
  Vec<F> rem(r.begin() + static_cast<std::ptrdiff_t>(qlen), r.end());
  strip<F>(rem);
  strip<F>(q);
  return {std::move(q), std::move(rem)};
}

template <typename F>
void scale(const F& field, Vec<F>& v, const typename F::Elem& c) {
  for (auto& x : v) x = field.mul(x, c);
}

// Returns {gcd, phi, psi} with phi*f + psi*g = gcd, gcd monic.
template <typename F>
std::array<Vec<F>, 3> ext_gcd(const F& field, const Vec<F>& f, const Vec<F>& g) {
  Vec<F> r0 = f, r1 = g;
  Vec<F> s0{1}, s1{};
  Vec<F> t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divrem_poly(field, r0, r1);
    Vec<F> s2 = sub_poly(field, s0, mul_poly(field, q, s1));
    Vec<F> t2 = sub_poly(field, t0, mul_poly(field, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const auto c = field.inv(r0.front());
  scale(field, r0, c);
  scale(field, s0, c);
  scale(field, t0, c);
  return {std::move(r0), std::move(s0), std::move(t0)};
}

template <typename F>
std::size_t rank_of(const F& field, Vec<F> a, std::size_t rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[rank * cols + j]);
    }
    const auto inv = field.inv(a[rank * cols + c]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a[i * cols + c] == 0) continue;
      const auto factor = field.mul(a[i * cols + c], inv);
      for (std::size_t j = c; j < cols; ++j) {
        a[i * cols + j] = field.sub(a[i * cols + j], field.mul(factor, a[rank * cols + j]));
      }
    }
    ++rank;
  }
  return rank;
}

template <typename Fn>
decltype(auto) with_field(const Integer& p, Fn&& fn) {
  if (p < (Integer(1) << 32)) return fn(WordField{p.get_ui()});
  return fn(BigField{p});
}

void require_prime(const Integer& p) {
  if (!is_prime(p)) throw InputError("modulus " + to_decimal(p) + " is not prime");
}

void require_same_modulus(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
  if (a.modulus() != b.modulus()) {
    throw InputError("modulus mismatch: " + to_decimal(a.modulus()) + " vs " +
                     to_decimal(b.modulus()));
  }
}

}  // namespace

struct ModpAccess {
  static PrimeFieldPoly make(const Integer& p, std::vector<Integer> c) {
    return PrimeFieldPoly(PrimeFieldPoly::Trusted{}, p, std::move(c));
  }
};

PrimeFieldPoly::PrimeFieldPoly(Trusted, Integer modulus, std::vector<Integer> coeffs)
    : modulus_(std::move(modulus)), coeffs_(std::move(coeffs)) {}

PrimeFieldPoly::PrimeFieldPoly(Integer modulus, std::vector<Integer> coeffs)
    : modulus_(std::move(modulus)) {
  require_prime(modulus_);
  coeffs_ = reduce_mod(IntPoly(std::move(coeffs)), modulus_);
}

PrimeFieldPoly PrimeFieldPoly::from(const IntPoly& p, const Integer& modulus) {
  return PrimeFieldPoly(modulus, p.coeffs());
}

Integer PrimeFieldPoly::eval(const Integer& n) const {
  Integer acc = 0;
  for (const auto& c : coeffs_) acc = mod_nonneg(Integer(acc * n + c), modulus_);
  return acc;
}

PrimeFieldPoly operator+(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
  require_same_modulus(a, b);
  IntPoly sum = IntPoly(a.coeffs()) + IntPoly(b.coeffs());
  return ModpAccess::make(a.modulus(), reduce_mod(sum, a.modulus()));
}

PrimeFieldPoly operator-(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
  require_same_modulus(a, b);
  IntPoly diff = IntPoly(a.coeffs()) - IntPoly(b.coeffs());
  return ModpAccess::make(a.modulus(), reduce_mod(diff, a.modulus()));
}

PrimeFieldPoly operator*(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
  require_same_modulus(a, b);
  return with_field(a.modulus(), [&](const auto& field) {
    using F = std::decay_t<decltype(field)>;
    auto prod = mul_poly(field, to_elems(field, a.coeffs()), to_elems(field, b.coeffs()));
    return ModpAccess::make(a.modulus(), to_ints<F>(field, prod));
  });
}

PolyDivision divrem(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
  require_same_modulus(a, b);
  if (b.is_zero()) throw InputError("division by the zero polynomial");
  return with_field(a.modulus(), [&](const auto& field) {
    using F = std::decay_t<decltype(field)>;
    auto [q, r] = divrem_poly(field, to_elems(field, a.coeffs()), to_elems(field, b.coeffs()));
    return PolyDivision{ModpAccess::make(a.modulus(), to_ints<F>(field, q)),
                        ModpAccess::make(a.modulus(), to_ints<F>(field, r))};
  });
}

ExtendedGcd extended_gcd_mod_p(const PrimeFieldPoly& f, const PrimeFieldPoly& g) {
  require_same_modulus(f, g);
  if (f.is_zero() && g.is_zero()) throw InputError("gcd of two zero polynomials");
  const Integer& p = f.modulus();
  return with_field(p, [&](const auto& field) {
    using F = std::decay_t<decltype(field)>;
    auto [d, phi, psi] = ext_gcd(field, to_elems(field, f.coeffs()), to_elems(field, g.coeffs()));
    return ExtendedGcd{ModpAccess::make(p, to_ints<F>(field, d)),
                       ModpAccess::make(p, to_ints<F>(field, phi)),
                       ModpAccess::make(p, to_ints<F>(field, psi))};
  });
}

PrimeFieldPoly poly_gcd_mod_p(const PrimeFieldPoly& f, const PrimeFieldPoly& g) {
  return extended_gcd_mod_p(f, g).gcd;
}

std::size_t rank_mod_p(const IntMatrix& m, const Integer& p) {
  require_prime(p);
  return with_field(p, [&](const auto& field) {
    return rank_of(field, to_elems(field, m.entries()), m.rows(), m.cols());
  });
}

std::optional<Integer> common_root_mod_p(const MonicIntPoly& f, const MonicIntPoly& g,
                                         const Integer& p) {
  const PrimeFieldPoly d =
      poly_gcd_mod_p(PrimeFieldPoly::from(f, p), PrimeFieldPoly::from(g, p));
  if (d.degree() != 1) return std::nullopt;
  // d = x + c0, so the root is -c0.
  return mod_nonneg(Integer(-d.coeffs()[1]), p);
}

}  // namespace polygcd
