#include "polygcd/poly.hpp"

#include <algorithm>
#include <utility>

#include "polygcd/errors.hpp"

namespace polygcd {

namespace {

void strip_leading_zeros(std::vector<Integer>& c) {
  auto first = std::find_if(c.begin(), c.end(), [](const Integer& v) { return v != 0; });
  c.erase(c.begin(), first);
}

// Aligns two leading-first sequences at the constant term.
template <typename Op>
IntPoly combine(const IntPoly& a, const IntPoly& b, Op op) {
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::size_t n = std::max(x.size(), y.size());
  std::vector<Integer> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Integer xi = i < x.size() ? x[x.size() - 1 - i] : Integer(0);
    Integer yi = i < y.size() ? y[y.size() - 1 - i] : Integer(0);
    out[n - 1 - i] = op(xi, yi);
  }
  return IntPoly(std::move(out));
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string s(text);
  Integer n;
  if (s.empty() || n.set_str(s, 10) != 0) {
    throw InputError("not a decimal integer: '" + s + "'");
  }
  return n;
}

bool fits_u64(const Integer& n) {
  return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const Integer& n) {
  if (!fits_u64(n)) throw InputError("integer does not fit in 64 bits: " + to_decimal(n));
  std::uint64_t v = 0;
  mpz_export(&v, nullptr, -1, sizeof v, 0, 0, n.get_mpz_t());
  return v;
}

Integer from_u64(std::uint64_t v) {
  Integer n;
  mpz_import(n.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return n;
}

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  strip_leading_zeros(coeffs_);
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly({c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t power) {
  std::vector<Integer> v(power + 1);
  v[0] = c;
  return IntPoly(std::move(v));
}

const Integer& IntPoly::leading() const {
  if (coeffs_.empty()) throw InputError("zero polynomial has no leading coefficient");
  return coeffs_.front();
}

Integer IntPoly::coeff_of(std::size_t power) const {
  if (power >= coeffs_.size()) return 0;
  return coeffs_[coeffs_.size() - 1 - power];
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  if (leading() < 0) g = -g;
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(divexact(c, g));
  return IntPoly(std::move(out));
}

IntPoly IntPoly::pow(unsigned exponent) const {
  IntPoly result = constant(1);
  IntPoly base = *this;
  while (exponent != 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent != 0) base = base * base;
  }
  return result;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  return combine(a, b, [](const Integer& x, const Integer& y) { return Integer(x + y); });
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  return combine(a, b, [](const Integer& x, const Integer& y) { return Integer(x - y); });
}

IntPoly operator-(const IntPoly& a) { return Integer(-1) * a; }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<Integer> out(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  return IntPoly(std::move(out));
}

IntPoly operator*(const Integer& c, const IntPoly& a) {
  std::vector<Integer> out;
  out.reserve(a.coeffs().size());
  for (const auto& v : a.coeffs()) out.push_back(c * v);
  return IntPoly(std::move(out));
}

MonicIntPoly::MonicIntPoly(IntPoly p) : poly_(std::move(p)) {
  if (poly_.degree() < 1) {
    throw InputError("polynomial must have degree >= 1, got '" + to_string(poly_) + "'");
  }
  if (poly_.leading() != 1) throw NotMonicError(poly_.leading());
}

MonicIntPoly parse_monic(std::string_view text) { return MonicIntPoly(parse_poly(text)); }

std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coeffs();
  const std::size_t deg = c.size() - 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const std::size_t power = deg - i;
    Integer mag = abs(c[i]);
    if (c[i] < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (power == 0) {
      out += to_decimal(mag);
      continue;
    }
    if (mag != 1) out += to_decimal(mag) + "*";
    out += 'x';
    if (power > 1) out += "^" + std::to_string(power);
  }
  return out;
}

Integer eval(const IntPoly& p, const Integer& n) {
  Integer acc = 0;
  for (const auto& c : p.coeffs()) {
    acc *= n;
    acc += c;
  }
  return acc;
}

std::vector<Integer> reduce_mod(const IntPoly& p, const Integer& m) {
  if (m < 2) throw InputError("modulus must be >= 2, got " + to_decimal(m));
  std::vector<Integer> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(mod_nonneg(c, m));
  strip_leading_zeros(out);
  return out;
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw InputError("pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  const auto& d = b.coeffs();
  const Integer& lb = d.front();
  std::vector<Integer> r = a.coeffs();
  int steps = a.degree() - b.degree() + 1;
  // Each step scales r by lb and cancels its leading term against b; the
  // leading slot then drops off the front.
  while (!r.empty() && static_cast<int>(r.size()) >= static_cast<int>(d.size())) {
    Integer lead = r.front();
    for (auto& v : r) v *= lb;
    for (std::size_t j = 0; j < d.size(); ++j) r[j] -= lead * d[j];
    r.erase(r.begin());
    --steps;
    strip_leading_zeros(r);
  }
  if (steps > 0) {
    Integer scale = ipow(lb, static_cast<unsigned long>(steps));
    for (auto& v : r) v *= scale;
  }
  return IntPoly(std::move(r));
}

std::optional<IntPoly> exact_quotient(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw InputError("division by the zero polynomial");
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  const auto& d = b.coeffs();
  std::vector<Integer> r = a.coeffs();
  const std::size_t qlen = r.size() - d.size() + 1;
  std::vector<Integer> q(qlen);
  for (std::size_t i = 0; i < qlen; ++i) {
    if (r[i] == 0) continue;
    if (!divides(d.front(), r[i])) return std::nullopt;
    q[i] = divexact(r[i], d.front());
    for (std::size_t j = 0; j < d.size(); ++j) r[i + j] -= q[i] * d[j];
  }
  for (std::size_t i = qlen; i < r.size(); ++i) {
    if (r[i] != 0) return std::nullopt;
  }
  return IntPoly(std::move(q));
}

IntPoly gcd_over_z(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() && g.is_zero()) throw InputError("gcd of two zero polynomials");
  IntPoly a = f.primitive_part();
  IntPoly b = g.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  // Euclid over Q; pseudo-division clears denominators and taking the
  // primitive part after each step keeps coefficients small.
  while (!b.is_zero()) {
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.primitive_part();
  }
  return a;
}

}  // namespace polygcd
