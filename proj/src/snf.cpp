#include "polygcd/snf.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "polygcd/errors.hpp"

namespace polygcd {

namespace {

struct Xgcd {
  Integer g, s, t;  // g = s*a + t*b, g >= 0
};

Xgcd xgcd(const Integer& a, const Integer& b) {
  Xgcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// (row_i, row_j) <- (a*row_i + b*row_j, c*row_i + d*row_j); ad - bc must be +-1.
void mix_rows(IntMatrix& m, std::size_t i, std::size_t j, const Integer& a, const Integer& b,
              const Integer& c, const Integer& d) {
  for (std::size_t k = 0; k < m.cols(); ++k) {
    Integer x = m(i, k);
    Integer y = m(j, k);
    m(i, k) = a * x + b * y;
    m(j, k) = c * x + d * y;
  }
}

void mix_cols(IntMatrix& m, std::size_t i, std::size_t j, const Integer& a, const Integer& b,
              const Integer& c, const Integer& d) {
  for (std::size_t k = 0; k < m.rows(); ++k) {
    Integer x = m(k, i);
    Integer y = m(k, j);
    m(k, i) = a * x + b * y;
    m(k, j) = c * x + d * y;
  }
}

class SmithReducer {
 public:
  explicit SmithReducer(const IntMatrix& m)
      : a_(m), u_(IntMatrix::identity(m.rows())), v_(IntMatrix::identity(m.cols())) {}

  SnfResult run() {
    const std::size_t r = std::min(a_.rows(), a_.cols());
    for (std::size_t t = 0; t < r; ++t) {
      if (!place_pivot(t)) break;
      clear_cross(t);
    }
    fix_divisibility(r);
    SnfResult out{{}, std::move(u_), std::move(v_)};
    for (std::size_t i = 0; i < r; ++i) {
      if (a_(i, i) < 0) {
        negate_row(a_, i);
        negate_row(out.u, i);
      }
      out.invariant_factors.push_back(a_(i, i));
    }
    return out;
  }

 private:
  // Moves the smallest nonzero entry of the trailing block to (t, t).
  bool place_pivot(std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < a_.rows(); ++i) {
      for (std::size_t j = t; j < a_.cols(); ++j) {
        if (a_(i, j) == 0) continue;
        if (!best || mpz_cmpabs(a_(i, j).get_mpz_t(), a_(best->first, best->second).get_mpz_t()) < 0) best = {i, j};
      }
    }
    if (!best) return false;
    a_.swap_rows(t, best->first);
    u_.swap_rows(t, best->first);
    a_.swap_cols(t, best->second);
    v_.swap_cols(t, best->second);
    return true;
  }

  // Zeroes row t and column t outside the diagonal. Each non-exact step
  // strictly shrinks |a(t,t)|, so the loop terminates.
  void clear_cross(std::size_t t) {
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < a_.rows(); ++i) {
        if (a_(i, t) == 0) continue;
        const Integer p = a_(t, t);
        const Integer q = a_(i, t);
        if (divides(p, q)) {
          const Integer k = divexact(q, p);
          mix_rows(a_, t, i, 1, 0, -k, 1);
          mix_rows(u_, t, i, 1, 0, -k, 1);
        } else {
          const Xgcd x = xgcd(p, q);
          const Integer pg = divexact(p, x.g), qg = divexact(q, x.g);
          mix_rows(a_, t, i, x.s, x.t, -qg, pg);
          mix_rows(u_, t, i, x.s, x.t, -qg, pg);
        }
      }
      for (std::size_t j = t + 1; j < a_.cols(); ++j) {
        if (a_(t, j) == 0) continue;
        const Integer p = a_(t, t);
        const Integer q = a_(t, j);
        if (divides(p, q)) {
          const Integer k = divexact(q, p);
          mix_cols(a_, t, j, 1, 0, -k, 1);
          mix_cols(v_, t, j, 1, 0, -k, 1);
        } else {
          const Xgcd x = xgcd(p, q);
          const Integer pg = divexact(p, x.g), qg = divexact(q, x.g);
          mix_cols(a_, t, j, x.s, x.t, -qg, pg);
          mix_cols(v_, t, j, x.s, x.t, -qg, pg);
          dirty = true;
        }
      }
    }
  }

  // Replaces (d_i, d_j) by (gcd, lcm) until d_i | d_j for all i < j.
  //   [ s    t  ] diag(a, b) [ 1  -t*b/g ]  = diag(g, a*b/g)
  //   [-b/g a/g ]            [ 1   s*a/g ]
  void fix_divisibility(std::size_t r) {
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = i + 1; j < r; ++j) {
        const Integer a = a_(i, i);
        const Integer b = a_(j, j);
        if (b == 0 && a == 0) continue;
        if (a != 0 && divides(a, b)) continue;
        const Xgcd x = xgcd(a, b);
        const Integer ag = divexact(a, x.g), bg = divexact(b, x.g);
        mix_rows(a_, i, j, x.s, x.t, -bg, ag);
        mix_rows(u_, i, j, x.s, x.t, -bg, ag);
        mix_cols(a_, i, j, 1, 1, Integer(-x.t * bg), Integer(x.s * ag));
        mix_cols(v_, i, j, 1, 1, Integer(-x.t * bg), Integer(x.s * ag));
      }
    }
  }

  static void negate_row(IntMatrix& m, std::size_t i) {
    for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = -m(i, k);
  }

  IntMatrix a_;
  IntMatrix u_;
  IntMatrix v_;
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
  SnfResult res = SmithReducer(m).run();

  IntMatrix expected(m.rows(), m.cols());
  for (std::size_t i = 0; i < res.invariant_factors.size(); ++i) {
    expected(i, i) = res.invariant_factors[i];
  }
  if (res.u * m * res.v != expected) {
    throw InvariantBreach("Smith normal form reconstruction U*M*V != D failed");
  }
  return res;
}

std::vector<Integer> invariant_factors(const IntMatrix& m) {
  return smith_normal_form(m).invariant_factors;
}

}  // namespace polygcd
