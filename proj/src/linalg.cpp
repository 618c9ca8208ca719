#include "polygcd/linalg.hpp"

#include <istream>
#include <sstream>
#include <utility>

#include "polygcd/errors.hpp"

namespace polygcd {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) throw InputError("matrix dimensions must be positive");
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw InputError("matrix dimensions must be positive");
  if (entries_.size() != rows * cols) {
    throw InputError("matrix needs " + std::to_string(rows * cols) + " entries, got " +
                     std::to_string(entries_.size()));
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  if (rows.empty() || rows.front().empty()) throw InputError("matrix must be nonempty");
  const std::size_t cols = rows.front().size();
  std::vector<Integer> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw InputError("ragged matrix rows");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return IntMatrix(rows.size(), cols, std::move(entries));
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) swap((*this)(i, a), (*this)(i, b));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product dimension mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

std::string to_string(const IntMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j != 0) out += ' ';
      out += to_decimal(m(i, j));
    }
    out += '\n';
  }
  return out;
}

IntMatrix read_matrix(std::istream& in) {
  std::vector<std::vector<Integer>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::vector<Integer> row;
    std::string tok;
    while (fields >> tok) row.push_back(parse_integer(tok));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InputError("no matrix rows in input");
  return IntMatrix::from_rows(rows);
}

IntMatrix sylvester_matrix(const MonicIntPoly& f, const MonicIntPoly& g) {
  const auto k = static_cast<std::size_t>(f.degree());
  const auto l = static_cast<std::size_t>(g.degree());
  const std::size_t n = k + l;
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j <= k; ++j) m(i, i + j) = f.coeffs()[j];
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j <= l; ++j) m(l + i, i + j) = g.coeffs()[j];
  }
  return m;
}

Integer det_bareiss(const IntMatrix& m) {
  if (!m.is_square()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  IntMatrix a = m;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      // A zero column in the trailing block makes the matrix singular.
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Integer resultant(const MonicIntPoly& f, const MonicIntPoly& g, bool verify) {
  Integer r = det_bareiss(sylvester_matrix(f, g));
  if (verify) {
    Integer check = resultant_prs(f, g);
    if (check != r) {
      throw InvariantBreach("resultant mismatch: Bareiss " + to_decimal(r) + " vs PRS " +
                            to_decimal(check));
    }
  }
  return r;
}

Integer resultant_prs(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  IntPoly a = f;
  IntPoly b = g;
  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
  }
  const Integer ca = a.content();
  const Integer cb = b.content();
  {
    std::vector<Integer> va, vb;
    for (const auto& c : a.coeffs()) va.push_back(divexact(c, ca));
    for (const auto& c : b.coeffs()) vb.push_back(divexact(c, cb));
    a = IntPoly(std::move(va));
    b = IntPoly(std::move(vb));
  }
  const Integer t = ipow(ca, static_cast<unsigned long>(b.degree())) *
                    ipow(cb, static_cast<unsigned long>(a.degree()));
  Integer gc = 1;
  Integer h = 1;
  while (b.degree() > 0) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) return 0;
    a = std::move(b);
    // Subresultant step: the division by gc * h^delta is exact.
    const Integer divisor = gc * ipow(h, static_cast<unsigned long>(delta));
    std::vector<Integer> vb;
    vb.reserve(r.coeffs().size());
    for (const auto& c : r.coeffs()) vb.push_back(divexact(c, divisor));
    b = IntPoly(std::move(vb));
    gc = a.leading();
    // h <- h^(1-delta) * gc^delta
    if (delta > 0) {
      h = divexact(ipow(gc, static_cast<unsigned long>(delta)),
                   ipow(h, static_cast<unsigned long>(delta - 1)));
    }
  }
  // b is a nonzero constant here.
  const auto da = static_cast<unsigned long>(a.degree());
  if (da == 0) return s * t;
  h = divexact(ipow(b.leading(), da), ipow(h, da - 1));
  return s * t * h;
}

}  // namespace polygcd
