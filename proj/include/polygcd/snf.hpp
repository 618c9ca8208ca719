#pragma once

#include <vector>

#include "polygcd/integer.hpp"
#include "polygcd/linalg.hpp"

namespace polygcd {

/// U * M * V = diag(invariant_factors), U and V unimodular.
struct SnfResult {
  /// d_1 | d_2 | ... , all nonnegative; min(rows, cols) entries.
  std::vector<Integer> invariant_factors;
  IntMatrix u;  // rows x rows
  IntMatrix v;  // cols x cols
};

/// Smith normal form with transforms. The reconstruction U*M*V = D is checked
/// before returning; failure throws InvariantBreach.
SnfResult smith_normal_form(const IntMatrix& m);

std::vector<Integer> invariant_factors(const IntMatrix& m);

}  // namespace polygcd
