#pragma once

#include <json.hpp>

#include "polygcd/analysis.hpp"
#include "polygcd/ntheory.hpp"
#include "polygcd/oracle.hpp"
#include "polygcd/snf.hpp"

namespace polygcd {

// JSON documents. Every integer is written as a decimal string so values of
// any size survive; object keys come out sorted, which makes dump() output
// canonical.

/// {"f", "g", "resultant", "squarefree", "roots": {p: c}, "entries": [
///   {"divisor", "multiplicity", "residues": [..], "residues_truncated"}]}
nlohmann::json to_json(const GcdAtlas& atlas);

/// {"modulus", "histogram": {value: count}, "range": [..]}
nlohmann::json to_json(const BruteForceProfile& profile);

/// {"n", "sign", "factors": [{"prime", "exponent"}], "probable_primes"}
nlohmann::json to_json(const Factorization& factorization);

nlohmann::json to_json(const WitnessReport& report);

/// Atlas documents are returned unchanged; the other branches carry an
/// "outcome" tag ("zero_resultant" or "not_squarefree").
nlohmann::json to_json(const MonicIntPoly& f, const MonicIntPoly& g, const AnalysisOutcome& outcome);

/// {"invariant_factors": [..]} plus "u" and "v" as row arrays if requested.
nlohmann::json to_json(const SnfResult& snf, bool with_transforms);

}  // namespace polygcd
