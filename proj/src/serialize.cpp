#include "polygcd/serialize.hpp"

namespace polygcd {

namespace {

using nlohmann::json;

json strings(const std::vector<Integer>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_decimal(v));
  return out;
}

json rows(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out.push_back(strings({m.row(i).begin(), m.row(i).end()}));
  }
  return out;
}

}  // namespace

json to_json(const GcdAtlas& atlas) {
  json roots = json::object();
  for (const auto& [p, c] : atlas.roots) roots[to_decimal(p)] = to_decimal(c);
  json entries = json::array();
  for (const auto& e : atlas.entries) {
    entries.push_back({{"divisor", to_decimal(e.divisor)},
                       {"multiplicity", to_decimal(e.multiplicity)},
                       {"residues", strings(e.residues)},
                       {"residues_truncated", e.residues_truncated}});
  }
  return {{"f", to_string(atlas.f)},
          {"g", to_string(atlas.g)},
          {"resultant", to_decimal(atlas.resultant)},
          {"squarefree", atlas.squarefree},
          {"roots", std::move(roots)},
          {"entries", std::move(entries)}};
}

json to_json(const BruteForceProfile& profile) {
  json histogram = json::object();
  for (const auto& [value, count] : profile.histogram) {
    histogram[to_decimal(value)] = std::to_string(count);
  }
  return {{"modulus", to_decimal(profile.modulus)},
          {"histogram", std::move(histogram)},
          {"range", strings(profile.range)}};
}

json to_json(const Factorization& factorization) {
  json factors = json::array();
  for (const auto& pp : factorization.factors) {
    factors.push_back({{"prime", to_decimal(pp.prime)}, {"exponent", std::to_string(pp.exponent)}});
  }
  return {{"n", to_decimal(factorization.n)},
          {"sign", std::to_string(factorization.sign)},
          {"factors", std::move(factors)},
          {"probable_primes", factorization.has_probable_primes()}};
}

json to_json(const WitnessReport& report) {
  json out = {{"applicable", report.applicable()}};
  out["witness"] = report.witness ? json(to_decimal(*report.witness)) : json(nullptr);
  out["blocking_prime"] =
      report.blocking_prime ? json(to_decimal(*report.blocking_prime)) : json(nullptr);
  return out;
}

json to_json(const MonicIntPoly& f, const MonicIntPoly& g, const AnalysisOutcome& outcome) {
  struct Visitor {
    const MonicIntPoly& f;
    const MonicIntPoly& g;
    json operator()(const GcdAtlas& atlas) const { return to_json(atlas); }
    json operator()(const ZeroResultant& zero) const {
      return {{"outcome", "zero_resultant"},
              {"f", to_string(f)},
              {"g", to_string(g)},
              {"resultant", "0"},
              {"common_factor", to_string(zero.common_factor)},
              {"sample_values", strings(zero.sample_values)}};
    }
    json operator()(const NotSquarefree& ns) const {
      json out = {{"outcome", "not_squarefree"},
                  {"f", to_string(f)},
                  {"g", to_string(g)},
                  {"resultant", to_decimal(ns.resultant)},
                  {"squarefree", false},
                  {"factorization", to_json(ns.factorization)},
                  {"witness", to_json(ns.witness)}};
      out["profile"] = ns.profile ? to_json(*ns.profile) : json(nullptr);
      out["minimal_period"] = ns.minimal_period ? json(to_decimal(*ns.minimal_period)) : json(nullptr);
      return out;
    }
  };
  return std::visit(Visitor{f, g}, outcome);
}

json to_json(const SnfResult& snf, bool with_transforms) {
  json out = {{"invariant_factors", strings(snf.invariant_factors)}};
  if (with_transforms) {
    out["u"] = rows(snf.u);
    out["v"] = rows(snf.v);
  }
  return out;
}

}  // namespace polygcd
