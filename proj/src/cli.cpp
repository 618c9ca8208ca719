#include "polygcd/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "polygcd/errors.hpp"
#include "polygcd/linalg.hpp"
#include "polygcd/serialize.hpp"
#include "polygcd/snf.hpp"

namespace polygcd::cli {

namespace {

constexpr std::size_t kTableSample = 8;

std::string join(const std::vector<Integer>& values, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += sep;
    out += to_decimal(values[i]);
  }
  return out;
}

std::string describe(const Factorization& fac) {
  std::string out = fac.sign < 0 ? "-" : "";
  if (fac.factors.empty()) return out + "1";
  for (std::size_t i = 0; i < fac.factors.size(); ++i) {
    if (i != 0) out += " * ";
    out += to_decimal(fac.factors[i].prime);
    if (fac.factors[i].exponent > 1) out += "^" + std::to_string(fac.factors[i].exponent);
  }
  if (fac.has_probable_primes()) out += " (contains probable primes)";
  return out;
}

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()));
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

void emit(std::ostream& out, const nlohmann::json& doc) { out << doc.dump(2) << '\n'; }

struct Polys {
  MonicIntPoly f;
  MonicIntPoly g;
};

Polys read_polys(const CliConfig& config) {
  if (config.f_text.empty() || config.g_text.empty()) {
    throw InputError("both --f and --g are required");
  }
  auto parse_one = [](const std::string& name, const std::string& text) {
    try {
      return parse_monic(text);
    } catch (const InputError& e) {
      throw InputError(name + " = '" + text + "': " + e.what());
    }
  };
  return {parse_one("--f", config.f_text), parse_one("--g", config.g_text)};
}

void print_profile(std::ostream& out, const BruteForceProfile& profile) {
  std::vector<std::vector<std::string>> rows{{"gcd", "count"}};
  for (const auto& [value, count] : profile.histogram) {
    rows.push_back({to_decimal(value), std::to_string(count)});
  }
  print_table(out, rows);
  out << "range: {" << join(profile.range, ", ") << "}\n";
}

void print_atlas(std::ostream& out, const GcdAtlas& atlas) {
  out << "f: " << to_string(atlas.f) << '\n'
      << "g: " << to_string(atlas.g) << '\n'
      << "resultant: " << to_decimal(atlas.resultant) << " = " << describe(atlas.factorization)
      << " (square-free)\n";
  out << "common root mod p:\n";
  for (const auto& [p, c] : atlas.roots) out << "  " << to_decimal(p) << ": " << to_decimal(c) << '\n';
  const Integer modulus = abs(atlas.resultant);
  std::vector<std::vector<std::string>> rows{
      {"divisor", "multiplicity", "residues mod " + to_decimal(modulus)}};
  for (const auto& e : atlas.entries) {
    std::vector<Integer> shown(e.residues.begin(),
                               e.residues.begin() + static_cast<std::ptrdiff_t>(
                                                        std::min(kTableSample, e.residues.size())));
    std::string cell = join(shown, " ");
    if (Integer(shown.size()) < e.multiplicity) cell += " ...";
    rows.push_back({to_decimal(e.divisor), to_decimal(e.multiplicity), cell});
  }
  print_table(out, rows);
}

void print_witness(std::ostream& out, const WitnessReport& w) {
  if (!w.applicable()) {
    const std::string p = to_decimal(*w.blocking_prime);
    out << "coprime criterion: criterion inapplicable (" << p << "^" << p << " divides r)\n";
  } else {
    out << "coprime criterion: witness n = " << to_decimal(*w.witness)
        << " with gcd(f(n), g(n)) = 1\n";
  }
}

int cmd_analyze(const CliConfig& config, std::ostream& out) {
  const auto [f, g] = read_polys(config);
  AnalysisOptions options;
  options.residue_cap = config.caps.residue_listing;
  options.brute_force_cap = config.caps.brute_force;
  options.divisor_cap = config.caps.divisor_count;
  options.seed = config.seed;
  options.verify = config.verify;
  const AnalysisOutcome outcome = analyze(f, g, options);
  if (config.json) {
    emit(out, to_json(f, g, outcome));
    return kOk;
  }
  if (const auto* atlas = std::get_if<GcdAtlas>(&outcome)) {
    print_atlas(out, *atlas);
  } else if (const auto* zero = std::get_if<ZeroResultant>(&outcome)) {
    out << "resultant 0; common factor over \u2124[x]: " << to_string(zero->common_factor)
        << "; range is infinite\n";
    out << "gcd(f(n), g(n)) for n = 0..7: " << join(zero->sample_values, " ") << '\n';
  } else {
    const auto& ns = std::get<NotSquarefree>(outcome);
    out << "f: " << to_string(f) << '\n'
        << "g: " << to_string(g) << '\n'
        << "resultant: " << to_decimal(ns.resultant) << " = " << describe(ns.factorization)
        << " (not square-free)\n";
    if (ns.profile) {
      out << "empirical scan over one period (mod " << to_decimal(ns.profile->modulus) << "):\n";
      print_profile(out, *ns.profile);
      out << "minimal period: " << to_decimal(*ns.minimal_period) << '\n';
    } else {
      out << "|r| exceeds the brute-force cap " << config.caps.brute_force
          << "; no range scan\n";
    }
    print_witness(out, ns.witness);
  }
  return kOk;
}

int cmd_resultant(const CliConfig& config, std::ostream& out) {
  const auto [f, g] = read_polys(config);
  const Integer r = resultant(f, g, config.verify);
  if (config.json) {
    emit(out, {{"f", to_string(f)}, {"g", to_string(g)}, {"resultant", to_decimal(r)}});
  } else {
    out << to_decimal(r) << '\n';
  }
  return kOk;
}

int cmd_snf(const CliConfig& config, std::ostream& out, std::istream& in) {
  IntMatrix m = [&] {
    if (config.matrix_path == "-") return read_matrix(in);
    std::ifstream file(config.matrix_path);
    if (!file) throw InputError("cannot open matrix file '" + config.matrix_path + "'");
    return read_matrix(file);
  }();
  const SnfResult snf = smith_normal_form(m);
  if (config.json) {
    emit(out, to_json(snf, config.transforms));
    return kOk;
  }
  out << "invariant factors: " << join(snf.invariant_factors, " ") << '\n';
  if (config.transforms) out << "U:\n" << to_string(snf.u) << "V:\n" << to_string(snf.v);
  return kOk;
}

int cmd_brute_force(const CliConfig& config, std::ostream& out) {
  const auto [f, g] = read_polys(config);
  const BruteForceProfile profile = brute_force_profile(f, g, config.caps.brute_force);
  if (config.json) {
    emit(out, to_json(profile));
  } else {
    out << "modulus: " << to_decimal(profile.modulus) << '\n';
    print_profile(out, profile);
  }
  return kOk;
}

int cmd_witness(const CliConfig& config, std::ostream& out) {
  const auto [f, g] = read_polys(config);
  const Integer r = resultant(f, g, config.verify);
  if (r == 0) throw InputError("resultant is 0; the coprime criterion needs r != 0");
  const WitnessReport report = coprime_witness(f, g, factor(r, config.seed));
  if (config.json) {
    emit(out, to_json(report));
  } else {
    print_witness(out, report);
  }
  return kOk;
}

int cmd_period(const CliConfig& config, std::ostream& out) {
  const auto [f, g] = read_polys(config);
  const BruteForceProfile profile = brute_force_profile(f, g, config.caps.brute_force);
  const Integer t = minimal_period(profile);
  if (config.json) {
    emit(out, {{"modulus", to_decimal(profile.modulus)}, {"minimal_period", to_decimal(t)}});
  } else {
    out << "minimal period: " << to_decimal(t) << " (|r| = " << to_decimal(profile.modulus)
        << ")\n";
  }
  return kOk;
}

}  // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err, std::istream& in) {
  try {
    switch (config.subcommand) {
      case Subcommand::analyze: return cmd_analyze(config, out);
      case Subcommand::resultant: return cmd_resultant(config, out);
      case Subcommand::snf: return cmd_snf(config, out, in);
      case Subcommand::brute_force: return cmd_brute_force(config, out);
      case Subcommand::witness: return cmd_witness(config, out);
      case Subcommand::period: return cmd_period(config, out);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const InvariantBreach& e) {
    err << "INTERNAL INVARIANT BREACH (this is a bug): " << e.what() << '\n';
    return kInvariantBreach;
  } catch (const std::exception& e) {
    err << "INTERNAL ERROR: " << e.what() << '\n';
    return kInvariantBreach;
  }
  return kInputError;
}

std::variant<CliConfig, int> parse_command_line(int argc, const char* const* argv,
                                                std::ostream& out, std::ostream& err) {
  CliConfig config;
  CLI::App app{"gcd(f(n), g(n)) atlas for monic integer polynomials", "polygcd"};
  app.require_subcommand(1);

  auto add_poly_options = [&](CLI::App* sub) {
    sub->add_option("--f", config.f_text, "first monic polynomial in x")->required();
    sub->add_option("--g", config.g_text, "second monic polynomial in x")->required();
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", config.json, "emit JSON");
    sub->add_flag("--verify", config.verify, "cross-check with PRS resultant and brute force");
    sub->add_option("--cap-brute", config.caps.brute_force, "largest |r| scanned by brute force")
        ->check(CLI::PositiveNumber);
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "divisor atlas of gcd(f(n), g(n))");
  add_poly_options(analyze_cmd);
  add_common(analyze_cmd);
  analyze_cmd->add_option("--cap-residues", config.caps.residue_listing,
                          "residues listed per divisor")
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--cap-divisors", config.caps.divisor_count, "largest divisor count")
      ->check(CLI::PositiveNumber);

  auto* resultant_cmd = app.add_subcommand("resultant", "resultant of f and g");
  add_poly_options(resultant_cmd);
  add_common(resultant_cmd);

  auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf_cmd->add_option("matrix", config.matrix_path, "matrix file, one row per line ('-' = stdin)");
  snf_cmd->add_flag("--transforms", config.transforms, "also print U and V");
  snf_cmd->add_flag("--json", config.json, "emit JSON");

  auto* brute_cmd = app.add_subcommand("brute-force", "gcd values over one full period");
  add_poly_options(brute_cmd);
  add_common(brute_cmd);

  auto* witness_cmd = app.add_subcommand("witness", "n with gcd(f(n), g(n)) = 1 via the p^p criterion");
  add_poly_options(witness_cmd);
  add_common(witness_cmd);

  auto* period_cmd = app.add_subcommand("period", "smallest positive period of gcd(f(n), g(n))");
  add_poly_options(period_cmd);
  add_common(period_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  if (*analyze_cmd) config.subcommand = Subcommand::analyze;
  if (*resultant_cmd) config.subcommand = Subcommand::resultant;
  if (*snf_cmd) config.subcommand = Subcommand::snf;
  if (*brute_cmd) config.subcommand = Subcommand::brute_force;
  if (*witness_cmd) config.subcommand = Subcommand::witness;
  if (*period_cmd) config.subcommand = Subcommand::period;

  if (const char* seed = std::getenv("POLYGCD_SEED")) {
    try {
      std::size_t used = 0;
      config.seed = std::stoull(seed, &used);
      if (used != std::string(seed).size()) throw std::invalid_argument(seed);
    } catch (const std::exception&) {
      err << "error: POLYGCD_SEED must be a nonnegative integer, got '" << seed << "'\n";
      return kInputError;
    }
  }
  return config;
}

}  // namespace polygcd::cli
