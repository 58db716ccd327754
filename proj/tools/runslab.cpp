// runslab: alternating-run distributions of permutations, the commuting
// involution action behind their factorization, and exhaustive checks of
// every structural claim the factorization rests on.
//
// Exit codes: 0 success / all suites verified, 1 verification
// counterexample or violated structural invariant, 2 usage or validation
// error (including refused work over a size cap).

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "runslab/enumeration.hpp"
#include "runslab/group_action.hpp"
#include "runslab/permutation.hpp"
#include "runslab/polynomial.hpp"

namespace {

using nlohmann::json;
using namespace runslab;

// RUNSLAB_MAX_N may lower (never raise) the global length cap, for CI
// environments that want a tighter budget.
int effective_hard_cap() {
  const char* env = std::getenv("RUNSLAB_MAX_N");
  if (env == nullptr || *env == '\0') return kMaxLength;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || value < 1) {
    throw InvalidInput(std::string("RUNSLAB_MAX_N must be a positive integer, got \"") + env + "\"");
  }
  return std::min<long>(value, kMaxLength);
}

void check_hard_cap(int n) {
  const int cap = effective_hard_cap();
  if (n > cap) {
    throw InvalidInput("n=" + std::to_string(n) + " exceeds the hard cap " + std::to_string(cap) +
                       (cap < kMaxLength ? " (lowered by RUNSLAB_MAX_N)" : ""));
  }
}

json polynomial_to_json(const RunPolynomial& poly) {
  json object = json::object();
  for (const auto& [exponent, coefficient] : poly.coefficients()) {
    object[std::to_string(exponent)] = coeff_to_string(coefficient);
  }
  return object;
}

std::string factored_form(int a, int m) {
  std::string out;
  if (a == 1) out += "z";
  if (a > 1) out += "z^" + std::to_string(a);
  if (m == 1) out += "(1+z)";
  if (m > 1) out += "(1+z)^" + std::to_string(m);
  return out.empty() ? "1" : out;
}

std::string generator_list(GroupElement g, const GeneratorSet& gens) {
  std::string out = "{";
  bool first = true;
  for (int j = 0; j < gens.count(); ++j) {
    if (g.mask & (std::uint32_t{1} << j)) {
      if (!first) out += ",";
      out += "c_" + std::to_string(gens.indices()[j]);
      first = false;
    }
  }
  return out + "}";
}

json generator_indices(GroupElement g, const GeneratorSet& gens) {
  json list = json::array();
  for (int j = 0; j < gens.count(); ++j) {
    if (g.mask & (std::uint32_t{1} << j)) list.push_back(gens.indices()[j]);
  }
  return list;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    quoted += c;
    if (c == '"') quoted += '"';
  }
  return quoted + "\"";
}

void emit_document(const std::string& command, const json& payload, bool ok) {
  json document = {{"schema_version", "1"},
                   {"command", command},
                   {"status", ok ? "ok" : "failed"},
                   {"payload", payload}};
  std::cout << document.dump(2) << "\n";
}

Permutation resolve_permutation(const std::string& perm_text, int n, std::uint64_t seed) {
  if (!perm_text.empty()) {
    Permutation p = parse_permutation(perm_text);
    check_hard_cap(p.size());
    return p;
  }
  if (n < 1) throw InvalidInput("provide --perm, or --n to sample a seeded random permutation");
  check_hard_cap(n);
  // Fisher-Yates with an explicit index draw so the result depends only on
  // the seed, not on library distribution internals.
  std::mt19937_64 rng(seed);
  std::array<std::uint8_t, kMaxLength> buf{};
  for (int i = 0; i < n; ++i) buf[i] = static_cast<std::uint8_t>(i + 1);
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(buf[i], buf[j]);
  }
  return Permutation::unchecked({buf.data(), static_cast<std::size_t>(n)});
}

// ---------------------------------------------------------------------------
// dist / quotient
// ---------------------------------------------------------------------------

int run_dist(int n, const std::string& method, int threads, const std::string& format, bool force,
             bool quotient_only) {
  if (n < 1) throw InvalidInput("n must be >= 1");
  check_hard_cap(n);
  const EnumerationOptions options{threads, force};
  const DistributionResult result = method == "orbit" ? distribution_via_orbits(n, options)
                                                      : distribution_bruteforce(n, options);
  if (quotient_only && !result.quotient) {
    throw InvalidInput("no quotient: R_n is factored as (1+z)^m * quotient only for n >= 4");
  }

  const auto elapsed_us =
      std::chrono::duration_cast<std::chrono::microseconds>(result.elapsed).count();
  if (format == "json") {
    json payload = {{"n", result.n},
                    {"m", result.m},
                    {"method", std::string(method_name(result.method))},
                    {"workers", result.workers},
                    {"elapsed_us", elapsed_us},
                    {"multiplicity_at_minus_one", result.multiplicity_at_minus_one},
                    {"coefficient_sum", coeff_to_string(result.polynomial.eval_at(1))}};
    if (!quotient_only) payload["polynomial"] = polynomial_to_json(result.polynomial);
    payload["quotient"] = result.quotient ? polynomial_to_json(*result.quotient) : json();
    emit_document(quotient_only ? "quotient" : "dist", payload, true);
  } else if (format == "csv") {
    const RunPolynomial& shown = quotient_only ? *result.quotient : result.polynomial;
    std::cout << "exponent,coefficient\n";
    for (const auto& [exponent, coefficient] : shown.coefficients()) {
      std::cout << exponent << "," << coeff_to_string(coefficient) << "\n";
    }
  } else if (quotient_only) {
    std::cout << "quotient = " << result.quotient->to_string() << "; m=" << result.m << "\n";
  } else {
    std::cout << "R_" << result.n << "(z) = " << result.polynomial.to_string()
              << "; m=" << result.m << "\n";
    if (result.quotient) {
      std::cout << "quotient = " << result.quotient->to_string() << "\n";
    }
    std::cout << "multiplicity at -1 = " << result.multiplicity_at_minus_one << "\n";
    std::cout << "coefficient sum = " << coeff_to_string(result.polynomial.eval_at(1)) << " = "
              << result.n << "!\n";
    std::cout << "method " << method_name(result.method) << ", workers " << result.workers
              << ", elapsed " << elapsed_us / 1000.0 << " ms\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// orbit
// ---------------------------------------------------------------------------

int run_orbit(const std::string& perm_text, int n, std::uint64_t seed, const std::string& format) {
  const Permutation seed_perm = resolve_permutation(perm_text, n, seed);
  const GeneratorSet gens(seed_perm.size());
  const Orbit orbit = orbit_of(seed_perm);
  const RunPolynomial poly = orbit_polynomial(orbit);
  const std::string factored = factored_form(orbit.minimal().runs, orbit.generator_count());

  if (format == "json") {
    json members = json::array();
    for (std::uint32_t mask = 0; mask < orbit.size(); ++mask) {
      const OrbitMember& member = orbit.member(mask);
      members.push_back({{"mask", mask},
                         {"generators", generator_indices({mask}, gens)},
                         {"permutation", member.perm.to_string()},
                         {"runs", member.runs}});
    }
    const json payload = {{"n", seed_perm.size()},
                          {"m", orbit.generator_count()},
                          {"seed_permutation", seed_perm.to_string()},
                          {"members", members},
                          {"minimal",
                           {{"permutation", orbit.minimal().perm.to_string()},
                            {"runs", orbit.minimal().runs},
                            {"mask", orbit.minimal_mask().mask}}},
                          {"polynomial", polynomial_to_json(poly)},
                          {"factored", factored}};
    emit_document("orbit", payload, true);
  } else if (format == "csv") {
    std::cout << "mask,generators,permutation,runs\n";
    for (std::uint32_t mask = 0; mask < orbit.size(); ++mask) {
      const OrbitMember& member = orbit.member(mask);
      std::cout << mask << "," << csv_field(generator_list({mask}, gens)) << ","
                << member.perm.to_string() << "," << member.runs << "\n";
    }
  } else {
    std::cout << "orbit of " << seed_perm.to_string() << " (n=" << seed_perm.size()
              << ", m=" << orbit.generator_count() << ", size " << orbit.size() << ")\n";
    for (std::uint32_t mask = 0; mask < orbit.size(); ++mask) {
      const OrbitMember& member = orbit.member(mask);
      std::cout << "  mask " << mask << " " << generator_list({mask}, gens) << ": "
                << member.perm.to_string() << ", runs " << member.runs << "\n";
    }
    std::cout << "minimal: " << orbit.minimal().perm.to_string() << " (runs "
              << orbit.minimal().runs << ", mask " << orbit.minimal_mask().mask << ")\n";
    std::cout << "polynomial: " << poly.to_string() << " = " << factored << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// canon
// ---------------------------------------------------------------------------

int run_canon(const std::string& perm_text, int n, std::uint64_t seed, const std::string& format) {
  const Permutation input = resolve_permutation(perm_text, n, seed);
  const GeneratorSet gens(input.size());
  const Canonicalization canon = canonicalize(input);
  if (!is_minimal(canon.minimal, gens)) {
    throw InvariantViolation("greedy canonicalization of " + input.to_string() +
                             " returned a non-minimal permutation " + canon.minimal.to_string());
  }

  if (format == "json") {
    const json payload = {{"input", input.to_string()},
                          {"input_runs", run_count(input)},
                          {"minimal", canon.minimal.to_string()},
                          {"runs", run_count(canon.minimal)},
                          {"mask", canon.applied.mask},
                          {"generators", generator_indices(canon.applied, gens)}};
    emit_document("canon", payload, true);
  } else if (format == "csv") {
    std::cout << "input,minimal,runs,mask\n";
    std::cout << csv_field(input.to_string()) << "," << csv_field(canon.minimal.to_string()) << ","
              << run_count(canon.minimal) << "," << canon.applied.mask << "\n";
  } else {
    std::cout << "input:   " << input.to_string() << " (runs " << run_count(input) << ")\n";
    std::cout << "minimal: " << canon.minimal.to_string() << " (runs " << run_count(canon.minimal)
              << ")\n";
    std::cout << "applied: " << generator_list(canon.applied, gens) << " (mask "
              << canon.applied.mask << ")\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int run_verify(int n_min, int n_max, const std::string& props, int threads,
               const std::string& format, bool force) {
  if (n_min < 1 || n_max < n_min) {
    throw InvalidInput("need 1 <= n-min <= n-max");
  }
  check_hard_cap(n_max);

  std::vector<Property> selected;
  if (props == "all") {
    const auto everything = all_properties();
    selected.assign(everything.begin(), everything.end());
  } else {
    std::size_t pos = 0;
    while (pos <= props.size()) {
      const std::size_t comma = std::min(props.find(',', pos), props.size());
      const std::string name = props.substr(pos, comma - pos);
      if (!name.empty()) selected.push_back(property_from_name(name));
      pos = comma + 1;
    }
    if (selected.empty()) throw InvalidInput("no properties selected");
  }

  const EnumerationOptions options{threads, force};
  std::vector<VerificationReport> reports;
  for (const Property property : selected) {
    for (int n = n_min; n <= n_max; ++n) {
      reports.push_back(verify_property(property, n, n, options));
    }
  }
  const bool all_passed =
      std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });

  if (format == "json") {
    json list = json::array();
    for (const auto& report : reports) {
      json entry = {{"property", std::string(property_name(report.property))},
                    {"n_min", report.n_min},
                    {"n_max", report.n_max},
                    {"passed", report.passed},
                    {"checked", report.checked},
                    {"counterexample", json()}};
      if (report.counterexample) {
        entry["counterexample"] = {{"permutation", report.counterexample->permutation},
                                   {"detail", report.counterexample->detail}};
      }
      list.push_back(std::move(entry));
    }
    emit_document("verify", {{"reports", list}, {"all_passed", all_passed}}, all_passed);
  } else if (format == "csv") {
    std::cout << "property,n,passed,checked,witness,detail\n";
    for (const auto& report : reports) {
      std::cout << property_name(report.property) << "," << report.n_min << ","
                << (report.passed ? "true" : "false") << "," << report.checked << ","
                << csv_field(report.counterexample ? report.counterexample->permutation : "") << ","
                << csv_field(report.counterexample ? report.counterexample->detail : "") << "\n";
    }
  } else {
    for (const auto& report : reports) {
      std::cout << (report.passed ? "PASS" : "FAIL") << "  " << property_name(report.property)
                << "  n=" << report.n_min << "  checked=" << report.checked << "\n";
      if (report.counterexample) {
        std::cout << "      witness: " << report.counterexample->permutation << "\n";
        std::cout << "      detail:  " << report.counterexample->detail << "\n";
      }
    }
    std::cout << (all_passed ? "all suites passed" : "counterexample found") << "\n";
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alternating-run distributions, orbits and verification"};
  app.require_subcommand(1);

  int n = 0;
  int n_min = 0;
  int n_max = 0;
  int threads = 0;
  std::uint64_t seed = 0;
  bool force = false;
  std::string method = "brute";
  std::string format = "text";
  std::string perm_text;
  std::string props = "all";

  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };
  const auto add_threads = [&](CLI::App* cmd) {
    cmd->add_option("--threads", threads, "worker count (default: machine parallelism)")
        ->check(CLI::NonNegativeNumber);
  };

  CLI::App* dist = app.add_subcommand("dist", "compute the run polynomial R_n(z)");
  dist->add_option("--n", n, "permutation length")->required();
  dist->add_option("--method", method, "enumeration method")
      ->check(CLI::IsMember({"brute", "orbit"}));
  add_threads(dist);
  add_format(dist);
  dist->add_flag("--force", force, "bypass the practical size caps");

  CLI::App* quotient = app.add_subcommand("quotient", "compute only the quotient R_n/(1+z)^m");
  quotient->add_option("--n", n, "permutation length")->required();
  quotient->add_option("--method", method, "enumeration method")
      ->check(CLI::IsMember({"brute", "orbit"}));
  add_threads(quotient);
  add_format(quotient);
  quotient->add_flag("--force", force, "bypass the practical size caps");

  CLI::App* orbit = app.add_subcommand("orbit", "list the orbit of a permutation");
  orbit->add_option("--perm", perm_text, "permutation, e.g. \"3 1 5 4 6 2\" or \"315462\"");
  orbit->add_option("--n", n, "sample a random permutation of this length instead");
  orbit->add_option("--seed", seed, "seed for --n sampling");
  add_format(orbit);

  CLI::App* canon = app.add_subcommand("canon", "canonicalize to the orbit-minimal permutation");
  canon->add_option("--perm", perm_text, "permutation, e.g. \"3 1 5 4 6 2\" or \"315462\"");
  canon->add_option("--n", n, "sample a random permutation of this length instead");
  canon->add_option("--seed", seed, "seed for --n sampling");
  add_format(canon);

  CLI::App* verify = app.add_subcommand("verify", "run the exhaustive property suites");
  verify->add_option("--n-min", n_min, "smallest length")->required();
  verify->add_option("--n-max", n_max, "largest length")->required();
  verify->add_option("--props", props, "comma-separated property list, or \"all\"");
  add_threads(verify);
  add_format(verify);
  verify->add_flag("--force", force, "bypass the practical size caps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::CallForAllHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return 2;
  }

  try {
    if (app.got_subcommand(dist)) return run_dist(n, method, threads, format, force, false);
    if (app.got_subcommand(quotient)) return run_dist(n, method, threads, format, force, true);
    if (app.got_subcommand(orbit)) return run_orbit(perm_text, n, seed, format);
    if (app.got_subcommand(canon)) return run_canon(perm_text, n, seed, format);
    if (app.got_subcommand(verify)) return run_verify(n_min, n_max, props, threads, format, force);
  } catch (const InvariantViolation& violation) {
    std::cerr << "invariant violated: " << violation.what() << "\n";
    return 1;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  }
  return 2;
}
