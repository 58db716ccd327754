#include "runslab/enumeration.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <thread>

namespace runslab {
namespace {

constexpr std::array<std::uint64_t, kMaxLength + 1> kFactorial = [] {
  std::array<std::uint64_t, kMaxLength + 1> table{};
  table[0] = 1;
  for (int i = 1; i <= kMaxLength; ++i) table[i] = table[i - 1] * static_cast<std::uint64_t>(i);
  return table;
}();

void check_length(int n) {
  if (n < 1 || n > kMaxLength) {
    throw InvalidInput("length " + std::to_string(n) + " outside [1, " +
                       std::to_string(kMaxLength) + "]");
  }
}

void check_practical_cap(int n, int cap, bool force, const std::string& what) {
  if (n <= cap || force) return;
  const double visits = static_cast<double>(kFactorial[n]);
  const double seconds = visits / 3e8;  // ballpark single-core visit rate
  throw CapExceeded(what + " for n=" + std::to_string(n) + " visits " +
                    std::to_string(kFactorial[n]) + " permutations (roughly " +
                    std::to_string(static_cast<long long>(seconds + 1)) +
                    " s per core); the default cap is " + std::to_string(cap) +
                    ", pass force to run anyway");
}

int resolve_workers(int requested) {
  if (requested < 0) throw InvalidInput("worker count must be >= 1");
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void unrank_into(int n, std::uint64_t rank, std::uint8_t* out) {
  std::array<std::uint8_t, kMaxLength> available;
  for (int v = 0; v < n; ++v) available[v] = static_cast<std::uint8_t>(v + 1);
  int remaining = n;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t block = kFactorial[remaining - 1];
    const int pick = static_cast<int>(rank / block);
    rank %= block;
    out[i] = available[pick];
    std::memmove(available.data() + pick, available.data() + pick + 1,
                 static_cast<std::size_t>(remaining - 1 - pick));
    --remaining;
  }
}

/// Visits every rank in the range in lexicographic order. The visitor gets
/// the raw one-line array; returning false stops the walk early.
template <class Visit>
void enumerate_range(int n, RankRange range, Visit&& visit) {
  if (range.begin >= range.end) return;
  std::array<std::uint8_t, kMaxLength> buf{};
  unrank_into(n, range.begin, buf.data());
  for (std::uint64_t rank = range.begin; rank < range.end; ++rank) {
    if constexpr (std::is_same_v<decltype(visit(buf.data(), n)), bool>) {
      if (!visit(buf.data(), n)) return;
    } else {
      visit(buf.data(), n);
    }
    std::next_permutation(buf.begin(), buf.begin() + n);
  }
}

using RunHistogram = std::array<std::uint64_t, kMaxLength + 1>;

/// One private histogram per range; single-range scans stay on this thread.
template <class Scan>
std::vector<RunHistogram> scan_in_parallel(int n, const std::vector<RankRange>& ranges,
                                           const Scan& scan) {
  std::vector<RunHistogram> histograms(ranges.size());
  for (auto& h : histograms) h.fill(0);
  if (ranges.size() == 1) {
    scan(n, ranges[0], histograms[0]);
    return histograms;
  }
  std::vector<std::thread> threads;
  threads.reserve(ranges.size());
  for (std::size_t k = 0; k < ranges.size(); ++k) {
    threads.emplace_back([&, k] { scan(n, ranges[k], histograms[k]); });
  }
  for (auto& t : threads) t.join();
  return histograms;
}

/// Deterministic reduction: convert each worker histogram and merge in
/// range order (merge is associative and commutative, so any shape would
/// give the same polynomial; range order keeps it obvious).
RunPolynomial reduce_histograms(const std::vector<RunHistogram>& histograms) {
  RunPolynomial total;
  for (const auto& histogram : histograms) {
    RunPolynomial part;
    for (int runs = 0; runs <= kMaxLength; ++runs) {
      if (histogram[runs] != 0) {
        part.add_term(runs, static_cast<RunPolynomial::Coeff>(histogram[runs]));
      }
    }
    total = merge(total, part);
  }
  return total;
}

std::uint64_t binomial(int m, int k) {
  if (k < 0 || k > m) return 0;
  std::uint64_t value = 1;
  for (int i = 0; i < k; ++i) value = value * static_cast<std::uint64_t>(m - i) / (i + 1);
  return value;
}

int sign_of(int x) { return (x > 0) - (x < 0); }

}  // namespace

std::uint64_t factorial(int n) {
  if (n < 0 || n > kMaxLength) {
    throw InvalidInput("factorial defined for 0 <= n <= " + std::to_string(kMaxLength));
  }
  return kFactorial[n];
}

Permutation nth_permutation(int n, std::uint64_t rank) {
  check_length(n);
  if (rank >= kFactorial[n]) {
    throw InvalidInput("rank " + std::to_string(rank) + " out of range for n=" + std::to_string(n));
  }
  std::array<std::uint8_t, kMaxLength> buf{};
  unrank_into(n, rank, buf.data());
  return Permutation::unchecked({buf.data(), static_cast<std::size_t>(n)});
}

std::uint64_t rank_of(const Permutation& p) {
  const int n = p.size();
  std::uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller_later = 0;
    for (int j = i + 1; j < n; ++j) smaller_later += p.data()[j] < p.data()[i];
    rank += static_cast<std::uint64_t>(smaller_later) * kFactorial[n - 1 - i];
  }
  return rank;
}

std::vector<RankRange> partition_work(int n, int workers) {
  check_length(n);
  if (workers < 1) throw InvalidInput("worker count must be >= 1");
  const std::uint64_t total = kFactorial[n];
  const std::uint64_t pieces = std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), total);
  std::vector<RankRange> ranges;
  ranges.reserve(pieces);
  std::uint64_t begin = 0;
  for (std::uint64_t k = 0; k < pieces; ++k) {
    const std::uint64_t size = total / pieces + (k < total % pieces ? 1 : 0);
    ranges.push_back({begin, begin + size});
    begin += size;
  }
  return ranges;
}

std::string_view method_name(Method method) {
  return method == Method::brute ? "brute" : "orbit";
}

namespace {

DistributionResult finish_distribution(int n, Method method, RunPolynomial polynomial,
                                       std::optional<RunPolynomial> quotient, int workers,
                                       std::chrono::steady_clock::time_point started) {
  DistributionResult result;
  result.n = n;
  result.m = GeneratorSet(n).count();
  result.method = method;
  result.workers = workers;
  if (!quotient && n >= 4) {
    auto division = div_binomial_power(polynomial, result.m);
    if (division.exact) quotient = std::move(division.quotient);
  }
  result.quotient = std::move(quotient);
  result.multiplicity_at_minus_one = multiplicity_at_minus_one(polynomial);
  result.polynomial = std::move(polynomial);
  result.elapsed = std::chrono::steady_clock::now() - started;
  return result;
}

}  // namespace

DistributionResult distribution_bruteforce(int n, const EnumerationOptions& options) {
  check_length(n);
  check_practical_cap(n, kBruteForceCap, options.force, "brute-force enumeration");
  const auto started = std::chrono::steady_clock::now();
  const auto ranges = partition_work(n, resolve_workers(options.workers));
  const auto histograms = scan_in_parallel(
      n, ranges, [](int len, RankRange range, RunHistogram& histogram) {
        enumerate_range(len, range, [&](const std::uint8_t* e, int nn) {
          ++histogram[detail::run_count(e, nn)];
        });
      });
  return finish_distribution(n, Method::brute, reduce_histograms(histograms), std::nullopt,
                             static_cast<int>(ranges.size()), started);
}

DistributionResult distribution_via_orbits(int n, const EnumerationOptions& options) {
  check_length(n);
  check_practical_cap(n, kOrbitMethodCap, options.force, "orbit-method enumeration");
  const auto started = std::chrono::steady_clock::now();
  const GeneratorSet gens(n);
  const auto ranges = partition_work(n, resolve_workers(options.workers));
  const auto histograms = scan_in_parallel(
      n, ranges, [&gens](int len, RankRange range, RunHistogram& histogram) {
        enumerate_range(len, range, [&](const std::uint8_t* e, int nn) {
          if (detail::is_minimal(e, nn, gens)) ++histogram[detail::run_count(e, nn)];
        });
      });
  RunPolynomial quotient_sum = reduce_histograms(histograms);
  RunPolynomial polynomial = mul_binomial_power(quotient_sum, gens.count());
  std::optional<RunPolynomial> quotient;
  if (n >= 4) quotient = std::move(quotient_sum);
  return finish_distribution(n, Method::orbit, std::move(polynomial), std::move(quotient),
                             static_cast<int>(ranges.size()), started);
}

void for_each_minimal(int n, const std::function<void(const Permutation&)>& yield,
                      const EnumerationOptions& options) {
  check_length(n);
  check_practical_cap(n, kOrbitMethodCap, options.force, "minimal-representative enumeration");
  const GeneratorSet gens(n);
  enumerate_range(n, {0, kFactorial[n]}, [&](const std::uint8_t* e, int nn) {
    if (detail::is_minimal(e, nn, gens)) {
      yield(Permutation::unchecked({e, static_cast<std::size_t>(nn)}));
    }
  });
}

std::vector<Permutation> minimal_representatives(int n, const EnumerationOptions& options) {
  std::vector<Permutation> out;
  for_each_minimal(n, [&](const Permutation& q) { out.push_back(q); }, options);
  return out;
}

// ---------------------------------------------------------------------------
// Verification suites
// ---------------------------------------------------------------------------

namespace {

constexpr std::array<Property, 9> kAllProperties = {
    Property::run_delta,    Property::commutativity,    Property::non_fixing,
    Property::orbit_size,   Property::independence,     Property::orbit_polynomial,
    Property::evenness,     Property::divisibility,     Property::oracle_equality,
};

constexpr std::array<std::string_view, 9> kPropertyNames = {
    "run-delta",  "commutativity", "non-fixing",   "orbit-size",      "independence",
    "orbit-polynomial", "evenness", "divisibility", "oracle-equality",
};

bool is_distribution_level(Property property) {
  return property == Property::evenness || property == Property::divisibility ||
         property == Property::oracle_equality;
}

std::string perm_string(const std::uint8_t* e, int n) {
  return Permutation::unchecked({e, static_cast<std::size_t>(n)}).to_string();
}

void check_run_delta(int n, VerificationReport& report) {
  enumerate_range(n, {0, kFactorial[n]}, [&](const std::uint8_t* e, int nn) -> bool {
    const int base = detail::run_count(e, nn);
    std::uint8_t buf[kMaxLength];
    for (int i = 3; i <= nn - 1; ++i) {
      std::memcpy(buf, e, static_cast<std::size_t>(nn));
      detail::apply_c(buf, nn, i);
      const int image = detail::run_count(buf, nn);
      ++report.checked;
      if (image != base + 1 && image != base - 1) {
        report.counterexample = {perm_string(e, nn),
                                 "i=" + std::to_string(i) + ": run(p)=" + std::to_string(base) +
                                     ", run(c_i(p))=" + std::to_string(image)};
        return false;
      }
    }
    return true;
  });
}

void check_commutativity(int n, VerificationReport& report) {
  enumerate_range(n, {0, kFactorial[n]}, [&](const std::uint8_t* e, int nn) -> bool {
    std::uint8_t ij[kMaxLength], ji[kMaxLength];
    for (int i = 1; i + 2 <= nn; ++i) {
      for (int j = i + 2; j <= nn; ++j) {
        std::memcpy(ij, e, static_cast<std::size_t>(nn));
        detail::apply_c(ij, nn, j);
        detail::apply_c(ij, nn, i);
        std::memcpy(ji, e, static_cast<std::size_t>(nn));
        detail::apply_c(ji, nn, i);
        detail::apply_c(ji, nn, j);
        ++report.checked;
        if (std::memcmp(ij, ji, static_cast<std::size_t>(nn)) != 0) {
          report.counterexample = {perm_string(e, nn),
                                   "i=" + std::to_string(i) + " j=" + std::to_string(j) +
                                       ": c_i(c_j(p))=" + perm_string(ij, nn) +
                                       " but c_j(c_i(p))=" + perm_string(ji, nn)};
          return false;
        }
      }
    }
    return true;
  });
}

void check_non_fixing(int n, VerificationReport& report) {
  enumerate_range(n, {0, kFactorial[n]}, [&](const std::uint8_t* e, int nn) -> bool {
    std::uint8_t buf[kMaxLength];
    for (int i = 1; i + 2 <= nn; ++i) {
      for (int j = i + 2; j <= nn; ++j) {
        std::memcpy(buf, e, static_cast<std::size_t>(nn));
        detail::apply_c(buf, nn, j);
        detail::apply_c(buf, nn, i);
        ++report.checked;
        if (std::memcmp(buf, e, static_cast<std::size_t>(nn)) == 0) {
          report.counterexample = {perm_string(e, nn),
                                   "i=" + std::to_string(i) + " j=" + std::to_string(j) +
                                       ": c_i(c_j(p)) = p"};
          return false;
        }
      }
    }
    return true;
  });
}

void check_orbit_size(int n, VerificationReport& report) {
  const GeneratorSet gens(n);
  std::uint64_t minimal_count = 0;
  enumerate_range(n, {0, kFactorial[n]}, [&](const std::uint8_t* e, int nn) -> bool {
    minimal_count += detail::is_minimal(e, nn, gens);
    ++report.checked;
    try {
      const Orbit orbit = orbit_of(Permutation::unchecked({e, static_cast<std::size_t>(nn)}));
      if (orbit.size() != (std::size_t{1} << gens.count())) {
        throw InvariantViolation("orbit size " + std::to_string(orbit.size()));
      }
    } catch (const InvariantViolation& violation) {
      report.counterexample = {perm_string(e, nn), violation.what()};
      return false;
    }
    return true;
  });
  if (report.counterexample) return;
  const std::uint64_t expected = kFactorial[n] >> gens.count();
  if (minimal_count != expected) {
    report.counterexample = {"n=" + std::to_string(n),
                             std::to_string(minimal_count) + " minimal permutations, expected " +
                                 std::to_string(kFactorial[n]) + "/2^" +
                                 std::to_string(gens.count()) + " = " + std::to_string(expected)};
  }
}

void check_independence(int n, VerificationReport& report) {
  const GeneratorSet gens(n);
  const int m = gens.count();
  if (m < 2) return;  // no generator pairs to compare
  enumerate_range(n, {0, kFactorial[n]}, [&](const std::uint8_t* e, int nn) -> bool {
    const int base = detail::run_count(e, nn);
    std::uint8_t images[(kMaxLength - 2) / 2][kMaxLength];
    int image_runs[(kMaxLength - 2) / 2];
    for (int a = 0; a < m; ++a) {
      std::memcpy(images[a], e, static_cast<std::size_t>(nn));
      detail::apply_c(images[a], nn, gens.indices()[a]);
      image_runs[a] = detail::run_count(images[a], nn);
    }
    std::uint8_t buf[kMaxLength];
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        if (a == b) continue;
        std::memcpy(buf, images[a], static_cast<std::size_t>(nn));
        detail::apply_c(buf, nn, gens.indices()[b]);
        const int both_runs = detail::run_count(buf, nn);
        ++report.checked;
        // c_i's run-count change, before and after applying c_j
        const int before = image_runs[a] - base;
        const int after = both_runs - image_runs[b];
        if (sign_of(before) != sign_of(after)) {
          report.counterexample = {
              perm_string(e, nn),
              "i=" + std::to_string(gens.indices()[a]) + " j=" + std::to_string(gens.indices()[b]) +
                  ": run(c_i(p))-run(p)=" + std::to_string(before) +
                  " but run(c_j(c_i(p)))-run(c_j(p))=" + std::to_string(after)};
          return false;
        }
      }
    }
    return true;
  });
}

void check_orbit_polynomial(int n, VerificationReport& report) {
  const GeneratorSet gens(n);
  const int m = gens.count();
  enumerate_range(n, {0, kFactorial[n]}, [&](const std::uint8_t* e, int nn) -> bool {
    ++report.checked;
    try {
      const Orbit orbit = orbit_of(Permutation::unchecked({e, static_cast<std::size_t>(nn)}));
      orbit_polynomial(orbit);  // throws unless the sum is z^a(1+z)^m
      const int a = orbit.minimal().runs;
      std::array<std::uint64_t, kMaxLength + 1> layer{};
      for (const auto& member : orbit.members()) ++layer[member.runs - a];
      for (int i = 0; i <= m; ++i) {
        if (layer[i] != binomial(m, i)) {
          throw InvariantViolation("layer a+" + std::to_string(i) + " has " +
                                   std::to_string(layer[i]) + " members, expected C(" +
                                   std::to_string(m) + "," + std::to_string(i) + ")=" +
                                   std::to_string(binomial(m, i)));
        }
      }
    } catch (const InvariantViolation& violation) {
      report.counterexample = {perm_string(e, nn), violation.what()};
      return false;
    }
    return true;
  });
}

void check_evenness(int n, VerificationReport& report, const EnumerationOptions& options) {
  if (n < 2) return;  // R_1 = z; the symmetry argument starts at n = 2
  const RunPolynomial poly = distribution_bruteforce(n, options).polynomial;
  for (const auto& [exponent, coefficient] : poly.coefficients()) {
    ++report.checked;
    if (coefficient % 2 != 0) {
      report.counterexample = {"n=" + std::to_string(n),
                               "coefficient of z^" + std::to_string(exponent) + " is " +
                                   coeff_to_string(coefficient) + ", which is odd"};
      return;
    }
  }
}

void check_divisibility(int n, VerificationReport& report, const EnumerationOptions& options) {
  const int m = GeneratorSet(n).count();
  const RunPolynomial poly = distribution_bruteforce(n, options).polynomial;
  ++report.checked;
  const BinomialDivision division = div_binomial_power(poly, m);
  if (!division.exact) {
    report.counterexample = {"n=" + std::to_string(n),
                             "division by (1+z)^" + std::to_string(m) + " fails at stage " +
                                 std::to_string(division.failed_stage) + " with remainder " +
                                 coeff_to_string(division.remainder)};
    return;
  }
  const int multiplicity = multiplicity_at_minus_one(poly);
  if (multiplicity < m) {
    report.counterexample = {"n=" + std::to_string(n),
                             "multiplicity at -1 is " + std::to_string(multiplicity) +
                                 ", below m=" + std::to_string(m)};
  }
}

void check_oracle_equality(int n, VerificationReport& report, const EnumerationOptions& options) {
  const RunPolynomial brute = distribution_bruteforce(n, options).polynomial;
  const RunPolynomial orbit = distribution_via_orbits(n, options).polynomial;
  ++report.checked;
  if (brute != orbit) {
    report.counterexample = {"n=" + std::to_string(n),
                             "brute-force gives " + brute.to_string() + " but the orbit method gives " +
                                 orbit.to_string()};
  }
}

}  // namespace

Property property_from_name(std::string_view name) {
  for (std::size_t k = 0; k < kPropertyNames.size(); ++k) {
    if (kPropertyNames[k] == name) return kAllProperties[k];
  }
  throw InvalidInput("unknown property \"" + std::string(name) + "\"");
}

std::string_view property_name(Property property) {
  return kPropertyNames[static_cast<std::size_t>(property)];
}

std::span<const Property> all_properties() { return kAllProperties; }

VerificationReport verify_property(Property property, int n_min, int n_max,
                                   const EnumerationOptions& options) {
  if (n_min < 1 || n_max < n_min) {
    throw InvalidInput("invalid range [" + std::to_string(n_min) + ", " + std::to_string(n_max) + "]");
  }
  check_length(n_max);
  const int cap = is_distribution_level(property) ? kDistributionSuiteCap : kExhaustiveSuiteCap;
  check_practical_cap(n_max, cap,
                      options.force, std::string(property_name(property)) + " verification");

  VerificationReport report;
  report.property = property;
  report.n_min = n_min;
  report.n_max = n_max;
  for (int n = n_min; n <= n_max && !report.counterexample; ++n) {
    switch (property) {
      case Property::run_delta: check_run_delta(n, report); break;
      case Property::commutativity: check_commutativity(n, report); break;
      case Property::non_fixing: check_non_fixing(n, report); break;
      case Property::orbit_size: check_orbit_size(n, report); break;
      case Property::independence: check_independence(n, report); break;
      case Property::orbit_polynomial: check_orbit_polynomial(n, report); break;
      case Property::evenness: check_evenness(n, report, options); break;
      case Property::divisibility: check_divisibility(n, report, options); break;
      case Property::oracle_equality: check_oracle_equality(n, report, options); break;
    }
  }
  report.passed = !report.counterexample.has_value();
  return report;
}

}  // namespace runslab
