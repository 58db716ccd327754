// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Each criterion checks exact equalities (everything here is integer
// arithmetic) and must finish inside its stated wall-clock budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "runslab/enumeration.hpp"
#include "runslab/group_action.hpp"
#include "runslab/permutation.hpp"
#include "runslab/polynomial.hpp"

namespace {

using namespace runslab;

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<std::string()> run;  // empty string = pass, otherwise the failure detail
};

Permutation perm(std::initializer_list<int> values) {
  return Permutation(std::vector<int>(values));
}

std::string check_report(const VerificationReport& report) {
  if (report.passed) return "";
  return std::string(property_name(report.property)) + " found a counterexample: " +
         report.counterexample->permutation + " (" + report.counterexample->detail + ")";
}

RunPolynomial poly(std::initializer_list<std::pair<int, long long>> terms) {
  RunPolynomial p;
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

std::string worked_examples() {
  if (complement(perm({4, 2, 5, 6, 1, 3})) != perm({3, 5, 2, 1, 6, 4})) {
    return "complement of 425613 is not 352164";
  }
  if (relative_complement(std::vector<int>{2, 4, 7, 8, 3}) != std::vector<int>{8, 4, 3, 2, 7}) {
    return "relative complement of 24783 is not 84327";
  }
  if (vertical_complement(std::vector<int>{1, 4, 6}, std::vector<int>{1, 2, 3, 4, 6, 8, 9}) !=
      std::vector<int>{3, 4, 9}) {
    return "vertical complement of {1,4,6} in {1,2,3,4,6,8,9} is not {3,4,9}";
  }
  const Permutation p = perm({3, 1, 5, 4, 6, 2});
  if (apply_c(3, p) != perm({3, 1, 4, 5, 2, 6})) return "c_3(315462) is not 314526";
  if (apply_c(5, p) != perm({3, 1, 5, 4, 2, 6})) return "c_5(315462) is not 315426";
  const Permutation both = apply_c(3, apply_c(5, p));
  if (both != apply_c(5, apply_c(3, p))) return "c_3 and c_5 do not commute on 315462";
  if (both != perm({3, 1, 4, 5, 6, 2})) return "c_3(c_5(315462)) is not 314562";
  return "";
}

std::string small_fixtures() {
  const DistributionResult r2 = distribution_bruteforce(2);
  const DistributionResult r3 = distribution_bruteforce(3);
  const DistributionResult r4 = distribution_bruteforce(4);
  if (r2.polynomial != poly({{1, 2}})) return "R_2 != 2z";
  if (r3.polynomial != poly({{1, 2}, {2, 4}})) return "R_3 != 2z + 4z^2";
  if (r4.polynomial != poly({{1, 2}, {2, 12}, {3, 10}})) return "R_4 != 2z + 12z^2 + 10z^3";
  if (!r4.quotient || *r4.quotient != poly({{1, 2}, {2, 10}})) {
    return "R_4 quotient != 2z + 10z^2";
  }
  for (int n = 2; n <= 10; ++n) {
    const RunPolynomial rn = distribution_bruteforce(n).polynomial;
    if (rn.eval_at(1) != static_cast<RunPolynomial::Coeff>(factorial(n))) {
      return "coefficient sum of R_" + std::to_string(n) + " != " + std::to_string(n) + "!";
    }
    for (const auto& [exponent, coefficient] : rn.coefficients()) {
      if (coefficient % 2 != 0) {
        return "odd coefficient in R_" + std::to_string(n) + " at z^" + std::to_string(exponent);
      }
    }
  }
  return "";
}

std::string oracle_equality_to_10() {
  const EnumerationOptions options{4, false};
  for (int n = 1; n <= 10; ++n) {
    const VerificationReport report = verify_property(Property::oracle_equality, n, n, options);
    if (!report.passed) return check_report(report);
  }
  return "";
}

std::string divisibility_to_11() {
  const EnumerationOptions options{4, false};
  for (int n = 4; n <= 11; ++n) {
    const VerificationReport report = verify_property(Property::divisibility, n, n, options);
    if (!report.passed) return check_report(report);
    const DistributionResult result = distribution_bruteforce(n, options);
    if (result.multiplicity_at_minus_one < result.m) {
      return "multiplicity at -1 below m for n=" + std::to_string(n);
    }
  }
  return "";
}

std::string determinism_n9() {
  const RunPolynomial one = distribution_bruteforce(9, {1, false}).polynomial;
  const RunPolynomial two = distribution_bruteforce(9, {2, false}).polynomial;
  const RunPolynomial seven = distribution_bruteforce(9, {7, false}).polynomial;
  if (one != two || one != seven) return "worker counts {1,2,7} disagree on R_9";
  const RunPolynomial orbit_one = distribution_via_orbits(9, {1, false}).polynomial;
  const RunPolynomial orbit_seven = distribution_via_orbits(9, {7, false}).polynomial;
  if (orbit_one != orbit_seven) return "orbit-method worker counts disagree on R_9";
  if (one != orbit_one) return "methods disagree on R_9";
  return "";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"worked-example fidelity (complements, c_3/c_5, composite)", 1.0, worked_examples},
      {"run-count change is exactly one, exhaustive n=4..8", 60.0,
       [] { return check_report(verify_property(Property::run_delta, 4, 8)); }},
      {"commutativity and non-fixing, exhaustive n<=7", 60.0,
       [] {
         const std::string commute = check_report(verify_property(Property::commutativity, 1, 7));
         if (!commute.empty()) return commute;
         return check_report(verify_property(Property::non_fixing, 1, 7));
       }},
      {"orbit structure: size 2^m, binomial layering, z^a(1+z)^m, n<=8", 120.0,
       [] {
         const std::string size = check_report(verify_property(Property::orbit_size, 1, 8));
         if (!size.empty()) return size;
         return check_report(verify_property(Property::orbit_polynomial, 1, 8));
       }},
      {"oracle equality of brute force and orbit method, n=1..10", 120.0, oracle_equality_to_10},
      {"divisibility of R_n by (1+z)^m with multiplicity >= m, n=4..11", 300.0, divisibility_to_11},
      {"frozen small-n fixtures, coefficient sums, evenness", 1.0, small_fixtures},
      {"determinism of R_9 across worker counts {1,2,7}", 60.0, determinism_n9},
      {"independence of generator run-count signs, exhaustive n<=7", 60.0,
       [] { return check_report(verify_property(Property::independence, 1, 7)); }},
  };

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto started = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = criteria[k].run();
    } catch (const std::exception& error) {
      detail = std::string("exception: ") + error.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    if (detail.empty() && seconds > criteria[k].budget_seconds) {
      detail = "exceeded the " + std::to_string(criteria[k].budget_seconds) + " s budget";
    }
    const bool passed = detail.empty();
    failures += !passed;
    std::printf("[%s] criterion %zu: %s (%.2f s)\n", passed ? "PASS" : "FAIL", k + 1,
                criteria[k].name.c_str(), seconds);
    if (!passed) std::printf("       %s\n", detail.c_str());
  }
  std::printf("%zu/%zu acceptance criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
