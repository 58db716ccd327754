#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "runslab/group_action.hpp"
#include "runslab/permutation.hpp"
#include "runslab/polynomial.hpp"

namespace runslab {

/// Practical per-operation caps. The hard cap is kMaxLength; these defaults
/// refuse silently-infeasible work and can be bypassed with
/// EnumerationOptions::force (the hard cap cannot).
inline constexpr int kBruteForceCap = 13;
inline constexpr int kOrbitMethodCap = 13;
inline constexpr int kExhaustiveSuiteCap = 8;    // properties visiting every permutation
inline constexpr int kDistributionSuiteCap = 11;  // properties needing full R_n

/// n! for 0 <= n <= kMaxLength (20! still fits in 64 bits).
std::uint64_t factorial(int n);

/// Lexicographic unranking: the rank-th permutation of 1..n, rank in [0, n!).
Permutation nth_permutation(int n, std::uint64_t rank);

/// Lexicographic rank of p, the inverse of nth_permutation.
std::uint64_t rank_of(const Permutation& p);

/// Half-open interval of lexicographic ranks.
struct RankRange {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;

  std::uint64_t size() const noexcept { return end - begin; }
  bool operator==(const RankRange&) const noexcept = default;
};

/// Splits [0, n!) into min(workers, n!) contiguous, nonempty ranges whose
/// sizes differ by at most one. Deterministic for fixed (n, workers); when
/// workers divides evenly into leading-entry blocks of size (n-1)!, the
/// boundaries land on those blocks. Throws InvalidInput for workers < 1.
std::vector<RankRange> partition_work(int n, int workers);

struct EnumerationOptions {
  int workers = 0;    // 0 = hardware concurrency
  bool force = false; // bypass the practical caps (never the hard cap)
};

enum class Method { brute, orbit };
std::string_view method_name(Method method);

/// R_n(z) together with everything the factorization story needs.
struct DistributionResult {
  int n = 0;
  int m = 0;  // floor((n-2)/2), clamped at 0
  RunPolynomial polynomial;
  Method method = Method::brute;
  std::optional<RunPolynomial> quotient;  // present when n >= 4 and (1+z)^m divides exactly
  int multiplicity_at_minus_one = 0;
  std::chrono::duration<double> elapsed{};
  int workers = 1;  // ranges actually used
};

/// Accumulates z^run(p) over all n! permutations, in parallel over
/// partition_work ranges. The result is identical for every worker count:
/// workers own private accumulators that are merged in range order, and
/// merge is associative and commutative.
DistributionResult distribution_bruteforce(int n, const EnumerationOptions& options = {});

/// Computes the quotient sum z^run(q) over orbit-minimal permutations q,
/// then multiplies by (1+z)^m. Same polynomial as brute force; the saving
/// is the 2^m-fold cheaper accumulation, not an asymptotic one.
DistributionResult distribution_via_orbits(int n, const EnumerationOptions& options = {});

/// Streams the orbit-minimal permutations of length n in lexicographic
/// order by filtering the full stream with is_minimal; exactly n!/2^m of
/// them. No direct construction of the minima is known, so filtering keeps
/// the method obviously correct.
void for_each_minimal(int n, const std::function<void(const Permutation&)>& yield,
                      const EnumerationOptions& options = {});

/// Materialized convenience for small n.
std::vector<Permutation> minimal_representatives(int n, const EnumerationOptions& options = {});

/// The exhaustively checkable statements, one tag per suite.
enum class Property {
  run_delta,         // |run(c_i(p)) - run(p)| = 1 for 3 <= i <= n-1
  commutativity,     // c_i(c_j(p)) = c_j(c_i(p)) for i <= j-2
  non_fixing,        // c_i(c_j(p)) != p for i <= j-2
  orbit_size,        // 2^m distinct members per orbit, n!/2^m minimal permutations
  independence,      // c_j preserves the sign of c_i's run-count change
  orbit_polynomial,  // every orbit sums to z^a(1+z)^m with binomial layering
  evenness,          // all coefficients of R_n even for n >= 2
  divisibility,      // (1+z)^m divides R_n exactly, multiplicity >= m
  oracle_equality,   // brute-force and orbit methods agree
};

Property property_from_name(std::string_view name);  // throws InvalidInput on unknown tags
std::string_view property_name(Property property);
std::span<const Property> all_properties();

struct Counterexample {
  std::string permutation;  // witness, or the owning n for distribution-level properties
  std::string detail;
};

struct VerificationReport {
  Property property = Property::run_delta;
  int n_min = 0;
  int n_max = 0;
  bool passed = false;
  std::uint64_t checked = 0;  // instances examined (pairs, orbits, coefficients, ...)
  std::optional<Counterexample> counterexample;
};

/// Exhaustively checks one property over every instance with
/// n_min <= n <= n_max, capturing the first counterexample. Per-permutation
/// properties cap at kExhaustiveSuiteCap, distribution-level ones at
/// kDistributionSuiteCap, unless options.force is set.
VerificationReport verify_property(Property property, int n_min, int n_max,
                                   const EnumerationOptions& options = {});

}  // namespace runslab
