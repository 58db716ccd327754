#include "runslab/group_action.hpp"

#include <algorithm>

namespace runslab {

GeneratorSet::GeneratorSet(int n) {
  if (n < 1 || n > kMaxLength) {
    throw InvalidInput("length " + std::to_string(n) + " outside [1, " +
                       std::to_string(kMaxLength) + "]");
  }
  n_ = n;
  const int last = (n % 2 == 0) ? n - 1 : n - 2;
  for (int i = 3; i <= last; i += 2) indices_[m_++] = i;
}

Permutation apply_element(GroupElement g, const Permutation& p, const GeneratorSet& gens) {
  if (gens.length() != p.size()) {
    throw InvalidInput("generator set is for length " + std::to_string(gens.length()) +
                       ", permutation has length " + std::to_string(p.size()));
  }
  if (g.mask >> gens.count()) {
    throw InvalidInput("mask " + std::to_string(g.mask) + " has bits beyond m=" +
                       std::to_string(gens.count()));
  }
  std::array<std::uint8_t, kMaxLength> buf{};
  const int n = p.size();
  std::copy_n(p.data(), n, buf.begin());
  for (int j = 0; j < gens.count(); ++j) {
    if (g.mask & (std::uint32_t{1} << j)) detail::apply_c(buf.data(), n, gens.indices()[j]);
  }
  return Permutation::unchecked({buf.data(), static_cast<std::size_t>(n)});
}

Orbit orbit_of(const Permutation& p) {
  const GeneratorSet gens(p.size());
  const int m = gens.count();
  const std::uint32_t order = std::uint32_t{1} << m;

  std::vector<OrbitMember> members;
  members.reserve(order);
  int minimal_mask = 0;
  for (std::uint32_t mask = 0; mask < order; ++mask) {
    Permutation image = apply_element({mask}, p, gens);
    const int runs = run_count(image);
    if (members.empty() || runs < members[static_cast<std::uint32_t>(minimal_mask)].runs) {
      minimal_mask = static_cast<int>(mask);
    }
    members.push_back({std::move(image), runs});
  }

  // the action must be free on generator subsets: 2^m pairwise distinct images
  std::vector<Permutation> sorted;
  sorted.reserve(order);
  for (const auto& member : members) sorted.push_back(member.perm);
  std::sort(sorted.begin(), sorted.end());
  const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw InvariantViolation("orbit of " + p.to_string() + " has duplicate member " +
                             dup->to_string() + "; the group action is not free here");
  }
  return Orbit(std::move(members), m, minimal_mask);
}

Canonicalization canonicalize(const Permutation& p) {
  const GeneratorSet gens(p.size());
  Permutation current = p;
  int runs = run_count(current);
  std::uint32_t applied = 0;
  for (int j = 0; j < gens.count(); ++j) {
    Permutation image = apply_c(gens.indices()[j], current);
    const int image_runs = run_count(image);
    if (image_runs < runs) {
      current = std::move(image);
      runs = image_runs;
      applied |= std::uint32_t{1} << j;
    }
  }
  return {std::move(current), {applied}};
}

bool is_minimal(const Permutation& p, const GeneratorSet& gens) {
  if (gens.length() != p.size()) {
    throw InvalidInput("generator set is for length " + std::to_string(gens.length()) +
                       ", permutation has length " + std::to_string(p.size()));
  }
  return detail::is_minimal(p.data(), p.size(), gens);
}

bool is_minimal(const Permutation& p) { return is_minimal(p, GeneratorSet(p.size())); }

RunPolynomial orbit_polynomial(const Orbit& orbit) {
  RunPolynomial sum;
  for (const auto& member : orbit.members()) sum.add_term(member.runs, 1);

  const RunPolynomial expected =
      mul_binomial_power(RunPolynomial::term(orbit.minimal().runs, 1), orbit.generator_count());
  if (sum != expected) {
    throw InvariantViolation("orbit polynomial " + sum.to_string() + " of " +
                             orbit.member(0).perm.to_string() + " is not " + expected.to_string());
  }
  return sum;
}

}  // namespace runslab
