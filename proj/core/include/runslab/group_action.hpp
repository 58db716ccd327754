#pragma once

#include <cstdint>
#include <cstring>
#include <span>
#include <vector>

#include "runslab/permutation.hpp"
#include "runslab/polynomial.hpp"

namespace runslab {

/// The generator set C_n = {c_3, c_5, c_7, ...} acting on length-n
/// permutations: ascending odd positions up to n-1 (n even) or n-2 (n odd),
/// m = floor((n-2)/2) generators in both cases, empty for n <= 3.
class GeneratorSet {
public:
  explicit GeneratorSet(int n);

  int length() const noexcept { return n_; }
  int count() const noexcept { return m_; }  // m
  std::span<const int> indices() const noexcept { return {indices_.data(), static_cast<std::size_t>(m_)}; }

private:
  int n_ = 0;
  int m_ = 0;
  std::array<int, (kMaxLength - 2) / 2> indices_{};
};

/// One element of G_m, a subset of C_n: bit j set means the j-th generator
/// (ascending) is applied. Generators are involutions and pairwise commute,
/// so composition is symmetric difference of the subsets.
struct GroupElement {
  std::uint32_t mask = 0;

  bool operator==(const GroupElement&) const noexcept = default;

  friend GroupElement compose(GroupElement a, GroupElement b) noexcept { return {a.mask ^ b.mask}; }
};

struct OrbitMember {
  Permutation perm;
  int runs = 0;
};

/// The 2^m images of a seed permutation under G_m, indexed by group-element
/// mask, together with the distinguished minimal member.
class Orbit {
public:
  Orbit(std::vector<OrbitMember> members, int m, int minimal_mask)
      : members_(std::move(members)), m_(m), minimal_mask_(minimal_mask) {}

  const std::vector<OrbitMember>& members() const noexcept { return members_; }
  const OrbitMember& member(std::uint32_t mask) const { return members_.at(mask); }
  int generator_count() const noexcept { return m_; }
  std::size_t size() const noexcept { return members_.size(); }

  const OrbitMember& minimal() const { return members_.at(static_cast<std::uint32_t>(minimal_mask_)); }
  GroupElement minimal_mask() const noexcept { return {static_cast<std::uint32_t>(minimal_mask_)}; }

private:
  std::vector<OrbitMember> members_;
  int m_ = 0;
  int minimal_mask_ = 0;
};

/// Applies each generator selected by g once, ascending. Commutativity
/// makes the result order-independent; the ascending order is fixed purely
/// for determinism. Throws InvalidInput when the generator set does not
/// match the permutation's length or the mask has bits beyond m.
Permutation apply_element(GroupElement g, const Permutation& p, const GeneratorSet& gens);

/// Materializes the full orbit of p: all 2^m images with their run counts
/// plus the minimal member (m <= 9 under the global length cap, so at most
/// 512 members). Throws InvariantViolation if two images coincide, which
/// would mean the action is not free on generator subsets.
Orbit orbit_of(const Permutation& p);

struct Canonicalization {
  Permutation minimal;
  GroupElement applied;  // the generators the greedy pass used
};

/// Greedy pass over the generators in ascending order, applying c_i exactly
/// when it lowers the run count. The result is the orbit member with the
/// globally smallest run count (cross-checked exhaustively in the tests,
/// not assumed).
Canonicalization canonicalize(const Permutation& p);

inline Permutation minimal_representative(const Permutation& p) { return canonicalize(p).minimal; }

/// True iff every generator raises the run count by exactly one.
bool is_minimal(const Permutation& p, const GeneratorSet& gens);
bool is_minimal(const Permutation& p);

/// Sum of z^run over the orbit. Verifies the sum equals z^a(1+z)^m with a
/// the minimal member's run count and throws InvariantViolation otherwise;
/// downstream factorizations would be meaningless on such an orbit.
RunPolynomial orbit_polynomial(const Orbit& orbit);

namespace detail {

/// is_minimal on a raw one-line array; the enumeration hot loops live here.
inline bool is_minimal(const std::uint8_t* e, int n, const GeneratorSet& gens) noexcept {
  const int base_runs = run_count(e, n);
  std::uint8_t buf[kMaxLength];
  for (const int index : gens.indices()) {
    std::memcpy(buf, e, static_cast<std::size_t>(n));
    apply_c(buf, n, index);
    if (run_count(buf, n) != base_runs + 1) return false;
  }
  return true;
}

}  // namespace detail

}  // namespace runslab
