#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "runslab/errors.hpp"

namespace runslab {

/// Global length cap. Entry values fit in 8 bits and a whole permutation in
/// a few machine words, so permutations are compact, trivially copyable
/// value types.
inline constexpr int kMaxLength = 20;

/// A permutation of {1, ..., n} in one-line notation.
///
/// Positions are 1-based in every public operation that takes one; raw
/// storage (entries(), data()) is the usual 0-based array.
class Permutation {
public:
  /// Validates and adopts a one-line sequence. Throws InvalidInput naming
  /// the offending value on duplicates or out-of-range entries, or if the
  /// length is outside [1, kMaxLength].
  explicit Permutation(std::span<const int> one_line);

  /// Identity permutation 1 2 ... n.
  static Permutation identity(int n);

  /// Adopts a raw one-line array without validation. The caller guarantees
  /// the array is a permutation of 1..n; enumeration kernels use this to
  /// avoid re-validating streams they generate themselves.
  static Permutation unchecked(std::span<const std::uint8_t> one_line) noexcept;

  int size() const noexcept { return n_; }

  /// Value at 1-based position pos. Throws InvalidInput if pos is outside
  /// [1, n].
  int at(int pos) const;

  std::span<const std::uint8_t> entries() const noexcept { return {e_.data(), static_cast<std::size_t>(n_)}; }
  const std::uint8_t* data() const noexcept { return e_.data(); }

  /// Canonical textual form: space-separated values, "3 1 5 4 6 2".
  std::string to_string() const;

  bool operator==(const Permutation&) const noexcept = default;
  auto operator<=>(const Permutation&) const noexcept = default;

private:
  Permutation() = default;

  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxLength> e_{};  // tail beyond n_ stays zero so
                                              // defaulted comparisons work
};

namespace detail {

/// Alternating-run count of a raw one-line array: one more than the number
/// of interior positions where the sequence changes direction.
inline int run_count(const std::uint8_t* e, int n) noexcept {
  int changes = 0;
  for (int i = 1; i + 1 < n; ++i) {
    changes += (e[i - 1] < e[i]) != (e[i] < e[i + 1]);
  }
  return changes + 1;
}

/// In-place relative complement of the suffix e[i0..n-1] (0-based i0): the
/// j-th smallest value of the suffix's underlying set becomes the j-th
/// largest, positionwise. Values are 1..n with n <= kMaxLength, so the
/// underlying set fits in one 32-bit presence mask.
inline void suffix_relative_complement(std::uint8_t* e, int n, int i0) noexcept {
  std::uint32_t present = 0;
  for (int j = i0; j < n; ++j) present |= std::uint32_t{1} << e[j];
  std::uint8_t ascending[kMaxLength];
  int len = 0;
  for (int v = 1; v <= n; ++v) {
    if (present & (std::uint32_t{1} << v)) ascending[len++] = static_cast<std::uint8_t>(v);
  }
  std::uint8_t replacement[kMaxLength + 1];
  for (int k = 0; k < len; ++k) replacement[ascending[k]] = ascending[len - 1 - k];
  for (int j = i0; j < n; ++j) e[j] = replacement[e[j]];
}

/// c_i on a raw buffer, 1-based i in [1, n].
inline void apply_c(std::uint8_t* e, int n, int i) noexcept {
  suffix_relative_complement(e, n, i - 1);
}

}  // namespace detail

/// Number of alternating runs of p. A monotone permutation has 1; for
/// n >= 2 the count lies in [1, n-1]. A single entry counts as one run.
inline int run_count(const Permutation& p) noexcept {
  return detail::run_count(p.data(), p.size());
}

/// The complement of p: entry p_i becomes n+1-p_i. An involution that
/// flips the diagram vertically and preserves the run count.
Permutation complement(const Permutation& p);

/// c_i: leaves positions 1..i-1 untouched and replaces the suffix starting
/// at position i by its complement relative to its underlying set. An
/// involution for every i; c_1 is the full complement and c_n the identity.
/// Throws InvalidInput if i is outside [1, n].
Permutation apply_c(int i, const Permutation& p);

/// Relative complement of a sequence of distinct integers (not necessarily
/// 1..n): the j-th smallest value of the underlying set is replaced by the
/// j-th largest, positionwise. Throws InvalidInput on duplicates or an
/// empty sequence.
std::vector<int> relative_complement(std::span<const int> s);

/// Vertical complement of T with respect to U: if T consists of the a_i-th
/// smallest elements of U, the result consists of the a_i-th largest.
/// Inputs are treated as sets; the result is sorted ascending. Throws
/// InvalidInput if either input has duplicates or T is not a subset of U.
std::vector<int> vertical_complement(std::span<const int> t, std::span<const int> u);

/// Parses the canonical textual form: whitespace- or comma-separated
/// values ("3 1 5 4 6 2"), or a contiguous digit string ("315462", only
/// for n <= 9 so multi-digit values stay unambiguous). Throws InvalidInput
/// naming the offending value.
Permutation parse_permutation(std::string_view text);

}  // namespace runslab
