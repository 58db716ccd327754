#pragma once

#include <map>
#include <string>
#include <string_view>

#include "runslab/errors.hpp"

namespace runslab {

/// Exact integer-coefficient polynomial in z, indexed by exponent.
///
/// Coefficients are 128-bit integers: everything in scope is bounded by
/// n! <= 20! < 2^62, so 128 bits leave ample headroom for intermediates
/// without dragging in arbitrary precision. Canonical form never stores a
/// zero coefficient, so structural equality is mathematical equality.
class RunPolynomial {
public:
  using Coeff = __int128;

  RunPolynomial() = default;

  static RunPolynomial term(int exponent, Coeff coefficient);

  /// Adds count * z^exponent, dropping the term if it cancels to zero.
  /// Throws InvalidInput on a negative exponent.
  void add_term(int exponent, Coeff count);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  Coeff coeff(int exponent) const noexcept;
  const std::map<int, Coeff>& coefficients() const noexcept { return coeffs_; }

  int min_exponent() const;  // throws InvalidInput on the zero polynomial
  int max_exponent() const;  // likewise

  /// Exact Horner evaluation. Meant for small |x| (root checks at -1,
  /// coefficient sums at 1); no overflow guard beyond the 128-bit width.
  Coeff eval_at(Coeff x) const noexcept;

  /// "2z + 12z^2 + 10z^3", ascending exponents; "0" for the zero polynomial.
  std::string to_string() const;

  bool operator==(const RunPolynomial&) const = default;

private:
  std::map<int, Coeff> coeffs_;
};

/// Coefficient-wise sum. Associative and commutative, which is what makes
/// parallel enumeration deterministic regardless of reduction shape.
RunPolynomial merge(const RunPolynomial& a, const RunPolynomial& b);

/// poly * (1+z)^m. Throws InvalidInput for m < 0.
RunPolynomial mul_binomial_power(const RunPolynomial& poly, int m);

/// Outcome of dividing by (1+z)^m via m rounds of synthetic division.
struct BinomialDivision {
  bool exact = false;
  RunPolynomial quotient;        // meaningful only when exact
  int failed_stage = 0;          // 1-based stage with nonzero remainder, 0 if exact
  RunPolynomial::Coeff remainder = 0;  // the remainder at that stage
};

/// Exact division by (1+z), m times. Succeeds only if every stage leaves a
/// zero remainder; otherwise reports the first failing stage and its
/// remainder. Round-trips with mul_binomial_power. Throws InvalidInput for
/// m < 0.
BinomialDivision div_binomial_power(const RunPolynomial& poly, int m);

/// Largest t such that (1+z)^t divides poly, by repeated exact division.
/// Throws InvalidInput on the zero polynomial (multiplicity undefined).
int multiplicity_at_minus_one(const RunPolynomial& poly);

/// Decimal text for a 128-bit coefficient (JSON keeps these lossless as
/// strings).
std::string coeff_to_string(RunPolynomial::Coeff value);

/// Parses decimal text, optional leading '-'. Throws InvalidInput on
/// malformed input or 128-bit overflow.
RunPolynomial::Coeff coeff_from_string(std::string_view text);

/// JSON object mapping exponent strings to decimal coefficient strings,
/// e.g. {"1":"2","2":"12","3":"10"}.
std::string to_json(const RunPolynomial& poly);
RunPolynomial polynomial_from_json(std::string_view json_text);

}  // namespace runslab
