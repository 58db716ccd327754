#include "runslab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include <json.hpp>

namespace runslab {
namespace {

using Coeff = RunPolynomial::Coeff;

// One round of synthetic division by (z + 1): poly = quotient * (1+z) + r
// with r constant. Works on a dense coefficient image of the sparse map.
std::pair<RunPolynomial, Coeff> divide_once(const RunPolynomial& poly) {
  if (poly.is_zero()) return {RunPolynomial{}, 0};
  const int degree = poly.max_exponent();
  std::vector<Coeff> dense(static_cast<std::size_t>(degree) + 1, 0);
  for (const auto& [e, c] : poly.coefficients()) dense[static_cast<std::size_t>(e)] = c;

  RunPolynomial quotient;
  Coeff carry = 0;  // q_k while walking k = degree-1 .. 0
  for (int k = degree - 1; k >= 0; --k) {
    carry = dense[static_cast<std::size_t>(k) + 1] - carry;
    quotient.add_term(k, carry);
  }
  const Coeff remainder = dense[0] - carry;
  return {std::move(quotient), remainder};
}

}  // namespace

RunPolynomial RunPolynomial::term(int exponent, Coeff coefficient) {
  RunPolynomial p;
  p.add_term(exponent, coefficient);
  return p;
}

void RunPolynomial::add_term(int exponent, Coeff count) {
  if (exponent < 0) throw InvalidInput("negative exponent " + std::to_string(exponent));
  if (count == 0) return;
  const auto [it, inserted] = coeffs_.emplace(exponent, count);
  if (!inserted) {
    it->second += count;
    if (it->second == 0) coeffs_.erase(it);
  }
}

Coeff RunPolynomial::coeff(int exponent) const noexcept {
  const auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? Coeff{0} : it->second;
}

int RunPolynomial::min_exponent() const {
  if (coeffs_.empty()) throw InvalidInput("zero polynomial has no exponents");
  return coeffs_.begin()->first;
}

int RunPolynomial::max_exponent() const {
  if (coeffs_.empty()) throw InvalidInput("zero polynomial has no exponents");
  return coeffs_.rbegin()->first;
}

Coeff RunPolynomial::eval_at(Coeff x) const noexcept {
  Coeff acc = 0;
  int prev_exponent = 0;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (first) {
      acc = it->second;
      first = false;
    } else {
      for (int k = it->first; k < prev_exponent; ++k) acc *= x;
      acc += it->second;
    }
    prev_exponent = it->first;
  }
  if (!first) {
    for (int k = 0; k < prev_exponent; ++k) acc *= x;
  }
  return acc;
}

std::string RunPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    const bool negative = c < 0;
    const Coeff magnitude = negative ? -c : c;
    if (first) {
      if (negative) out += '-';
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1 || e == 0) out += coeff_to_string(magnitude);
    if (e >= 1) out += 'z';
    if (e >= 2) out += '^' + std::to_string(e);
  }
  return out;
}

RunPolynomial merge(const RunPolynomial& a, const RunPolynomial& b) {
  RunPolynomial out = a;
  for (const auto& [e, c] : b.coefficients()) out.add_term(e, c);
  return out;
}

RunPolynomial mul_binomial_power(const RunPolynomial& poly, int m) {
  if (m < 0) throw InvalidInput("negative binomial power " + std::to_string(m));
  RunPolynomial out = poly;
  for (int round = 0; round < m; ++round) {
    RunPolynomial next;
    for (const auto& [e, c] : out.coefficients()) {
      next.add_term(e, c);
      next.add_term(e + 1, c);
    }
    out = std::move(next);
  }
  return out;
}

BinomialDivision div_binomial_power(const RunPolynomial& poly, int m) {
  if (m < 0) throw InvalidInput("negative binomial power " + std::to_string(m));
  BinomialDivision result;
  RunPolynomial current = poly;
  for (int stage = 1; stage <= m; ++stage) {
    auto [quotient, remainder] = divide_once(current);
    if (remainder != 0) {
      result.exact = false;
      result.failed_stage = stage;
      result.remainder = remainder;
      return result;
    }
    current = std::move(quotient);
  }
  result.exact = true;
  result.quotient = std::move(current);
  return result;
}

int multiplicity_at_minus_one(const RunPolynomial& poly) {
  if (poly.is_zero()) throw InvalidInput("multiplicity undefined for the zero polynomial");
  int multiplicity = 0;
  RunPolynomial current = poly;
  while (true) {
    auto [quotient, remainder] = divide_once(current);
    if (remainder != 0) return multiplicity;
    ++multiplicity;
    current = std::move(quotient);
  }
}

std::string coeff_to_string(Coeff value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  unsigned __int128 magnitude =
      negative ? -static_cast<unsigned __int128>(value) : static_cast<unsigned __int128>(value);
  std::string digits;
  while (magnitude != 0) {
    digits += static_cast<char>('0' + static_cast<int>(magnitude % 10));
    magnitude /= 10;
  }
  if (negative) digits += '-';
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Coeff coeff_from_string(std::string_view text) {
  if (text.empty()) throw InvalidInput("empty coefficient");
  bool negative = false;
  std::size_t pos = 0;
  if (text[0] == '-') {
    negative = true;
    pos = 1;
    if (text.size() == 1) throw InvalidInput("malformed coefficient \"-\"");
  }
  unsigned __int128 magnitude = 0;
  constexpr unsigned __int128 kPositiveMax = ~static_cast<unsigned __int128>(0) >> 1;  // 2^127 - 1
  const unsigned __int128 max_magnitude = negative ? kPositiveMax + 1 : kPositiveMax;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw InvalidInput("malformed coefficient \"" + std::string(text) + "\"");
    }
    const unsigned digit = static_cast<unsigned>(c - '0');
    if (magnitude > (max_magnitude - digit) / 10) {
      throw InvalidInput("coefficient overflows 128 bits: \"" + std::string(text) + "\"");
    }
    magnitude = magnitude * 10 + digit;
  }
  // unsigned negation then conversion stays defined even for -2^127
  return static_cast<Coeff>(negative ? -magnitude : magnitude);
}

std::string to_json(const RunPolynomial& poly) {
  nlohmann::json object = nlohmann::json::object();
  for (const auto& [e, c] : poly.coefficients()) {
    object[std::to_string(e)] = coeff_to_string(c);
  }
  return object.dump();
}

RunPolynomial polynomial_from_json(std::string_view json_text) {
  nlohmann::json object;
  try {
    object = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& err) {
    throw InvalidInput(std::string("polynomial JSON parse error: ") + err.what());
  }
  if (!object.is_object()) throw InvalidInput("polynomial JSON must be an object");
  RunPolynomial poly;
  for (const auto& [key, value] : object.items()) {
    int exponent = 0;
    try {
      std::size_t consumed = 0;
      exponent = std::stoi(key, &consumed);
      if (consumed != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw InvalidInput("malformed exponent \"" + key + "\"");
    }
    if (!value.is_string()) throw InvalidInput("coefficient for exponent " + key + " must be a string");
    poly.add_term(exponent, coeff_from_string(value.get<std::string>()));
  }
  return poly;
}

}  // namespace runslab
