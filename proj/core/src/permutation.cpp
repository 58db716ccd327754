#include "runslab/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace runslab {
namespace {

std::uint8_t checked_entry(long long value, int n, std::uint32_t& seen) {
  if (value < 1 || value > n) {
    throw InvalidInput("value " + std::to_string(value) + " out of range [1, " +
                       std::to_string(n) + "]");
  }
  const std::uint32_t bit = std::uint32_t{1} << value;
  if (seen & bit) throw InvalidInput("duplicate " + std::to_string(value));
  seen |= bit;
  return static_cast<std::uint8_t>(value);
}

}  // namespace

Permutation::Permutation(std::span<const int> one_line) {
  if (one_line.empty()) throw InvalidInput("empty permutation");
  if (one_line.size() > kMaxLength) {
    throw InvalidInput("length " + std::to_string(one_line.size()) + " exceeds maximum " +
                       std::to_string(kMaxLength));
  }
  n_ = static_cast<std::uint8_t>(one_line.size());
  std::uint32_t seen = 0;
  for (int i = 0; i < n_; ++i) e_[i] = checked_entry(one_line[i], n_, seen);
}

Permutation Permutation::identity(int n) {
  if (n < 1 || n > kMaxLength) {
    throw InvalidInput("length " + std::to_string(n) + " outside [1, " +
                       std::to_string(kMaxLength) + "]");
  }
  Permutation p;
  p.n_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) p.e_[i] = static_cast<std::uint8_t>(i + 1);
  return p;
}

Permutation Permutation::unchecked(std::span<const std::uint8_t> one_line) noexcept {
  Permutation p;
  p.n_ = static_cast<std::uint8_t>(one_line.size());
  std::copy(one_line.begin(), one_line.end(), p.e_.begin());
  return p;
}

int Permutation::at(int pos) const {
  if (pos < 1 || pos > n_) {
    throw InvalidInput("position " + std::to_string(pos) + " outside [1, " +
                       std::to_string(n_) + "]");
  }
  return e_[pos - 1];
}

std::string Permutation::to_string() const {
  std::string out;
  for (int i = 0; i < n_; ++i) {
    if (i) out += ' ';
    out += std::to_string(e_[i]);
  }
  return out;
}

Permutation complement(const Permutation& p) {
  const int n = p.size();
  std::array<std::uint8_t, kMaxLength> buf{};
  for (int i = 0; i < n; ++i) buf[i] = static_cast<std::uint8_t>(n + 1 - p.data()[i]);
  return Permutation::unchecked({buf.data(), static_cast<std::size_t>(n)});
}

Permutation apply_c(int i, const Permutation& p) {
  const int n = p.size();
  if (i < 1 || i > n) {
    throw InvalidInput("index " + std::to_string(i) + " outside [1, " + std::to_string(n) + "]");
  }
  std::array<std::uint8_t, kMaxLength> buf{};
  std::copy_n(p.data(), n, buf.begin());
  detail::apply_c(buf.data(), n, i);
  return Permutation::unchecked({buf.data(), static_cast<std::size_t>(n)});
}

std::vector<int> relative_complement(std::span<const int> s) {
  if (s.empty()) throw InvalidInput("empty sequence");
  std::vector<int> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 1; k < sorted.size(); ++k) {
    if (sorted[k] == sorted[k - 1]) throw InvalidInput("duplicate " + std::to_string(sorted[k]));
  }
  std::vector<int> out(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    const auto rank = std::lower_bound(sorted.begin(), sorted.end(), s[k]) - sorted.begin();
    out[k] = sorted[sorted.size() - 1 - rank];
  }
  return out;
}

std::vector<int> vertical_complement(std::span<const int> t, std::span<const int> u) {
  std::vector<int> su(u.begin(), u.end());
  std::sort(su.begin(), su.end());
  for (std::size_t k = 1; k < su.size(); ++k) {
    if (su[k] == su[k - 1]) throw InvalidInput("duplicate " + std::to_string(su[k]) + " in U");
  }
  std::vector<int> st(t.begin(), t.end());
  std::sort(st.begin(), st.end());
  for (std::size_t k = 1; k < st.size(); ++k) {
    if (st[k] == st[k - 1]) throw InvalidInput("duplicate " + std::to_string(st[k]) + " in T");
  }
  std::vector<int> out;
  out.reserve(st.size());
  for (int value : st) {
    const auto it = std::lower_bound(su.begin(), su.end(), value);
    if (it == su.end() || *it != value) {
      throw InvalidInput("element " + std::to_string(value) + " of T is not in U");
    }
    // value is the (rank+1)-th smallest of U; emit the (rank+1)-th largest
    out.push_back(su[su.size() - 1 - (it - su.begin())]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Permutation parse_permutation(std::string_view text) {
  const auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
  const bool delimited = std::any_of(text.begin(), text.end(), is_sep);

  std::vector<int> values;
  if (delimited) {
    std::size_t pos = 0;
    while (pos < text.size()) {
      while (pos < text.size() && is_sep(text[pos])) ++pos;
      if (pos == text.size()) break;
      std::size_t end = pos;
      while (end < text.size() && !is_sep(text[end])) ++end;
      const std::string_view token = text.substr(pos, end - pos);
      int value = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw InvalidInput("not an integer: \"" + std::string(token) + "\"");
      }
      values.push_back(value);
      pos = end;
    }
  } else {
    if (text.empty()) throw InvalidInput("empty permutation");
    if (text.size() > 9) {
      throw InvalidInput("digit-string form is limited to length 9; separate values with spaces");
    }
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw InvalidInput(std::string("not an integer: \"") + c + "\"");
      }
      values.push_back(c - '0');
    }
  }
  if (values.empty()) throw InvalidInput("empty permutation");
  return Permutation(values);
}

}  // namespace runslab
