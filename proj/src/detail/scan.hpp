#pragma once

#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace clifford::detail {

inline bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
inline bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

/// Length of the decimal literal starting at text[pos]: digits with an
/// optional fraction and an optional exponent. An 'e' is only taken as an
/// exponent when digits follow it, so "2e_1" scans as "2". Returns 0 when
/// no literal starts there.
inline std::size_t number_length(std::string_view text, std::size_t pos) {
  std::size_t k = pos;
  std::size_t digits = 0;
  while (k < text.size() && is_digit(text[k])) ++k, ++digits;
  if (k < text.size() && text[k] == '.') {
    std::size_t f = k + 1;
    while (f < text.size() && is_digit(text[f])) ++f, ++digits;
    if (digits > 0) k = f;
  }
  if (digits == 0) return 0;
  if (k < text.size() && (text[k] == 'e' || text[k] == 'E')) {
    std::size_t x = k + 1;
    if (x < text.size() && (text[x] == '+' || text[x] == '-')) ++x;
    if (x < text.size() && is_digit(text[x])) {
      while (x < text.size() && is_digit(text[x])) ++x;
      k = x;
    }
  }
  return k - pos;
}

inline std::optional<double> to_double(std::string_view s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

inline std::optional<std::uint64_t> to_uint(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace clifford::detail
