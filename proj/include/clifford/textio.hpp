#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "clifford/multivector.hpp"

namespace clifford {

struct PrintOptions {
  /// Placed between subscripts, e.g. "," gives e_1,5,7.
  std::string basis_sep;
  std::string prefix = "e_";

  /// Throws std::invalid_argument if basis_sep holds a digit, '+', '-' or
  /// whitespace, or if prefix is empty or ends in a digit.
  void validate() const;

  friend bool operator==(const PrintOptions&, const PrintOptions&) = default;
};

/// Shortest decimal that reads back to exactly `c`; integral values below
/// 1e15 in magnitude print without a fractional part or exponent.
[[nodiscard]] std::string format_coefficient(double c);

/// One-line rendering in canonical term order, e.g. "+ 1 + 2e_1 - 4e_23".
/// Scalar-only values print as "scalar ( c )" and zero as
/// "the zero clifford element (0)".
///
/// With an empty basis_sep a blade holding an index above 9 cannot be
/// written unambiguously as e_ digits, so it prints in bracket form e[1,10].
[[nodiscard]] std::string render(const Multivector& a, const PrintOptions& opts = {});

/// Inverse of render. Accepts signed terms "[+|-] [coeff] blade" where a
/// blade is e_<subscripts> or e[i,j,...]; a bare number is a scalar term.
/// Subscripts are single digits unless separated: by opts.basis_sep when it
/// is set (then an unseparated run is one index), or by ',' otherwise.
/// Also accepts the "scalar ( c )" and zero-element forms.
[[nodiscard]] Multivector parse_multivector(std::string_view text, const PrintOptions& opts = {});

/// `.mv` text: one "<coefficient> ; <i1> <i2> ..." line per term in
/// canonical order.
void write_mv(std::ostream& out, const Multivector& a);
[[nodiscard]] Multivector read_mv(std::istream& in);

[[nodiscard]] std::string to_mv_string(const Multivector& a);
[[nodiscard]] Multivector from_mv_string(std::string_view text);

/// File wrappers; throw std::runtime_error on I/O failure and ParseError
/// (carrying the line number) on malformed content.
void save(const Multivector& a, const std::filesystem::path& path);
[[nodiscard]] Multivector load(const std::filesystem::path& path);

}  // namespace clifford
