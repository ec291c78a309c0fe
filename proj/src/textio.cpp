#include "clifford/textio.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "clifford/error.hpp"
#include "detail/scan.hpp"

namespace clifford {

using detail::is_digit;
using detail::is_space;

void PrintOptions::validate() const {
  for (char c : basis_sep) {
    if (is_digit(c) || c == '+' || c == '-' || is_space(c)) {
      throw std::invalid_argument("basis separator may not contain digits, signs or whitespace");
    }
  }
  if (prefix.empty() || is_digit(prefix.back())) {
    throw std::invalid_argument("blade prefix must be non-empty and not end in a digit");
  }
}

std::string format_coefficient(double c) {
  if (std::isfinite(c) && c == std::trunc(c) && std::abs(c) < 1e15) {
    return std::to_string(static_cast<long long>(c));
  }
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), c);
  return {buf.data(), ptr};
}

namespace {

std::string render_blade(const Blade& b, const PrintOptions& opts) {
  const auto idx = b.indices();
  std::string out;
  if (opts.basis_sep.empty() && std::any_of(idx.begin(), idx.end(), [](Index i) { return i > 9; })) {
    out = "e[";
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (k > 0) out += ',';
      out += std::to_string(idx[k]);
    }
    return out + ']';
  }
  out = opts.prefix;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k > 0) out += opts.basis_sep;
    out += std::to_string(idx[k]);
  }
  return out;
}

}  // namespace

std::string render(const Multivector& a, const PrintOptions& opts) {
  if (a.is_zero()) return "the zero clifford element (0)";
  if (a.is_scalar()) return "scalar ( " + format_coefficient(a.scalar_part()) + " )";
  std::string out;
  for (const auto& [blade, c] : a.terms()) {
    if (!out.empty()) out += ' ';
    out += std::signbit(c) ? "- " : "+ ";
    out += format_coefficient(std::abs(c));
    if (!blade.is_scalar()) out += render_blade(blade, opts);
  }
  return out;
}

namespace {

class TermParser {
 public:
  TermParser(std::string_view text, const PrintOptions& opts) : text_(text), opts_(opts) {}

  Multivector parse() {
    const auto whole = detail::trim(text_);
    if (whole == "the zero clifford element (0)") return {};
    skip_space();
    if (text_.substr(pos_).starts_with("scalar")) return parse_scalar_form();

    Multivector out;
    bool first = true;
    while (true) {
      skip_space();
      if (pos_ == text_.size()) break;
      double sign = 1.0;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1.0 : 1.0;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("unexpected character", {"'+'", "'-'"});
      }
      parse_term(out, sign);
      first = false;
    }
    if (first) fail("empty multivector", {"a term"});
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected = {}) const {
    throw ParseError(msg, pos_, 0, std::move(expected));
  }

  [[nodiscard]] char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  bool consume(std::string_view s) {
    if (text_.substr(pos_).starts_with(s)) {
      pos_ += s.size();
      return true;
    }
    return false;
  }

  std::optional<double> number() {
    const auto len = detail::number_length(text_, pos_);
    if (len == 0) return std::nullopt;
    auto v = detail::to_double(text_.substr(pos_, len));
    if (!v) fail("bad number");
    pos_ += len;
    return v;
  }

  std::uint32_t index_run(bool whole) {
    const auto start = pos_;
    if (!is_digit(peek())) fail("missing subscript", {"a digit"});
    if (!whole) {
      ++pos_;
    } else {
      while (is_digit(peek())) ++pos_;
    }
    auto v = detail::to_uint(text_.substr(start, pos_ - start));
    if (!v || *v == 0 || *v > kMaxIndex) {
      pos_ = start;
      fail("generator index must be in [1, 65535]");
    }
    return static_cast<std::uint32_t>(*v);
  }

  std::vector<std::uint32_t> subscripts() {
    const std::string sep = opts_.basis_sep.empty() ? std::string(",") : opts_.basis_sep;
    std::vector<std::uint32_t> idx;
    const auto start = pos_;
    while (is_digit(peek())) ++pos_;
    const bool separated = text_.substr(pos_).starts_with(sep) && pos_ + sep.size() < text_.size() &&
                           is_digit(text_[pos_ + sep.size()]);
    pos_ = start;
    if (separated || !opts_.basis_sep.empty()) {
      idx.push_back(index_run(true));
      while (text_.substr(pos_).starts_with(sep) && pos_ + sep.size() < text_.size() &&
             is_digit(text_[pos_ + sep.size()])) {
        pos_ += sep.size();
        idx.push_back(index_run(true));
      }
    } else {
      if (!is_digit(peek())) fail("missing subscript", {"a digit"});
      while (is_digit(peek())) idx.push_back(index_run(false));
    }
    return idx;
  }

  std::vector<std::uint32_t> bracket_list() {
    std::vector<std::uint32_t> idx;
    skip_space();
    if (consume("]")) return idx;
    while (true) {
      skip_space();
      idx.push_back(index_run(true));
      skip_space();
      if (consume("]")) return idx;
      if (!consume(",")) fail("unterminated index list", {"','", "']'"});
    }
  }

  void parse_term(Multivector& out, double sign) {
    auto coeff = number();
    const auto blade_pos = pos_;
    std::vector<std::uint32_t> idx;
    bool has_blade = true;
    if (consume(opts_.prefix) || (opts_.prefix != "e_" && consume("e_"))) {
      idx = subscripts();
    } else if (consume("e[")) {
      idx = bracket_list();
    } else {
      has_blade = false;
    }
    if (!coeff && !has_blade) fail("expected a term", {"number", "blade"});
    SignedBlade sb;
    try {
      sb = canonicalize(idx);
    } catch (const std::invalid_argument& e) {
      pos_ = blade_pos;
      fail(e.what());
    }
    out.accumulate(sb.blade, sign * sb.sign * coeff.value_or(1.0));
  }

  Multivector parse_scalar_form() {
    consume("scalar");
    skip_space();
    if (!consume("(")) fail("malformed scalar", {"'('"});
    skip_space();
    double sign = 1.0;
    if (consume("-")) {
      sign = -1.0;
    } else {
      consume("+");
    }
    auto v = number();
    if (!v) fail("malformed scalar", {"number"});
    skip_space();
    if (!consume(")")) fail("malformed scalar", {"')'"});
    skip_space();
    if (pos_ != text_.size()) fail("trailing input after scalar");
    return Multivector::from_scalar(sign * *v);
  }

  std::string_view text_;
  const PrintOptions& opts_;
  std::size_t pos_ = 0;
};

}  // namespace

Multivector parse_multivector(std::string_view text, const PrintOptions& opts) {
  return TermParser(text, opts).parse();
}

void write_mv(std::ostream& out, const Multivector& a) {
  for (const auto& [blade, c] : a.terms()) {
    out << format_coefficient(c) << " ;";
    for (Index i : blade.indices()) out << ' ' << i;
    out << '\n';
  }
}

Multivector read_mv(std::istream& in) {
  Multivector out;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (detail::trim(line).empty()) continue;
    const auto semi = line.find(';');
    if (semi == std::string_view::npos) throw ParseError("missing ';'", line.size(), line_no);
    const auto coeff_text = detail::trim(line.substr(0, semi));
    auto coeff = detail::to_double(coeff_text);
    if (!coeff) throw ParseError("malformed coefficient", 0, line_no);

    std::vector<std::uint32_t> idx;
    std::size_t k = semi + 1;
    while (k < line.size()) {
      while (k < line.size() && is_space(line[k])) ++k;
      if (k == line.size()) break;
      const auto start = k;
      while (k < line.size() && !is_space(line[k])) ++k;
      auto v = detail::to_uint(line.substr(start, k - start));
      if (!v || *v == 0 || *v > kMaxIndex) throw ParseError("malformed index", start, line_no);
      idx.push_back(static_cast<std::uint32_t>(*v));
    }
    try {
      auto sb = canonicalize(idx);
      out.accumulate(sb.blade, sb.sign * *coeff);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), semi + 1, line_no);
    }
  }
  return out;
}

std::string to_mv_string(const Multivector& a) {
  std::ostringstream os;
  write_mv(os, a);
  return os.str();
}

Multivector from_mv_string(std::string_view text) {
  std::istringstream is{std::string(text)};
  return read_mv(is);
}

void save(const Multivector& a, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_mv(out, a);
  out.flush();
  if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

Multivector load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_mv(in);
}

}  // namespace clifford
