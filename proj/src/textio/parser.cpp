#include <cctype>
#include <charconv>
#include <string>

#include "tcone/error.hpp"
#include "tcone/textio.hpp"

namespace tcone {

namespace {

constexpr unsigned kMaxExponent = 65535;

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

// Recursive-descent parser for one expression. Columns are reported relative
// to the full line, so `column_base` is the offset of `text` in that line.
class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const ContextPtr& ctx, std::size_t line, std::size_t column_base)
      : text_(text), ctx_(ctx), line_(line), column_base_(column_base) {}

  Polynomial parse() {
    Polynomial result = expression();
    skip_space();
    if (!at_end()) {
      if (is_letter(peek()) || is_digit(peek()) || peek() == '(') {
        fail("implicit multiplication is not allowed; use '*'");
      }
      fail(std::string("unexpected character '") + peek() + "'");
    }
    return result;
  }

 private:
  Polynomial expression() {
    skip_space();
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (true) {
      skip_space();
      const char op = peek();
      if (op != '+' && op != '-') break;
      ++pos_;
      Polynomial rhs = term();
      if (op == '+') {
        acc += rhs;
      } else {
        acc -= rhs;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      skip_space();
      if (peek() != '*') break;
      ++pos_;
      acc *= factor();
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      if (!is_digit(peek())) fail("'^' must be followed by a natural-number exponent");
      const std::size_t start = pos_;
      const std::string digits = read_digits();
      unsigned e = 0;
      const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), e);
      if (ec != std::errc() || e > kMaxExponent) fail("exponent too large", start);
      if (peek() == '.') fail("'^' must be followed by a natural-number exponent");
      b = pow(b, e);
    }
    return b;
  }

  Polynomial base() {
    skip_space();
    const char c = peek();
    if (c == '(') {
      const std::size_t open = pos_;
      ++pos_;
      Polynomial inner = expression();
      skip_space();
      if (peek() != ')') fail("expected ')' to close '(' at column " + std::to_string(column_base_ + open + 1));
      ++pos_;
      return inner;
    }
    if (is_digit(c)) return Polynomial::constant(ctx_, rational());
    if (is_letter(c)) {
      const std::size_t start = pos_;
      while (!at_end() && (is_letter(peek()) || is_digit(peek()) || peek() == '_')) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      const std::size_t index = ctx_->index_of(name);
      if (index == ctx_->size()) fail("unknown identifier \"" + name + "\"", start);
      return Polynomial::variable(ctx_, index);
    }
    if (at_end()) fail("unexpected end of expression");
    fail(std::string("unexpected character '") + c + "'");
  }

  Rational rational() {
    const std::size_t start = pos_;
    std::string literal = read_digits();
    if (peek() == '.') fail("floating-point literals are not allowed; use p/q", start);
    skip_space();
    if (peek() == '/') {
      ++pos_;
      skip_space();
      if (!is_digit(peek())) fail("expected a natural-number denominator after '/'");
      const std::size_t den_start = pos_;
      const std::string den = read_digits();
      if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator", den_start);
      literal += "/" + den;
    }
    return Rational::parse(literal);
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && is_space(peek())) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& message) const { fail(message, pos_); }
  [[noreturn]] void fail(const std::string& message, std::size_t at) const {
    throw ParseError(message, line_, column_base_ + at + 1);
  }

  std::string_view text_;
  const ContextPtr& ctx_;
  std::size_t line_;
  std::size_t column_base_;
  std::size_t pos_ = 0;
};

// Splits off the first whitespace-delimited word of a line.
std::string_view first_word(std::string_view line, std::size_t& after) {
  std::size_t start = 0;
  while (start < line.size() && is_space(line[start])) ++start;
  std::size_t end = start;
  while (end < line.size() && !is_space(line[end])) ++end;
  after = end;
  return line.substr(start, end - start);
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const ContextPtr& ctx) {
  return ExpressionParser(text, ctx, 1, 0).parse();
}

IdealFile parse_ideal(std::string_view text, std::string source) {
  IdealFile file;
  file.source = std::move(source);
  std::size_t line_no = 0;
  std::size_t vars_line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    std::size_t after = 0;
    const std::string_view word = first_word(line, after);
    if (word.empty() || word.front() == '#') continue;
    const std::size_t word_col = static_cast<std::size_t>(word.data() - line.data()) + 1;

    if (word == "vars") {
      if (file.variables) {
        throw ParseError("duplicate vars line (first declared on line " + std::to_string(vars_line) + ")", line_no,
                         word_col);
      }
      std::vector<std::string> names;
      std::size_t cursor = after;
      while (true) {
        std::size_t next = 0;
        const std::string_view name = first_word(line.substr(cursor), next);
        if (name.empty()) break;
        const std::size_t col = static_cast<std::size_t>(name.data() - line.data()) + 1;
        if (!is_identifier(name)) throw ParseError("invalid variable name '" + std::string(name) + "'", line_no, col);
        for (const auto& existing : names) {
          if (existing == name) throw ParseError("duplicate variable '" + std::string(name) + "'", line_no, col);
        }
        names.emplace_back(name);
        cursor += next;
      }
      if (names.empty()) throw ParseError("vars line declares no variables", line_no, after + 1);
      file.variables = VariableContext::create(std::move(names));
      vars_line = line_no;
    } else if (word == "poly") {
      if (!file.variables) throw ParseError("poly line before the vars line", line_no, word_col);
      file.polynomials.push_back(ExpressionParser(line.substr(after), file.variables, line_no, after).parse());
      file.lines.push_back(line_no);
    } else {
      throw ParseError("expected 'vars', 'poly' or a '#' comment, found '" + std::string(word) + "'", line_no,
                       word_col);
    }
  }
  if (!file.variables) throw ParseError("missing vars line", line_no, 1);
  bool any_nonzero = false;
  for (const auto& p : file.polynomials) any_nonzero = any_nonzero || !p.is_zero();
  if (!any_nonzero) throw ParseError("ideal file needs at least one nonzero poly line", line_no, 1);
  return file;
}

namespace {

Rational parse_real_literal(std::string_view body) {
  std::string s;
  for (char c : body) {
    if (!is_space(c)) s.push_back(c);
  }
  return Rational::parse(s);
}

// One coordinate: up to one real and one imaginary part, e.g. "1/2-3i".
std::pair<Rational, Rational> parse_complex_entry(std::string_view entry) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 1; i < entry.size(); ++i) {
    if ((entry[i] == '+' || entry[i] == '-') && entry[i - 1] != '/') {
      parts.push_back(entry.substr(start, i - start));
      start = i;
    }
  }
  parts.push_back(entry.substr(start));
  if (parts.size() > 2) throw Error("malformed point entry '" + std::string(entry) + "'");

  Rational re(0);
  Rational im(0);
  bool have_re = false;
  bool have_im = false;
  for (auto part : parts) {
    if (!part.empty() && part.back() == 'i') {
      if (have_im) throw Error("malformed point entry '" + std::string(entry) + "'");
      std::string body(part.substr(0, part.size() - 1));
      if (body.empty() || body == "+" || body == "-") body += "1";
      im = parse_real_literal(body);
      have_im = true;
    } else {
      if (have_re) throw Error("malformed point entry '" + std::string(entry) + "'");
      re = parse_real_literal(part);
      have_re = true;
    }
  }
  return {re, im};
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (is_space(s.front()) || s.front() == '\n')) s.remove_prefix(1);
  while (!s.empty() && (is_space(s.back()) || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

}  // namespace

ParsedPoint parse_point(std::string_view text, const VariableContext& ctx) {
  std::vector<std::pair<Rational, Rational>> coords;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view entry = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    if (entry.empty()) throw Error("empty coordinate in point '" + std::string(text) + "'");
    try {
      coords.push_back(parse_complex_entry(entry));
    } catch (const Error&) {
      throw Error("malformed point entry '" + std::string(entry) + "'");
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (coords.size() != ctx.size()) {
    throw Error("point has " + std::to_string(coords.size()) + " coordinates but there are " +
                std::to_string(ctx.size()) + " variables");
  }
  ParsedPoint out;
  bool real = true;
  std::vector<Rational> exact;
  for (const auto& [re, im] : coords) {
    out.values.emplace_back(re.to_double(), im.to_double());
    real = real && im.is_zero();
    exact.push_back(re);
  }
  if (real) out.exact = std::move(exact);
  return out;
}

}  // namespace tcone
