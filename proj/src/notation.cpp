/*
 * Copyright 2026 The nilsol Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "nilsol/notation.hpp"

#include <json.hpp>

namespace nilsol {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

std::string render_vector_notation(const BracketTable& b) {
  if (b.n() > 9) throw std::invalid_argument("vector notation needs n <= 9");
  std::string out = "(";
  for (int k = 1; k <= b.n(); ++k) {
    if (k > 1) out += ",";
    std::string entry;
    for (const auto& [t, alpha] : b.coefficients()) {
      if (t.k != k) continue;
      if (alpha.sign() < 0) {
        entry += "-";
      } else if (!entry.empty()) {
        entry += "+";
      }
      entry += SignedSqrt(1, alpha.radicand()).str() + "." + std::to_string(t.i) + std::to_string(t.j);
    }
    out += entry.empty() ? "0" : entry;
  }
  return out + ")";
}

namespace {

constexpr std::string_view kMinus = "\xE2\x88\x92";
constexpr std::string_view kRadical = "\xE2\x88\x9A";
constexpr std::string_view kMiddleDot = "\xC2\xB7";

class Cursor {
 public:
  explicit Cursor(std::string_view text, int line = 1) : text_(text), line_(line) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  bool starts_with(std::string_view s) const { return text_.substr(pos_).starts_with(s); }
  int line() const { return line_; }
  int column() const { return column_; }
  std::size_t pos() const { return pos_; }

  void advance(std::size_t bytes = 1) {
    for (std::size_t i = 0; i < bytes && !done(); ++i) {
      const char c = text_[pos_++];
      if (c == '\n') {
        ++line_;
        column_ = 1;
      } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
        ++column_;
      }
    }
  }

  bool accept(std::string_view s) {
    if (!starts_with(s)) return false;
    advance(s.size());
    return true;
  }

  void skip_space() {
    while (!done() && (peek() == ' ' || peek() == '\t' || peek() == '\r' || peek() == '\n')) advance();
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, column_, msg); }

  void expect(std::string_view s) {
    if (!accept(s)) fail("expected '" + std::string(s) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }

Integer parse_integer(Cursor& c) {
  if (!is_digit(c.peek())) c.fail("expected a digit");
  std::string digits;
  while (is_digit(c.peek())) {
    digits += c.peek();
    c.advance();
  }
  return Integer(digits);
}

Rational parse_rational(Cursor& c) {
  const Integer num = parse_integer(c);
  if (!c.accept("/")) return Rational(num);
  const int line = c.line();
  const int col = c.column();
  const Integer den = parse_integer(c);
  if (den == 0) throw ParseError(line, col, "zero denominator");
  return Rational(num, den);
}

/// Sign prefix: +1, -1, or 0 when absent.
int parse_sign(Cursor& c) {
  if (c.accept("-") || c.accept(kMinus)) return -1;
  if (c.accept("+")) return 1;
  return 0;
}

SignedSqrt parse_magnitude(Cursor& c, int sign) {
  const int line = c.line();
  const int col = c.column();
  if (c.accept("sqrt(")) {
    const Rational r = parse_rational(c);
    c.expect(")");
    if (r.is_zero()) throw ParseError(line, col, "zero coefficient");
    return SignedSqrt(sign, r);
  }
  if (c.accept(kRadical)) {
    const bool paren = c.accept("(");
    const Rational r = parse_rational(c);
    if (paren) c.expect(")");
    if (r.is_zero()) throw ParseError(line, col, "zero coefficient");
    return SignedSqrt(sign, r);
  }
  if (!is_digit(c.peek())) c.fail("expected a coefficient");
  const Rational r = parse_rational(c);
  if (r.is_zero()) throw ParseError(line, col, "zero coefficient");
  return SignedSqrt::from_rational(sign < 0 ? -r : r);
}

bool accept_separator(Cursor& c) { return c.accept(".") || c.accept("*") || c.accept(kMiddleDot); }

struct Summand {
  int line;
  int column;
  int entry;
  Triple triple;
  SignedSqrt alpha;
};

void parse_entry(Cursor& c, int entry, std::vector<Summand>& out) {
  for (bool first = true;; first = false) {
    c.skip_space();
    int sign = parse_sign(c);
    if (!first && sign == 0) return;
    if (sign == 0) sign = 1;
    c.skip_space();
    const int line = c.line();
    const int col = c.column();
    const SignedSqrt mag = parse_magnitude(c, sign);
    if (!accept_separator(c)) c.fail("expected '.' between coefficient and index pair");
    const int ic = c.column();
    if (!is_digit(c.peek())) c.fail("expected an index pair ij");
    const int i = c.peek() - '0';
    c.advance();
    if (!is_digit(c.peek())) c.fail("expected an index pair ij");
    const int j = c.peek() - '0';
    c.advance();
    if (!(0 < i && i < j)) throw ParseError(c.line(), ic, "index pair must satisfy 0 < i < j");
    out.push_back({line, col, entry, Triple{i, j, i + j}, mag});
  }
}

/// True (and consumed) when the entry is a lone 0.
bool accept_zero_entry(Cursor& c) {
  if (c.peek() != '0') return false;
  Cursor probe = c;
  probe.advance();
  probe.skip_space();
  if (probe.peek() != ',' && probe.peek() != ')') return false;
  c = probe;
  return true;
}

std::vector<Summand> parse_tuple(Cursor& c, int& entries) {
  std::vector<Summand> out;
  c.skip_space();
  c.expect("(");
  entries = 0;
  for (;;) {
    c.skip_space();
    ++entries;
    if (!accept_zero_entry(c)) parse_entry(c, entries, out);
    c.skip_space();
    if (c.accept(",")) continue;
    if (c.accept(")")) break;
    c.fail("expected ',' or ')'");
  }
  return out;
}

BracketTable build_table(const std::vector<Summand>& summands, int entries, const NotationOptions& opt) {
  const int n = opt.n > 0 ? opt.n : entries;
  BracketTable b(n);
  for (const auto& s : summands) {
    if (opt.check_positions && s.entry != s.triple.k)
      throw ParseError(s.line, s.column,
                       "summand " + std::to_string(s.triple.i) + std::to_string(s.triple.j) + " belongs in entry " +
                           std::to_string(s.triple.k) + ", found in entry " + std::to_string(s.entry));
    if (s.triple.k > n)
      throw ParseError(s.line, s.column, "bracket target " + std::to_string(s.triple.k) + " exceeds n = " + std::to_string(n));
    if (!b.get(s.triple).is_zero())
      throw ParseError(s.line, s.column, "bracket (" + to_string(s.triple) + ") given twice");
    b.set(s.triple, s.alpha);
  }
  return b;
}

}  // namespace

BracketTable parse_vector_notation(std::string_view text, const NotationOptions& options) {
  Cursor c(text);
  int entries = 0;
  const auto summands = parse_tuple(c, entries);
  c.skip_space();
  if (!c.done()) c.fail("unexpected text after the tuple");
  if (options.check_positions && options.n > 0 && entries != options.n)
    throw ParseError(1, 1, "tuple has " + std::to_string(entries) + " entries, expected " + std::to_string(options.n));
  if (entries > 9 && options.n == 0) throw ParseError(1, 1, "vector notation supports n <= 9");
  return build_table(summands, entries, options);
}

SignedSqrt parse_coefficient(std::string_view text) {
  Cursor c(text);
  c.skip_space();
  int sign = parse_sign(c);
  if (sign == 0) sign = 1;
  c.skip_space();
  if (c.peek() == '0') {
    Cursor probe = c;
    probe.advance();
    probe.skip_space();
    if (probe.done()) return {};
  }
  const SignedSqrt s = parse_magnitude(c, sign);
  c.skip_space();
  if (!c.done()) c.fail("unexpected text after the coefficient");
  return s;
}

namespace {

std::pair<int, int> line_col(std::string_view text, std::size_t byte, int base_line) {
  int line = base_line;
  int col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
      ++col;
    }
  }
  return {line, col};
}

BracketTable from_json(std::string_view body, int base_line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_col(body, e.byte > 0 ? e.byte - 1 : 0, base_line);
    throw ParseError(line, col, "invalid JSON");
  }
  auto fail = [&](const std::string& msg) -> BracketTable { throw ParseError(base_line, 1, msg); };
  if (!j.is_object()) return fail("expected a JSON object");
  try {
    if (j.contains("vector")) {
      NotationOptions opt;
      if (j.contains("n")) opt.n = j.at("n").get<int>();
      return parse_vector_notation(j.at("vector").get<std::string>(), opt);
    }
    if (!j.contains("n") || !j.contains("brackets")) return fail("expected keys \"n\" and \"brackets\"");
    BracketTable b(j.at("n").get<int>());
    for (const auto& e : j.at("brackets")) {
      const auto t = e.at("triple").get<std::vector<int>>();
      if (t.size() != 3) return fail("triple needs three indices");
      const Triple tr{t[0], t[1], t[2]};
      const auto alpha = parse_coefficient(e.at("coefficient").get<std::string>());
      if (!b.get(tr).is_zero()) return fail("bracket (" + to_string(tr) + ") given twice");
      b.set(tr, alpha);
    }
    return b;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    return fail(e.what());
  }
}

}  // namespace

BracketTable parse_bracket_file(std::string_view text) {
  // skip blank and comment lines
  std::size_t pos = 0;
  int line = 1;
  while (pos < text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string_view ln = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    const auto first = ln.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && ln[first] != '#') break;
    if (eol == std::string_view::npos) {
      pos = text.size();
      break;
    }
    pos = eol + 1;
    ++line;
  }
  if (pos >= text.size()) throw ParseError(line, 1, "empty input");
  const std::string_view body = text.substr(pos);
  const auto first = body.find_first_not_of(" \t\r\n");
  if (body[first] == '{') return from_json(body, line);
  Cursor c(body, line);
  int entries = 0;
  const auto summands = parse_tuple(c, entries);
  c.skip_space();
  while (!c.done() && c.peek() == '#') {
    while (!c.done() && c.peek() != '\n') c.advance();
    c.skip_space();
  }
  if (!c.done()) c.fail("unexpected text after the tuple");
  if (entries > 9) throw ParseError(line, 1, "vector notation supports n <= 9");
  return build_table(summands, entries, NotationOptions{});
}

}  // namespace nilsol
