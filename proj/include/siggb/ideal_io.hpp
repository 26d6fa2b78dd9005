#pragma once

// Line-oriented ideal files and the Katsura / Cyclic benchmark generators.
//
//   # comment
//   ring: x,y,z
//   char: 0            (0 = rationals, otherwise a prime below 2^31)
//   order: grevlex     (grevlex | lex | grlex)
//   poly: y*z - x
//   poly: (x + 2)^2*y - 1

#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "field.hpp"
#include "polynomial.hpp"

namespace siggb {

/// An ideal as read from disk. Coefficients are kept exact; the caller maps
/// them into the working field.
struct IdealFile {
  std::vector<std::string> variables;
  std::uint32_t characteristic = 0;
  TermOrderKind order = TermOrderKind::grevlex;
  std::vector<Polynomial<Rational>> polys;

  TermOrder term_order() const { return {order, variables.size()}; }
};

class parse_error : public std::runtime_error {
public:
  enum class Kind {
    malformed_token,
    unknown_variable,
    bad_characteristic,
    missing_header,
    duplicate_header,
    bad_ring,
    unknown_order,
    unknown_key,
  };

  parse_error(Kind kind, std::size_t line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg),
        kind(kind), line(line) {}

  Kind kind;
  std::size_t line;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

inline bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      return false;
  return true;
}

/// Recursive-descent parser for one polynomial expression.
class ExprParser {
public:
  using cpp_int = boost::multiprecision::cpp_int;

  ExprParser(std::string_view text, std::size_t line, TermOrder ord,
             const std::unordered_map<std::string, std::size_t>& vars)
      : s_(text), line_(line), ord_(ord), vars_(vars) {}

  Polynomial<Rational> parse() {
    auto p = expr();
    skip_ws();
    if (pos_ != s_.size())
      fail_token();
    return p;
  }

private:
  Polynomial<Rational> expr() {
    skip_ws();
    Polynomial<Rational> acc(ord_);
    bool first = true;
    for (;;) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
      } else if (!first) {
        break;
      }
      Polynomial<Rational> t = term();
      acc = sign > 0 ? acc + t : acc - t;
      first = false;
    }
    return acc;
  }

  Polynomial<Rational> term() {
    Polynomial<Rational> acc = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*')
        break;
      get();
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial<Rational> factor() {
    Polynomial<Rational> base = primary();
    skip_ws();
    if (peek() != '^')
      return base;
    get();
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail_token();
    cpp_int e = integer();
    if (e > 0xFFFF)
      throw parse_error(parse_error::Kind::malformed_token, line_,
                        "exponent too large");
    Polynomial<Rational> r = Polynomial<Rational>::constant(ord_, Rational(1));
    for (unsigned k = 0; k < static_cast<unsigned>(e); ++k)
      r = r * base;
    return r;
  }

  Polynomial<Rational> primary() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      get();
      auto p = expr();
      skip_ws();
      if (peek() != ')')
        fail_token();
      get();
      return p;
    }
    if (c == '-' || c == '+') {
      get();
      auto p = factor();
      return c == '-' ? -p : p;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return Polynomial<Rational>::constant(
          ord_, Rational(Rational::value_type(integer())));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      auto it = vars_.find(name);
      if (it == vars_.end())
        throw parse_error(parse_error::Kind::unknown_variable, line_,
                          "unknown variable '" + name + "'");
      Monomial m(ord_.nvars);
      m.set(it->second, 1);
      return Polynomial<Rational>::monomial(ord_, m, Rational(1));
    }
    fail_token();
  }

  cpp_int integer() {
    cpp_int v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      v = v * 10 + (s_[pos_++] - '0');
    return v;
  }

  [[noreturn]] void fail_token() {
    std::string tok = pos_ < s_.size() ? std::string(1, s_[pos_]) : "end of line";
    throw parse_error(parse_error::Kind::malformed_token, line_,
                      "unexpected '" + tok + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return s_[pos_++]; }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_;
  TermOrder ord_;
  const std::unordered_map<std::string, std::size_t>& vars_;
};

} // namespace detail

inline IdealFile parse_ideal_file(std::string_view text) {
  using K = parse_error::Kind;
  IdealFile out;
  std::optional<std::size_t> ring_line, char_line, order_line;
  std::vector<std::pair<std::size_t, std::string>> poly_lines;

  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) {
      if (end == text.size())
        break;
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw parse_error(K::malformed_token, lineno, "expected 'key: value'");
    std::string_view key = detail::trim(line.substr(0, colon));
    std::string_view value = detail::trim(line.substr(colon + 1));

    if (key == "ring") {
      if (ring_line)
        throw parse_error(K::duplicate_header, lineno, "duplicate ring line");
      ring_line = lineno;
      std::size_t p = 0;
      while (p <= value.size()) {
        std::size_t q = value.find(',', p);
        if (q == std::string_view::npos)
          q = value.size();
        std::string name(detail::trim(value.substr(p, q - p)));
        if (!detail::is_identifier(name))
          throw parse_error(K::bad_ring, lineno, "bad variable name '" + name + "'");
        for (const auto& v : out.variables)
          if (v == name)
            throw parse_error(K::bad_ring, lineno, "duplicate variable '" + name + "'");
        out.variables.push_back(std::move(name));
        p = q + 1;
      }
      if (out.variables.size() > kMaxVariables)
        throw parse_error(K::bad_ring, lineno, "too many variables");
    } else if (key == "char") {
      if (char_line)
        throw parse_error(K::duplicate_header, lineno, "duplicate char line");
      char_line = lineno;
      if (value.empty() || value.size() > 10 ||
          value.find_first_not_of("0123456789") != std::string_view::npos)
        throw parse_error(K::bad_characteristic, lineno,
                          "characteristic must be a non-negative integer");
      std::uint64_t c = std::stoull(std::string(value));
      if (c != 0 && (c >= (1ull << 31) || !is_prime(c)))
        throw parse_error(K::bad_characteristic, lineno,
                          "characteristic " + std::string(value) +
                              " is not a prime below 2^31");
      out.characteristic = static_cast<std::uint32_t>(c);
    } else if (key == "order") {
      if (order_line)
        throw parse_error(K::duplicate_header, lineno, "duplicate order line");
      order_line = lineno;
      try {
        out.order = parse_term_order(value);
      } catch (const config_error&) {
        throw parse_error(K::unknown_order, lineno,
                          "unknown order '" + std::string(value) + "'");
      }
    } else if (key == "poly") {
      poly_lines.emplace_back(lineno, std::string(value));
    } else {
      throw parse_error(K::unknown_key, lineno,
                        "unknown key '" + std::string(key) + "'");
    }
    if (end == text.size())
      break;
  }

  if (!ring_line)
    throw parse_error(K::missing_header, lineno, "missing 'ring:' line");
  if (!char_line)
    throw parse_error(K::missing_header, lineno, "missing 'char:' line");
  if (!order_line)
    throw parse_error(K::missing_header, lineno, "missing 'order:' line");
  if (poly_lines.empty())
    throw parse_error(K::missing_header, lineno, "no 'poly:' lines");

  std::unordered_map<std::string, std::size_t> vars;
  for (std::size_t i = 0; i < out.variables.size(); ++i)
    vars.emplace(out.variables[i], i);
  for (const auto& [ln, src] : poly_lines) {
    if (src.empty())
      throw parse_error(K::malformed_token, ln, "empty polynomial");
    out.polys.push_back(
        detail::ExprParser(src, ln, out.term_order(), vars).parse());
  }
  return out;
}

inline std::string render_ideal_file(const IdealFile& f) {
  std::ostringstream os;
  os << "ring: ";
  for (std::size_t i = 0; i < f.variables.size(); ++i)
    os << (i ? "," : "") << f.variables[i];
  os << "\nchar: " << f.characteristic << "\norder: " << to_string(f.order)
     << '\n';
  for (const auto& p : f.polys) {
    os << "poly: ";
    p.write(os, f.variables);
    os << '\n';
  }
  return os.str();
}

/// Katsura-n: variables u0..un; for m = 0..n-1
///   sum_{i=-n..n} u_|i| u_|m-i| - u_m   (terms with |m-i| > n vanish)
/// followed by u0 + 2 (u1 + ... + un) - 1.
inline IdealFile gen_katsura(int n) {
  if (n < 2)
    throw input_error("katsura: n must be at least 2");
  IdealFile f;
  f.characteristic = 32003;
  f.order = TermOrderKind::grevlex;
  for (int i = 0; i <= n; ++i)
    f.variables.push_back("u" + std::to_string(i));
  const TermOrder ord = f.term_order();
  auto var = [&](int i) {
    Monomial m(ord.nvars);
    m.set(static_cast<std::size_t>(i), 1);
    return m;
  };
  for (int m = 0; m < n; ++m) {
    std::vector<Term<Rational>> terms;
    for (int i = -n; i <= n; ++i) {
      int a = i < 0 ? -i : i;
      int b = m - i < 0 ? i - m : m - i;
      if (b > n)
        continue;
      terms.push_back({monomial_mul(var(a), var(b)), Rational(1)});
    }
    terms.push_back({var(m), Rational(-1)});
    f.polys.push_back(Polynomial<Rational>::from_terms(ord, std::move(terms)));
  }
  std::vector<Term<Rational>> lin;
  lin.push_back({var(0), Rational(1)});
  for (int i = 1; i <= n; ++i)
    lin.push_back({var(i), Rational(2)});
  lin.push_back({Monomial(ord.nvars), Rational(-1)});
  f.polys.push_back(Polynomial<Rational>::from_terms(ord, std::move(lin)));
  return f;
}

/// Cyclic-n: variables x1..xn; the cyclic sums of consecutive d-products for
/// d = 1..n-1, then x1*...*xn - 1.
inline IdealFile gen_cyclic(int n) {
  if (n < 2)
    throw input_error("cyclic: n must be at least 2");
  IdealFile f;
  f.characteristic = 32003;
  f.order = TermOrderKind::grevlex;
  for (int i = 1; i <= n; ++i)
    f.variables.push_back("x" + std::to_string(i));
  const TermOrder ord = f.term_order();
  for (int d = 1; d < n; ++d) {
    std::vector<Term<Rational>> terms;
    for (int i = 0; i < n; ++i) {
      Monomial m(ord.nvars);
      for (int j = 0; j < d; ++j)
        m.set(static_cast<std::size_t>((i + j) % n), 1);
      terms.push_back({m, Rational(1)});
    }
    f.polys.push_back(Polynomial<Rational>::from_terms(ord, std::move(terms)));
  }
  std::vector<unsigned> ones(static_cast<std::size_t>(n), 1u);
  f.polys.push_back(Polynomial<Rational>::from_terms(
      ord, {{Monomial(std::span<const unsigned>(ones)), Rational(1)},
            {Monomial(ord.nvars), Rational(-1)}}));
  return f;
}

} // namespace siggb
