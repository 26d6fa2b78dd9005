#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace siggb {

/// Largest supported number of ring variables.
inline constexpr std::size_t kMaxVariables = 16;

/// Power product x^a with fixed-width 16-bit exponents and a cached total
/// degree. A monomial may also be the "null" token standing in for lpp(0);
/// it compares below every genuine monomial and divides nothing.
class Monomial {
public:
  using exponent_type = std::uint16_t;

  Monomial() = default;

  /// The unit monomial 1 over `nvars` variables.
  explicit Monomial(std::size_t nvars) : nvars_(check_nvars(nvars)) {}

  Monomial(std::initializer_list<unsigned> exps)
      : Monomial(std::span<const unsigned>(exps.begin(), exps.size())) {}

  explicit Monomial(std::span<const unsigned> exps)
      : nvars_(check_nvars(exps.size())) {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] > 0xFFFF)
        throw overflow_error("exponent exceeds 16 bits");
      exp_[i] = static_cast<exponent_type>(exps[i]);
      degree_ += exps[i];
    }
  }

  static Monomial null_token(std::size_t nvars) {
    Monomial m(nvars);
    m.null_ = true;
    return m;
  }

  std::size_t size() const { return nvars_; }
  std::uint32_t degree() const { return degree_; }
  bool is_null() const { return null_; }
  bool is_one() const { return !null_ && degree_ == 0; }

  exponent_type operator[](std::size_t i) const { return exp_[i]; }

  void set(std::size_t i, unsigned e) {
    if (e > 0xFFFF)
      throw overflow_error("exponent exceeds 16 bits");
    degree_ = degree_ - exp_[i] + e;
    exp_[i] = static_cast<exponent_type>(e);
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.null_ == b.null_ &&
           a.degree_ == b.degree_ && a.exp_ == b.exp_;
  }

  std::size_t hash() const {
    std::size_t h = null_ ? 0x9e3779b97f4a7c15ull : 0;
    for (std::size_t i = 0; i < nvars_; ++i)
      h = h * 1000003u + exp_[i];
    return h;
  }

private:
  static std::uint8_t check_nvars(std::size_t n) {
    if (n > kMaxVariables)
      throw dimension_error("at most " + std::to_string(kMaxVariables) +
                            " variables are supported");
    return static_cast<std::uint8_t>(n);
  }

  std::array<exponent_type, kMaxVariables> exp_{};
  std::uint32_t degree_ = 0;
  std::uint8_t nvars_ = 0;
  bool null_ = false;

  friend Monomial monomial_mul(const Monomial&, const Monomial&);
  friend Monomial monomial_quotient(const Monomial&, const Monomial&);
  friend Monomial monomial_lcm(const Monomial&, const Monomial&);
};

namespace detail {
inline void require_same_size(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size())
    throw dimension_error("monomials over different variable counts (" +
                          std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()) + ")");
}
} // namespace detail

inline Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  detail::require_same_size(a, b);
  if (a.null_ || b.null_)
    return Monomial::null_token(a.size());
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    unsigned s = unsigned(a.exp_[i]) + b.exp_[i];
    if (s > 0xFFFF)
      throw overflow_error("exponent overflow in monomial product");
    r.exp_[i] = static_cast<Monomial::exponent_type>(s);
  }
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

/// True iff b divides a componentwise. The null token divides nothing and is
/// divisible by nothing.
inline bool monomial_divides(const Monomial& b, const Monomial& a) {
  if (b.is_null() || a.is_null() || b.degree() > a.degree())
    return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] > a[i])
      return false;
  return true;
}

/// Bit i is set when variable i occurs in m. If b | a then
/// support_mask(b) & ~support_mask(a) == 0.
inline std::uint32_t support_mask(const Monomial& m) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0)
      mask |= 1u << i;
  return mask;
}

inline Monomial monomial_quotient(const Monomial& a, const Monomial& b) {
  detail::require_same_size(a, b);
  if (!monomial_divides(b, a))
    throw not_divisible_error("monomial quotient: divisor does not divide");
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.nvars_; ++i)
    r.exp_[i] = static_cast<Monomial::exponent_type>(a.exp_[i] - b.exp_[i]);
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

inline Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  detail::require_same_size(a, b);
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    r.degree_ += r.exp_[i];
  }
  return r;
}

inline bool monomials_coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0)
      return false;
  return true;
}

// ---------------------------------------------------------------------------
// Term orders

enum class TermOrderKind { grevlex, lex, grlex };

inline std::string_view to_string(TermOrderKind k) {
  switch (k) {
  case TermOrderKind::grevlex: return "grevlex";
  case TermOrderKind::lex: return "lex";
  case TermOrderKind::grlex: return "grlex";
  }
  return "?";
}

inline TermOrderKind parse_term_order(std::string_view s) {
  if (s == "grevlex")
    return TermOrderKind::grevlex;
  if (s == "lex")
    return TermOrderKind::lex;
  if (s == "grlex")
    return TermOrderKind::grlex;
  throw config_error("unknown term order '" + std::string(s) + "'");
}

/// A monomial order on k[x_1..x_n], variables ranked x_1 > x_2 > ... > x_n.
struct TermOrder {
  TermOrderKind kind = TermOrderKind::grevlex;
  std::size_t nvars = 0;

  friend bool operator==(const TermOrder&, const TermOrder&) = default;
};

/// Three-way comparison under `ord`. The null token is below everything;
/// two null tokens compare equal.
inline std::strong_ordering compare_monomials(const Monomial& a,
                                              const Monomial& b,
                                              const TermOrder& ord) {
  if (a.size() != ord.nvars || b.size() != ord.nvars)
    throw dimension_error("monomial length does not match term order");
  if (a.is_null() || b.is_null())
    return b.is_null() <=> a.is_null();

  const std::size_t n = ord.nvars;
  switch (ord.kind) {
  case TermOrderKind::grevlex:
    if (a.degree() != b.degree())
      return a.degree() <=> b.degree();
    // Rightmost nonzero entry of a - b negative means a is greater.
    for (std::size_t i = n; i-- > 0;)
      if (a[i] != b[i])
        return b[i] <=> a[i];
    return std::strong_ordering::equal;
  case TermOrderKind::grlex:
    if (a.degree() != b.degree())
      return a.degree() <=> b.degree();
    [[fallthrough]];
  case TermOrderKind::lex:
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != b[i])
        return a[i] <=> b[i];
    return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

inline std::ostream& operator<<(std::ostream& os, const Monomial& m) {
  if (m.is_null())
    return os << "0";
  if (m.is_one())
    return os << "1";
  bool first = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0)
      continue;
    if (!first)
      os << '*';
    first = false;
    os << "x" << (i + 1);
    if (m[i] > 1)
      os << '^' << m[i];
  }
  return os;
}

} // namespace siggb
