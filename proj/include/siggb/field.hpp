#pragma once

// Coefficient fields: prime fields GF(p) with p < 2^31, and exact rationals.
//
// Both element types satisfy the `field_element` concept below, which is all
// the polynomial and engine templates require. A "field" object (PrimeField,
// RationalField) is only needed to mint elements from integers.

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace siggb {

template <typename C>
concept field_element = std::regular<C> && requires(const C a, const C b) {
  { a + b } -> std::same_as<C>;
  { a - b } -> std::same_as<C>;
  { a * b } -> std::same_as<C>;
  { -a } -> std::same_as<C>;
  { a.is_zero() } -> std::same_as<bool>;
  { a.is_one() } -> std::same_as<bool>;
  { a.inverse() } -> std::same_as<C>;
  { a.one() } -> std::same_as<C>;
  { a.zero() } -> std::same_as<C>;
};

// ---------------------------------------------------------------------------
// GF(p)

/// Residue modulo a prime p, 2 <= p < 2^31. The modulus travels with the
/// value, so mixing fields is detectable.
class Zp {
public:
  Zp() = default;
  Zp(std::int64_t v, std::uint32_t p) : p_(p) {
    auto r = v % static_cast<std::int64_t>(p);
    if (r < 0)
      r += p;
    v_ = static_cast<std::uint32_t>(r);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  Zp zero() const { return raw(0, p_); }
  Zp one() const { return raw(1, p_); }

  friend Zp operator+(Zp a, Zp b) {
    std::uint32_t s = a.v_ + b.v_;
    if (s >= a.p_)
      s -= a.p_;
    return raw(s, a.p_);
  }
  friend Zp operator-(Zp a, Zp b) {
    return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_);
  }
  friend Zp operator*(Zp a, Zp b) {
    return raw(static_cast<std::uint32_t>(
                   static_cast<std::uint64_t>(a.v_) * b.v_ % a.p_),
               a.p_);
  }
  Zp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }

  Zp inverse() const {
    if (v_ == 0)
      throw std::domain_error("inverse of zero in GF(p)");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = v_;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0)
      t += p_;
    return raw(static_cast<std::uint32_t>(t), p_);
  }

  friend bool operator==(const Zp&, const Zp&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Zp& c) {
    return os << c.v_;
  }

private:
  static Zp raw(std::uint32_t v, std::uint32_t p) {
    Zp z;
    z.v_ = v;
    z.p_ = p;
    return z;
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 2;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

struct PrimeField {
  using element = Zp;

  explicit PrimeField(std::uint32_t p) : p(p) {
    if (p >= (1u << 31) || !is_prime(p))
      throw config_error("characteristic " + std::to_string(p) +
                         " is not a prime below 2^31");
  }

  Zp from_integer(std::int64_t v) const { return Zp(v, p); }
  Zp from_integer(const boost::multiprecision::cpp_int& v) const {
    boost::multiprecision::cpp_int r = v % p;
    return Zp(static_cast<std::int64_t>(r), p);
  }
  std::uint32_t characteristic() const { return p; }

  std::uint32_t p;
};

// ---------------------------------------------------------------------------
// Q

/// Exact rational in lowest terms with positive denominator (normalization is
/// maintained by boost::multiprecision).
class Rational {
public:
  using value_type = boost::multiprecision::cpp_rational;

  Rational() = default;
  Rational(std::int64_t v) : v_(v) {}
  Rational(std::int64_t num, std::int64_t den) {
    if (den == 0)
      throw std::domain_error("rational with zero denominator");
    v_ = value_type(num) / value_type(den);
  }
  explicit Rational(value_type v) : v_(std::move(v)) {}

  const value_type& value() const { return v_; }

  bool is_zero() const { return v_.is_zero(); }
  bool is_one() const { return v_ == 1; }
  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(value_type(a.v_ + b.v_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(value_type(a.v_ - b.v_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(value_type(a.v_ * b.v_));
  }
  Rational operator-() const { return Rational(value_type(-v_)); }

  Rational inverse() const {
    if (is_zero())
      throw std::domain_error("inverse of zero rational");
    return Rational(value_type(1 / v_));
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& c) {
    return os << c.v_;
  }

private:
  value_type v_;
};

struct RationalField {
  using element = Rational;

  Rational from_integer(std::int64_t v) const { return Rational(v); }
  Rational from_integer(const boost::multiprecision::cpp_int& v) const {
    return Rational(Rational::value_type(v));
  }
  std::uint32_t characteristic() const { return 0; }
};

static_assert(field_element<Zp>);
static_assert(field_element<Rational>);

// Map a rational into GF(p). Throws if p divides the denominator.
inline Zp to_prime_field(const Rational& q, const PrimeField& f) {
  using boost::multiprecision::cpp_int;
  cpp_int num = boost::multiprecision::numerator(q.value());
  cpp_int den = boost::multiprecision::denominator(q.value());
  Zp d = f.from_integer(den);
  if (d.is_zero())
    throw std::domain_error("denominator vanishes modulo the characteristic");
  return f.from_integer(num) * d.inverse();
}

} // namespace siggb
