#pragma once

// Shared fixtures for the test binaries.

#include <random>
#include <string>
#include <vector>

#include <siggb/siggb.hpp>

namespace siggb::test {

/// Parses polynomials over the given variables (grevlex, exact).
inline std::vector<Polynomial<Rational>>
parse_polys(const std::string& ring, const std::vector<std::string>& exprs,
            TermOrderKind ord = TermOrderKind::grevlex) {
  std::string text = "ring: " + ring + "\nchar: 0\norder: " +
                     std::string(to_string(ord)) + "\n";
  for (const auto& e : exprs)
    text += "poly: " + e + "\n";
  return parse_ideal_file(text).polys;
}

inline Polynomial<Rational> parse_poly(const std::string& ring,
                                       const std::string& expr,
                                       TermOrderKind ord = TermOrderKind::grevlex) {
  return parse_polys(ring, {expr}, ord).front();
}

inline std::vector<Polynomial<Zp>> to_zp(const std::vector<Polynomial<Rational>>& ps,
                                         std::uint32_t p) {
  PrimeField f(p);
  std::vector<Polynomial<Zp>> out;
  for (const auto& q : ps)
    out.push_back(to_prime_field(q, f));
  return out;
}

/// f1 = yz - x, f2 = xz - y, f3 = xy - z over Q[x,y,z], grevlex x > y > z.
inline std::vector<Polynomial<Rational>> example_ideal() {
  return parse_polys("x,y,z", {"y*z - x", "x*z - y", "x*y - z"});
}

/// Monomial over x,y,z from exponents.
inline Monomial xyz(unsigned a, unsigned b, unsigned c) { return Monomial{a, b, c}; }

inline const TermOrder kGrevlex3{TermOrderKind::grevlex, 3};

/// Seeded random ideal: `ngens` generators in `nvars` variables, degree <=
/// `maxdeg`, over GF(p). Zero draws are redrawn.
inline std::vector<Polynomial<Zp>> random_ideal(std::mt19937_64& rng,
                                                std::size_t nvars,
                                                std::size_t ngens,
                                                unsigned maxdeg,
                                                std::uint32_t p) {
  TermOrder ord{TermOrderKind::grevlex, nvars};
  std::vector<Polynomial<Zp>> out;
  std::uniform_int_distribution<std::size_t> nterms(1, 4);
  std::uniform_int_distribution<std::uint32_t> coeff(1, p - 1);
  while (out.size() < ngens) {
    std::vector<Term<Zp>> terms;
    std::size_t k = nterms(rng);
    for (std::size_t i = 0; i < k; ++i)
      terms.push_back({detail::random_monomial(nvars, maxdeg, rng),
                       Zp(coeff(rng), p)});
    auto f = Polynomial<Zp>::from_terms(ord, std::move(terms));
    if (!f.is_zero())
      out.push_back(std::move(f));
  }
  return out;
}

} // namespace siggb::test
