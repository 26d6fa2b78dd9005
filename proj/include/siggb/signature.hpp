#pragma once

// Module monomials x^a e_i and the two module orders used by the engine:
// position-over-term (POT) and the Schreyer-type order induced by the
// generators' leading power products.

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "monomial.hpp"

namespace siggb {

/// x^a e_i with a 1-based generator index. Index 0 is the sentinel "zero
/// signature", below every genuine signature.
struct Signature {
  std::uint32_t index = 0;
  Monomial mono;

  bool is_sentinel() const { return index == 0; }
  static Signature sentinel(std::size_t nvars) {
    return {0, Monomial::null_token(nvars)};
  }
  static Signature unit(std::uint32_t index, std::size_t nvars) {
    return {index, Monomial(nvars)};
  }

  friend bool operator==(const Signature&, const Signature&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Signature& s) {
  if (s.is_sentinel())
    return os << "0";
  return os << s.mono << "*e" << s.index;
}

enum class ModuleOrderKind { pot, schreyer };

inline std::string_view to_string(ModuleOrderKind k) {
  return k == ModuleOrderKind::pot ? "pot" : "schreyer";
}

inline ModuleOrderKind parse_module_order(std::string_view s) {
  if (s == "pot")
    return ModuleOrderKind::pot;
  if (s == "schreyer")
    return ModuleOrderKind::schreyer;
  throw config_error("unknown module order '" + std::string(s) + "'");
}

/// Order on signatures.
///   pot:      x^a e_i < x^b e_j  iff  i > j, or i = j and x^a < x^b.
///   schreyer: x^a e_i < x^b e_j  iff  x^a lpp(f_i) < x^b lpp(f_j), or equal
///             and i > j.
struct ModuleOrder {
  ModuleOrderKind kind = ModuleOrderKind::pot;
  TermOrder base;
  std::vector<Monomial> generator_lpps; // lpp(f_1)..lpp(f_m), schreyer only

  static ModuleOrder pot(TermOrder base) {
    return {ModuleOrderKind::pot, base, {}};
  }
  static ModuleOrder schreyer(TermOrder base, std::vector<Monomial> lpps) {
    return {ModuleOrderKind::schreyer, base, std::move(lpps)};
  }
};

inline std::strong_ordering compare_signatures(const Signature& a,
                                               const Signature& b,
                                               const ModuleOrder& mord) {
  if (a.is_sentinel() || b.is_sentinel())
    return b.is_sentinel() <=> a.is_sentinel();
  if (mord.kind == ModuleOrderKind::pot) {
    if (a.index != b.index)
      return b.index <=> a.index;
    return compare_monomials(a.mono, b.mono, mord.base);
  }
  if (a.index > mord.generator_lpps.size() ||
      b.index > mord.generator_lpps.size())
    throw input_error("signature index beyond the Schreyer generator list");
  auto c = compare_monomials(monomial_mul(a.mono, mord.generator_lpps[a.index - 1]),
                             monomial_mul(b.mono, mord.generator_lpps[b.index - 1]),
                             mord.base);
  if (c != 0)
    return c;
  return b.index <=> a.index;
}

/// Divisibility of module monomials: same index and componentwise division.
inline bool signature_divides(const Signature& a, const Signature& b) {
  return !a.is_sentinel() && a.index == b.index &&
         monomial_divides(a.mono, b.mono);
}

inline Signature signature_mul(const Monomial& t, const Signature& s) {
  if (s.is_sentinel())
    throw input_error("signature_mul on the sentinel signature");
  return {s.index, monomial_mul(t, s.mono)};
}

} // namespace siggb
