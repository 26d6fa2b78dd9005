#pragma once

// The generalized rewritable criterion. A scaled labeled polynomial t*f^[u]
// is gen-rewritable by G when some g^[v] in G has lpp(v) | lpp(t u) and
// g^[v] < f^[u] under a pluggable partial order. Known syzygy signatures act
// as members below every nonzero polynomial.

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "labeled.hpp"

namespace siggb {

enum class RewriteOrderKind {
  f5,  ///< syzygies lowest, otherwise later insertion is smaller
  gvw, ///< compare lpp after scaling both to the lcm of the signatures
  /// Test-only, not admissible: syzygies lowest, otherwise *earlier*
  /// insertion is smaller.
  inverted_insertion,
};

inline std::string_view to_string(RewriteOrderKind k) {
  switch (k) {
  case RewriteOrderKind::f5: return "f5";
  case RewriteOrderKind::gvw: return "gvw";
  case RewriteOrderKind::inverted_insertion: return "inverted";
  }
  return "?";
}

inline RewriteOrderKind parse_rewrite_order(std::string_view s) {
  if (s == "f5")
    return RewriteOrderKind::f5;
  if (s == "gvw")
    return RewriteOrderKind::gvw;
  throw config_error("unknown rewrite order '" + std::string(s) + "'");
}

struct RewriteOrder {
  RewriteOrderKind kind = RewriteOrderKind::gvw;
  TermOrder base;
};

enum class PartialOrdering { less, greater, incomparable };

/// Where the criterion found its witness.
struct Witness {
  enum class Source { syzygy_set, member } source;
  Signature sig;
  std::size_t member_id = 0; // valid when source == member
};

struct RejectionStats {
  std::uint64_t seen = 0;
  std::uint64_t rejected_not_regular = 0;
  std::uint64_t rejected_rewritable_left = 0;
  std::uint64_t rejected_rewritable_right = 0;
  std::uint64_t reduced = 0;         ///< includes reductions to zero
  std::uint64_t reduced_to_zero = 0; ///< subset of `reduced`

  bool consistent() const {
    return seen == rejected_not_regular + rejected_rewritable_left +
                       rejected_rewritable_right + reduced &&
           reduced_to_zero <= reduced;
  }
};

template <field_element C>
PartialOrdering rewrite_compare(const LabeledPoly<C>& a,
                                const LabeledPoly<C>& b,
                                const RewriteOrder& ord) {
  if (a.id == b.id)
    return PartialOrdering::incomparable;
  // Later insertion ranks lower (f5) or higher (inverted).
  auto by_id = [&](bool later_is_lower) {
    bool a_lower = later_is_lower ? a.id > b.id : a.id < b.id;
    return a_lower ? PartialOrdering::less : PartialOrdering::greater;
  };
  switch (ord.kind) {
  case RewriteOrderKind::f5:
  case RewriteOrderKind::inverted_insertion: {
    if (a.is_syzygy != b.is_syzygy)
      return a.is_syzygy ? PartialOrdering::less : PartialOrdering::greater;
    return by_id(ord.kind == RewriteOrderKind::f5);
  }
  case RewriteOrderKind::gvw: {
    if (a.sig.index != b.sig.index)
      return PartialOrdering::incomparable;
    const Monomial l = monomial_lcm(a.sig.mono, b.sig.mono);
    // lpp(0) is the null token, which monomial_mul propagates.
    const Monomial la =
        monomial_mul(monomial_quotient(l, a.sig.mono), a.poly.lpp());
    const Monomial lb =
        monomial_mul(monomial_quotient(l, b.sig.mono), b.poly.lpp());
    auto c = compare_monomials(la, lb, ord.base);
    if (c < 0)
      return PartialOrdering::less;
    if (c > 0)
      return PartialOrdering::greater;
    return by_id(true);
  }
  }
  return PartialOrdering::incomparable;
}

/// Is t*f gen-rewritable by `basis`? Syzygy signatures are scanned first,
/// then members from newest to oldest.
template <field_element C>
std::optional<Witness> gen_rewritable(const Monomial& t,
                                      const LabeledPoly<C>& f,
                                      const Basis<C>& basis,
                                      const RewriteOrder& ord) {
  if (f.poly.is_zero())
    throw input_error("gen_rewritable on a syzygy polynomial");
  const Signature ts = signature_mul(t, f.sig);
  for (const auto& s : basis.syzygy_sigs())
    if (signature_divides(s, ts))
      return Witness{Witness::Source::syzygy_set, s, 0};
  const auto members = basis.members();
  for (std::size_t k = members.size(); k-- > 0;) {
    const auto& g = members[k];
    if (signature_divides(g.sig, ts) &&
        rewrite_compare(g, f, ord) == PartialOrdering::less)
      return Witness{Witness::Source::member, g.sig, g.id};
  }
  return std::nullopt;
}

/// A critical pair (t_f, f, t_g, g). The left side carries the larger scaled
/// signature.
struct CriticalPair {
  std::size_t left = 0;
  std::size_t right = 0;
  Monomial t_left;
  Monomial t_right;
  Monomial lcm;
  Signature sig_left;
  Signature sig_right;
  std::uint64_t seq = 0; ///< creation ordinal

  bool regular() const { return !(sig_left == sig_right); }
};

enum class PairVerdict {
  reduce,
  not_regular,
  rewritable_left,
  rewritable_right,
};

template <field_element C>
PairVerdict classify_pair(const CriticalPair& p, const Basis<C>& basis,
                          const RewriteOrder& ord) {
  if (!p.regular())
    return PairVerdict::not_regular;
  if (gen_rewritable(p.t_left, basis.member(p.left), basis, ord))
    return PairVerdict::rewritable_left;
  if (gen_rewritable(p.t_right, basis.member(p.right), basis, ord))
    return PairVerdict::rewritable_right;
  return PairVerdict::reduce;
}

/// True when the generalized criterion rejects `p`. Bumps the matching
/// rejection counter; a pair that survives is counted by the caller once it
/// has been reduced.
template <field_element C>
bool pair_rejected(const CriticalPair& p, const Basis<C>& basis,
                   const RewriteOrder& ord, RejectionStats& stats) {
  PairVerdict v = classify_pair(p, basis, ord);
  switch (v) {
  case PairVerdict::not_regular: ++stats.rejected_not_regular; break;
  case PairVerdict::rewritable_left: ++stats.rejected_rewritable_left; break;
  case PairVerdict::rewritable_right: ++stats.rejected_rewritable_right; break;
  case PairVerdict::reduce: return false;
  }
  ++stats.seen;
  return true;
}

class admissibility_error : public std::logic_error {
public:
  admissibility_error(std::size_t new_id, std::size_t source_id,
                      const std::string& what)
      : std::logic_error(what), new_id(new_id), source_id(source_id) {}

  std::size_t new_id;
  std::size_t source_id;
};

/// The freshly reduced h^[w] must rank strictly below the pair's left side
/// f^[u]. Vacuous when the order cannot compare the two.
template <field_element C>
void assert_admissible(const LabeledPoly<C>& h, const LabeledPoly<C>& source,
                       const RewriteOrder& ord) {
  auto c = rewrite_compare(h, source, ord);
  if (c == PartialOrdering::greater) {
    std::ostringstream os;
    os << "admissibility violated under " << to_string(ord.kind)
       << " order: new member #" << h.id << " (sig " << h.sig
       << ") does not rank below source #" << source.id << " (sig "
       << source.sig << ")";
    throw admissibility_error(h.id, source.id, os.str());
  }
}

} // namespace siggb
