#pragma once

// Independent checks for engine output: a criterion-free Buchberger oracle,
// the Buchberger S-polynomial test, reduced bases for set comparison, a
// randomized labeled-basis covering check, and standalone versions of the F5
// and GVW criteria for subsumption replay.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "engine.hpp"

namespace siggb {

struct VerificationReport {
  std::uint64_t attempted = 0;
  std::uint64_t passed = 0;
  std::vector<std::string> diagnostics;

  bool ok() const { return attempted == passed; }
};

/// Classic S-polynomial of two nonzero polynomials, monic-normalized sides.
template <field_element C>
Polynomial<C> classic_spoly(const Polynomial<C>& f, const Polynomial<C>& g) {
  const Monomial l = monomial_lcm(f.lpp(), g.lpp());
  Polynomial<C> a = f.times_monomial(monomial_quotient(l, f.lpp()));
  return poly_axpy(a, f.lc() * g.lc().inverse(), monomial_quotient(l, g.lpp()),
                   g);
}

/// Textbook Buchberger with no pair criteria at all.
template <field_element C>
std::vector<Polynomial<C>> buchberger(const std::vector<Polynomial<C>>& F,
                                      TermOrder ord) {
  std::vector<Polynomial<C>> G;
  for (const auto& f : F) {
    if (f.is_zero())
      throw input_error("buchberger: zero input");
    G.push_back(with_order(f, ord).monic());
  }
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    Polynomial<C> r = normal_form(classic_spoly(G[i], G[j]), G);
    if (r.is_zero())
      continue;
    G.push_back(r.monic());
    for (std::size_t k = 0; k + 1 < G.size(); ++k)
      pairs.emplace_back(k, G.size() - 1);
  }
  return G;
}

/// Buchberger criterion: every S-polynomial reduces to zero.
template <field_element C>
bool is_groebner(const std::vector<Polynomial<C>>& G) {
  std::vector<Polynomial<C>> nz;
  for (const auto& g : G)
    if (!g.is_zero())
      nz.push_back(g);
  for (std::size_t j = 1; j < nz.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!normal_form(classic_spoly(nz[i], nz[j]), nz).is_zero())
        return false;
  return true;
}

/// Monic interreduction to a fixpoint, sorted by descending lpp. On a
/// Groebner basis this is the unique reduced basis.
template <field_element C>
std::vector<Polynomial<C>> reduce_basis(const std::vector<Polynomial<C>>& G) {
  std::vector<Polynomial<C>> work;
  for (const auto& g : G)
    if (!g.is_zero())
      work.push_back(g.monic());
  if (work.empty())
    return work;
  const TermOrder ord = work.front().order();
  auto by_lpp = [&](const auto& a, const auto& b) {
    return compare_monomials(a.lpp(), b.lpp(), ord) < 0;
  };
  // Small leading terms first so redundant elements vanish early.
  std::stable_sort(work.begin(), work.end(), by_lpp);
  std::vector<Polynomial<C>> others;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < work.size();) {
      others.clear();
      for (std::size_t k = 0; k < work.size(); ++k)
        if (k != i)
          others.push_back(work[k]);
      Polynomial<C> r = normal_form(work[i], others);
      if (r == work[i]) {
        ++i;
        continue;
      }
      changed = true;
      if (r.is_zero()) {
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        work[i] = r.monic();
        ++i;
      }
    }
  }
  std::sort(work.begin(), work.end(), [&](const auto& a, const auto& b) { return by_lpp(b, a); });
  return work;
}

namespace detail {
template <field_element C>
C small_constant(const C& one, std::int64_t k) {
  C acc = one.zero(), base = one;
  bool neg = k < 0;
  std::uint64_t n = neg ? std::uint64_t(-k) : std::uint64_t(k);
  while (n) {
    if (n & 1)
      acc = acc + base;
    base = base + base;
    n >>= 1;
  }
  return neg ? -acc : acc;
}

inline Monomial random_monomial(std::size_t nvars, unsigned max_degree,
                                std::mt19937_64& rng) {
  Monomial m(nvars);
  unsigned d = std::uniform_int_distribution<unsigned>(0, max_degree)(rng);
  std::uniform_int_distribution<std::size_t> pick(0, nvars - 1);
  for (unsigned k = 0; k < d; ++k) {
    std::size_t v = pick(rng);
    m.set(v, m[v] + 1u);
  }
  return m;
}
} // namespace detail

/// Samples sparse module vectors u (degree <= 4, at most 3 nonzero
/// components), forms f = u.F and checks that some nonzero member g has
/// lpp(g) | lpp(f) and (lpp(f)/lpp(g)) sig(g) <= lpp(u).
template <field_element C>
VerificationReport check_labeled_gb(const Basis<C>& G,
                                    const std::vector<Polynomial<C>>& F,
                                    std::uint64_t samples, std::uint64_t seed,
                                    const ModuleOrder& mord) {
  VerificationReport rep;
  if (F.empty())
    return rep;
  std::mt19937_64 rng(seed);
  const std::size_t m = F.size();
  const std::size_t n = mord.base.nvars;
  const C one = F.front().lc().one();
  std::vector<Polynomial<C>> Fo;
  for (const auto& f : F)
    Fo.push_back(with_order(f, mord.base));

  for (std::uint64_t s = 0; s < samples; ++s) {
    std::size_t ncomp = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(3, m))(rng);
    std::vector<std::size_t> idx(m);
    for (std::size_t i = 0; i < m; ++i)
      idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(ncomp);

    Polynomial<C> f(mord.base);
    Signature lead = Signature::sentinel(n);
    std::ostringstream desc;
    for (std::size_t i : idx) {
      std::size_t nterms = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
      std::vector<Term<C>> terms;
      for (std::size_t k = 0; k < nterms; ++k)
        terms.push_back({detail::random_monomial(n, 4, rng),
                         detail::small_constant(
                             one, std::uniform_int_distribution<int>(1, 97)(rng))});
      auto p = Polynomial<C>::from_terms(mord.base, std::move(terms));
      if (p.is_zero())
        continue;
      desc << " + (" << p << ")*e" << (i + 1);
      Signature cand{static_cast<std::uint32_t>(i + 1), p.lpp()};
      if (compare_signatures(cand, lead, mord) > 0)
        lead = cand;
      f = f + p * Fo[i];
    }
    if (f.is_zero())
      continue;
    ++rep.attempted;
    const Monomial lf = f.lpp();
    bool covered = false;
    for (const auto& g : G.members()) {
      if (g.is_syzygy || !monomial_divides(g.poly.lpp(), lf))
        continue;
      Signature ts = signature_mul(monomial_quotient(lf, g.poly.lpp()), g.sig);
      if (compare_signatures(ts, lead, mord) <= 0) {
        covered = true;
        break;
      }
    }
    if (covered)
      ++rep.passed;
    else
      rep.diagnostics.push_back("uncovered sample u =" + desc.str() +
                                ", lpp(f) = " + [&] {
                                  std::ostringstream o;
                                  o << lf;
                                  return o.str();
                                }());
  }
  return rep;
}

/// F5 syzygy criterion: a nonzero g of higher generator index (e_i > e_j
/// under POT means i < j) with lpp(g) | t x^a.
template <field_element C>
bool f5_syzygy_reject(const Monomial& t, const LabeledPoly<C>& f,
                      const Basis<C>& B) {
  if (B.module_order().kind != ModuleOrderKind::pot)
    throw config_error("F5 syzygy criterion requires the POT module order");
  const Monomial tx = monomial_mul(t, f.sig.mono);
  for (const auto& g : B.members())
    if (!g.is_syzygy && g.sig.index > f.sig.index &&
        monomial_divides(g.poly.lpp(), tx))
      return true;
  return false;
}

/// F5 rewritten criterion: a later-inserted g whose signature divides t sig(f).
template <field_element C>
bool f5_rewritten_reject(const Monomial& t, const LabeledPoly<C>& f,
                         const Basis<C>& B) {
  if (B.module_order().kind != ModuleOrderKind::pot)
    throw config_error("F5 rewritten criterion requires the POT module order");
  const Signature ts = signature_mul(t, f.sig);
  for (const auto& g : B.members())
    if (g.id > f.id && signature_divides(g.sig, ts))
      return true;
  return false;
}

/// GVW first criterion: some syzygy signature divides t sig(f).
template <field_element C>
bool gvw_first_reject(const Monomial& t, const LabeledPoly<C>& f,
                      const Basis<C>& B) {
  const Signature ts = signature_mul(t, f.sig);
  if (B.syzygy_divides(ts))
    return true;
  for (const auto& g : B.members())
    if (g.is_syzygy && signature_divides(g.sig, ts))
      return true;
  return false;
}

} // namespace siggb
