#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "monomial.hpp"

namespace siggb {

template <field_element C>
struct Term {
  Monomial mono;
  C coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial: terms strictly descending under its TermOrder, no zero
/// coefficients, no repeated monomials. The zero polynomial has no terms and
/// its lpp is the null token.
template <field_element C>
class Polynomial {
public:
  using coefficient_type = C;
  using term_type = Term<C>;

  Polynomial() = default;
  explicit Polynomial(TermOrder ord) : ord_(ord) {}

  /// Builds a polynomial from terms in any order; duplicates are combined and
  /// zero coefficients dropped.
  static Polynomial from_terms(TermOrder ord, std::vector<term_type> terms) {
    Polynomial p(ord);
    std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
      return compare_monomials(a.mono, b.mono, ord) > 0;
    });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff = p.terms_.back().coeff + t.coeff;
        if (p.terms_.back().coeff.is_zero())
          p.terms_.pop_back();
      } else if (!t.coeff.is_zero()) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  /// Takes terms already strictly descending with nonzero coefficients.
  static Polynomial from_sorted_terms(TermOrder ord,
                                      std::vector<term_type> terms) {
    Polynomial p(ord);
    p.terms_ = std::move(terms);
    assert(p.well_formed());
    return p;
  }

  static Polynomial constant(TermOrder ord, const C& c) {
    Polynomial p(ord);
    if (!c.is_zero())
      p.terms_.push_back({Monomial(ord.nvars), c});
    return p;
  }

  static Polynomial monomial(TermOrder ord, Monomial m, const C& c) {
    Polynomial p(ord);
    if (!c.is_zero())
      p.terms_.push_back({std::move(m), c});
    return p;
  }

  const TermOrder& order() const { return ord_; }
  std::size_t nvars() const { return ord_.nvars; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::span<const term_type> terms() const { return terms_; }

  /// Leading power product; the null token for the zero polynomial.
  Monomial lpp() const {
    return terms_.empty() ? Monomial::null_token(ord_.nvars)
                          : terms_.front().mono;
  }
  const C& lc() const { return terms_.front().coeff; }

  std::uint32_t degree() const {
    std::uint32_t d = 0;
    for (const auto& t : terms_)
      d = std::max(d, t.mono.degree());
    return d;
  }

  /// Structural invariant check, used in debug assertions and tests.
  bool well_formed() const {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].coeff.is_zero() || terms_[i].mono.size() != ord_.nvars)
        return false;
      if (i > 0 &&
          compare_monomials(terms_[i - 1].mono, terms_[i].mono, ord_) <= 0)
        return false;
    }
    return true;
  }

  Polynomial scaled(const C& c) const {
    if (c.is_zero())
      return Polynomial(ord_);
    Polynomial r(ord_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
      r.terms_.push_back({t.mono, t.coeff * c});
    return r;
  }

  Polynomial monic() const {
    return is_zero() ? *this : scaled(lc().inverse());
  }

  Polynomial times_monomial(const Monomial& m) const {
    Polynomial r(ord_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
      r.terms_.push_back({monomial_mul(t.mono, m), t.coeff});
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ord_ == b.ord_ && a.terms_ == b.terms_;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero())
      return b;
    if (b.is_zero())
      return a;
    return poly_axpy(a, -b.lc().one(), Monomial(a.nvars()), b);
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero())
      return a;
    return poly_axpy(a, b.lc().one(), Monomial(a.nvars()), b);
  }
  Polynomial operator-() const { return Polynomial(ord_) - *this; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a.ord_);
    if (a.is_zero() || b.is_zero())
      return r;
    const C minus_one = -a.lc().one();
    for (const auto& t : a.terms_)
      r = poly_axpy(r, minus_one * t.coeff, t.mono, b);
    return r;
  }

  std::string to_string(std::span<const std::string> names = {}) const {
    std::ostringstream os;
    write(os, names);
    return os.str();
  }

  void write(std::ostream& os, std::span<const std::string> names) const {
    if (terms_.empty()) {
      os << "0";
      return;
    }
    bool first = true;
    for (const auto& t : terms_) {
      std::ostringstream c;
      c << t.coeff;
      std::string cs = c.str();
      bool neg = !cs.empty() && cs[0] == '-';
      if (neg)
        cs.erase(0, 1);
      if (first)
        os << (neg ? "-" : "");
      else
        os << (neg ? " - " : " + ");
      first = false;
      bool unit = cs == "1";
      if (t.mono.is_one()) {
        os << cs;
        continue;
      }
      if (!unit)
        os << cs << '*';
      bool first_var = true;
      for (std::size_t i = 0; i < t.mono.size(); ++i) {
        if (t.mono[i] == 0)
          continue;
        if (!first_var)
          os << '*';
        first_var = false;
        if (i < names.size())
          os << names[i];
        else
          os << 'x' << (i + 1);
        if (t.mono[i] > 1)
          os << '^' << t.mono[i];
      }
    }
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    p.write(os, {});
    return os;
  }

  template <field_element D>
  friend Polynomial<D> poly_axpy(const Polynomial<D>&, const D&,
                                 const Monomial&, const Polynomial<D>&);

private:
  TermOrder ord_;
  std::vector<term_type> terms_;
};

namespace detail {
template <field_element C>
bool same_field(const C&, const C&) {
  return true;
}
inline bool same_field(const Zp& a, const Zp& b) {
  return a.modulus() == b.modulus();
}
} // namespace detail

/// f - c*t*h by a single merge pass. The result is well formed.
template <field_element C>
Polynomial<C> poly_axpy(const Polynomial<C>& f, const C& c, const Monomial& t,
                        const Polynomial<C>& h) {
  if (f.ord_ != h.ord_)
    throw config_error("poly_axpy: operands use different term orders");
  if (!f.is_zero() && !h.is_zero() && !detail::same_field(f.lc(), h.lc()))
    throw config_error("poly_axpy: operands over different fields");
  if (c.is_zero() || h.is_zero())
    return f;
  if (!detail::same_field(c, h.lc()))
    throw config_error("poly_axpy: scalar over a different field");

  const TermOrder& ord = f.ord_;
  const C neg = -c;
  Polynomial<C> r(ord);
  r.terms_.reserve(f.terms_.size() + h.terms_.size());

  auto fi = f.terms_.begin(), fe = f.terms_.end();
  auto hi = h.terms_.begin(), he = h.terms_.end();
  bool have_h = hi != he;
  Monomial hm = have_h ? monomial_mul(hi->mono, t) : Monomial();
  while (fi != fe && have_h) {
    auto cmp = compare_monomials(fi->mono, hm, ord);
    if (cmp > 0) {
      r.terms_.push_back(*fi++);
    } else if (cmp < 0) {
      r.terms_.push_back({hm, neg * hi->coeff});
      ++hi;
      have_h = hi != he;
      if (have_h)
        hm = monomial_mul(hi->mono, t);
    } else {
      C s = fi->coeff + neg * hi->coeff;
      if (!s.is_zero())
        r.terms_.push_back({fi->mono, s});
      ++fi;
      ++hi;
      have_h = hi != he;
      if (have_h)
        hm = monomial_mul(hi->mono, t);
    }
  }
  for (; fi != fe; ++fi)
    r.terms_.push_back(*fi);
  for (; hi != he; ++hi)
    r.terms_.push_back({monomial_mul(hi->mono, t), neg * hi->coeff});
  return r;
}

/// Index of some g in `basis` whose lpp divides m (the first in order), or
/// nothing.
template <field_element C>
std::optional<std::size_t> find_divisor(const Monomial& m,
                                        std::span<const Polynomial<C>> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!basis[i].is_zero() && monomial_divides(basis[i].lpp(), m))
      return i;
  return std::nullopt;
}

/// Full (tail) reduction of f by `basis`. No term of the result is divisible
/// by the lpp of any nonzero basis element.
template <field_element C>
Polynomial<C> normal_form(const Polynomial<C>& f,
                          std::span<const Polynomial<C>> basis) {
  const TermOrder ord = f.order();
  auto descending = [&ord](const Monomial& a, const Monomial& b) {
    return compare_monomials(a, b, ord) > 0;
  };
  // Pending terms keyed by monomial; the largest is always at begin().
  std::map<Monomial, C, decltype(descending)> acc(descending);
  for (const auto& t : f.terms())
    acc.emplace(t.mono, t.coeff);
  struct Reducer {
    const Polynomial<C>* poly;
    std::uint32_t mask;
  };
  std::vector<Reducer> reducers;
  for (const auto& g : basis)
    if (!g.is_zero())
      reducers.push_back({&g, support_mask(g.terms().front().mono)});

  std::vector<Term<C>> remainder;
  while (!acc.empty()) {
    auto top = acc.begin();
    Term<C> lead{top->first, top->second};
    acc.erase(top);
    const std::uint32_t lmask = support_mask(lead.mono);
    const Polynomial<C>* found = nullptr;
    for (const auto& r : reducers)
      if (!(r.mask & ~lmask) && monomial_divides(r.poly->terms().front().mono, lead.mono)) {
        found = r.poly;
        break;
      }
    if (!found) {
      remainder.push_back(std::move(lead));
      continue;
    }
    const auto& g = *found;
    const C q = g.lc().is_one() ? lead.coeff : lead.coeff * g.lc().inverse();
    const Monomial t = monomial_quotient(lead.mono, g.terms().front().mono);
    const auto gt = g.terms();
    for (std::size_t k = 1; k < gt.size(); ++k) {
      Monomial m = monomial_mul(t, gt[k].mono);
      C delta = q * gt[k].coeff;
      auto it = acc.find(m);
      if (it == acc.end()) {
        acc.emplace(std::move(m), -delta);
      } else {
        it->second = it->second - delta;
        if (it->second.is_zero())
          acc.erase(it);
      }
    }
  }
  return Polynomial<C>::from_sorted_terms(ord, std::move(remainder));
}

template <field_element C>
Polynomial<C> normal_form(const Polynomial<C>& f,
                          const std::vector<Polynomial<C>>& basis) {
  return normal_form(f, std::span<const Polynomial<C>>(basis));
}

/// Maps an exact polynomial to GF(p).
inline Polynomial<Zp> to_prime_field(const Polynomial<Rational>& q,
                                     const PrimeField& field) {
  std::vector<Term<Zp>> terms;
  terms.reserve(q.size());
  for (const auto& t : q.terms())
    terms.push_back({t.mono, to_prime_field(t.coeff, field)});
  return Polynomial<Zp>::from_terms(q.order(), std::move(terms));
}

/// Same polynomial under another term order.
template <field_element C>
Polynomial<C> with_order(const Polynomial<C>& p, TermOrder ord) {
  if (ord.nvars != p.nvars())
    throw dimension_error("term order variable count mismatch");
  std::vector<Term<C>> terms(p.terms().begin(), p.terms().end());
  return Polynomial<C>::from_terms(ord, std::move(terms));
}

} // namespace siggb
