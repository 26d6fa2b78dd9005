#pragma once

// Signature-based Groebner basis computation driven by the generalized
// rewritable criterion: critical pairs, selection strategies, one-side
// (signature-constrained) top reduction and the main loop.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "criterion.hpp"
#include "labeled.hpp"

namespace siggb {

enum class Strategy { min_signature, min_degree, fifo };

inline std::string_view to_string(Strategy s) {
  switch (s) {
  case Strategy::min_signature: return "sig";
  case Strategy::min_degree: return "degree";
  case Strategy::fifo: return "fifo";
  }
  return "?";
}

inline Strategy parse_strategy(std::string_view s) {
  if (s == "sig")
    return Strategy::min_signature;
  if (s == "degree")
    return Strategy::min_degree;
  if (s == "fifo")
    return Strategy::fifo;
  throw config_error("unknown strategy '" + std::string(s) + "'");
}

struct EngineConfig {
  TermOrderKind term_order = TermOrderKind::grevlex;
  ModuleOrderKind module_order = ModuleOrderKind::schreyer;
  RewriteOrderKind rewrite_order = RewriteOrderKind::gvw;
  Strategy strategy = Strategy::min_signature;
  std::uint32_t characteristic = 32003; // echoed only; the field is the type
  std::uint64_t max_selections = 1'000'000;
  std::uint32_t max_degree = 64;
};

/// Orients the pair so that the left side has the larger scaled signature.
/// Equal scaled signatures put the older member on the left.
template <field_element C>
CriticalPair make_critical_pair(const LabeledPoly<C>& a,
                                const LabeledPoly<C>& b,
                                const ModuleOrder& mord) {
  if (a.poly.is_zero() || b.poly.is_zero())
    throw input_error("critical pair of a zero polynomial");
  const Monomial la = a.poly.lpp(), lb = b.poly.lpp();
  CriticalPair p;
  p.lcm = monomial_lcm(la, lb);
  Monomial ta = monomial_quotient(p.lcm, la);
  Monomial tb = monomial_quotient(p.lcm, lb);
  Signature sa = signature_mul(ta, a.sig);
  Signature sb = signature_mul(tb, b.sig);
  auto c = compare_signatures(sa, sb, mord);
  bool a_left = c > 0 || (c == 0 && a.id < b.id);
  if (a_left) {
    p.left = a.id, p.right = b.id;
    p.t_left = std::move(ta), p.t_right = std::move(tb);
    p.sig_left = std::move(sa), p.sig_right = std::move(sb);
  } else {
    p.left = b.id, p.right = a.id;
    p.t_left = std::move(tb), p.t_right = std::move(ta);
    p.sig_left = std::move(sb), p.sig_right = std::move(sa);
  }
  return p;
}

/// Pending pairs, popped according to the selection strategy. Ties are
/// broken by (sig_left, left id, right id).
class PairQueue {
public:
  PairQueue(Strategy strategy, const ModuleOrder& mord)
      : strategy_(strategy), mord_(&mord) {}

  void push(CriticalPair p) {
    p.seq = next_seq_++;
    heap_.push_back(std::move(p));
    std::push_heap(heap_.begin(), heap_.end(), after());
  }

  CriticalPair pop() {
    if (heap_.empty())
      throw std::out_of_range("pop from empty pair queue");
    std::pop_heap(heap_.begin(), heap_.end(), after());
    CriticalPair p = std::move(heap_.back());
    heap_.pop_back();
    return p;
  }

  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }
  std::uint64_t pushed() const { return next_seq_; }
  Strategy strategy() const { return strategy_; }

  /// True if `a` should be popped before `b`.
  bool precedes(const CriticalPair& a, const CriticalPair& b) const {
    if (strategy_ == Strategy::fifo)
      return a.seq < b.seq;
    if (strategy_ == Strategy::min_degree && a.lcm.degree() != b.lcm.degree())
      return a.lcm.degree() < b.lcm.degree();
    auto c = compare_signatures(a.sig_left, b.sig_left, *mord_);
    if (c != 0)
      return c < 0;
    if (a.left != b.left)
      return a.left < b.left;
    if (a.right != b.right)
      return a.right < b.right;
    return a.seq < b.seq;
  }

private:
  // Heap comparator: the heap top is the element that precedes all others.
  struct After {
    const PairQueue* q;
    bool operator()(const CriticalPair& a, const CriticalPair& b) const {
      return q->precedes(b, a);
    }
  };
  After after() const { return After{this}; }

  Strategy strategy_;
  const ModuleOrder* mord_;
  std::vector<CriticalPair> heap_;
  std::uint64_t next_seq_ = 0;
};

/// S-polynomial t_f f - c t_g g with c = lc(f)/lc(g), carrying sig_left.
template <field_element C>
std::pair<Polynomial<C>, Signature> spoly(const CriticalPair& p,
                                          const Basis<C>& basis) {
  const auto& f = basis.member(p.left).poly;
  const auto& g = basis.member(p.right).poly;
  const C c = f.lc() * g.lc().inverse();
  return {poly_axpy(f.times_monomial(p.t_left), c, p.t_right, g), p.sig_left};
}

/// Top-reduces `p` by members whose scaled signature lies strictly below
/// `sig`. Among eligible reducers the smallest scaled signature wins, then
/// the smallest id. The signature is carried through unchanged.
template <field_element C>
LabeledPoly<C> one_side_reduce(Polynomial<C> p, const Signature& sig,
                               const Basis<C>& basis) {
  if (sig.is_sentinel())
    throw input_error("one_side_reduce with sentinel signature");
  const ModuleOrder& mord = basis.module_order();
  const auto members = basis.members();
  while (!p.is_zero()) {
    const Monomial lm = p.lpp();
    const LabeledPoly<C>* best = nullptr;
    Signature best_sig;
    Monomial best_t;
    for (const auto& h : members) {
      if (h.is_syzygy)
        continue;
      const Monomial& lh = h.poly.terms().front().mono;
      if (!monomial_divides(lh, lm))
        continue;
      Monomial t = monomial_quotient(lm, lh);
      Signature s = signature_mul(t, h.sig);
      if (compare_signatures(s, sig, mord) >= 0)
        continue;
      if (!best || compare_signatures(s, best_sig, mord) < 0) {
        best = &h;
        best_sig = std::move(s);
        best_t = std::move(t);
      }
    }
    if (!best)
      break;
    p = poly_axpy(p, p.lc() * best->poly.lc().inverse(), best_t, best->poly);
    assert(p.is_zero() || compare_monomials(p.lpp(), lm, mord.base) < 0);
  }
  LabeledPoly<C> out;
  out.id = basis.size();
  out.is_syzygy = p.is_zero();
  out.poly = std::move(p);
  out.sig = sig;
  return out;
}

enum class Outcome { complete, capped, failed };

inline std::string_view to_string(Outcome o) {
  switch (o) {
  case Outcome::complete: return "complete";
  case Outcome::capped: return "capped";
  case Outcome::failed: return "failed";
  }
  return "?";
}

template <field_element C>
struct AgcResult {
  Basis<C> basis;
  RejectionStats stats;
  Outcome outcome = Outcome::complete;
  std::uint64_t pairs_generated = 0;
  std::uint64_t selections = 0;
  std::string cap_reason;
};

/// Called once per popped pair, before the verdict is acted upon.
template <field_element C>
using PairObserver =
    std::function<void(const CriticalPair&, const Basis<C>&, PairVerdict)>;

namespace detail {
inline ModuleOrder build_module_order(ModuleOrderKind kind, TermOrder base,
                                      std::vector<Monomial> lpps) {
  return kind == ModuleOrderKind::pot ? ModuleOrder::pot(base)
                                      : ModuleOrder::schreyer(base, std::move(lpps));
}
} // namespace detail

/// Runs the criterion-driven signature algorithm on `inputs`. Throws
/// admissibility_error if a reduction result fails to rank below its source.
template <field_element C>
AgcResult<C> agc_run(std::vector<Polynomial<C>> inputs, const EngineConfig& cfg,
                     const PairObserver<C>& observer = {}) {
  if (inputs.empty())
    throw input_error("no input polynomials");
  if (cfg.max_selections == 0 || cfg.max_degree == 0)
    throw config_error("safety caps must be positive");
  const TermOrder ord{cfg.term_order, inputs.front().nvars()};
  std::vector<Monomial> lpps;
  for (auto& f : inputs) {
    if (f.nvars() != ord.nvars)
      throw dimension_error("inputs over different variable counts");
    if (!(f.order() == ord))
      f = with_order(f, ord);
    f = f.monic();
    lpps.push_back(f.lpp());
  }
  const RewriteOrder rord{cfg.rewrite_order, ord};

  AgcResult<C> res{
      init_basis(std::move(inputs),
                 detail::build_module_order(cfg.module_order, ord, std::move(lpps))),
      {}, Outcome::complete, 0, 0, {}};
  Basis<C>& basis = res.basis;
  const ModuleOrder& mord = basis.module_order();
  const auto m = static_cast<std::uint32_t>(basis.inputs().size());

  PairQueue queue(cfg.strategy, mord);
  for (std::size_t j = 1; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      queue.push(make_critical_pair(basis.member(i), basis.member(j), mord));

  while (!queue.empty()) {
    if (res.selections >= cfg.max_selections) {
      res.outcome = Outcome::capped;
      res.cap_reason = "max pair selections reached";
      break;
    }
    CriticalPair p = queue.pop();
    ++res.selections;
    if (p.lcm.degree() > cfg.max_degree) {
      res.outcome = Outcome::capped;
      res.cap_reason = "pair degree " + std::to_string(p.lcm.degree()) +
                       " exceeds max degree";
      break;
    }

    PairVerdict verdict = classify_pair(p, basis, rord);
    if (observer)
      observer(p, basis, verdict);
    ++res.stats.seen;
    switch (verdict) {
    case PairVerdict::not_regular: ++res.stats.rejected_not_regular; continue;
    case PairVerdict::rewritable_left: ++res.stats.rejected_rewritable_left; continue;
    case PairVerdict::rewritable_right: ++res.stats.rejected_rewritable_right; continue;
    case PairVerdict::reduce: break;
    }

    auto [s, sig] = spoly(p, basis);
    LabeledPoly<C> h = one_side_reduce(std::move(s), sig, basis);
    ++res.stats.reduced;
    const std::size_t id = basis.append(h.poly.monic(), h.sig);
    assert_admissible(basis.member(id), basis.member(p.left), rord);
    if (basis.member(id).is_syzygy) {
      ++res.stats.reduced_to_zero;
      continue;
    }
    for (std::size_t k = 0; k < id; ++k)
      if (!basis.member(k).is_syzygy)
        queue.push(make_critical_pair(basis.member(k), basis.member(id), mord));
    for (std::uint32_t i = 1; i <= m; ++i)
      if (auto ss = syzygy_signature(basis.member(id), i, basis.inputs(), mord))
        basis.add_syzygy_signature(*ss);
  }
  res.pairs_generated = queue.pushed();
  assert(res.stats.consistent());
  return res;
}

} // namespace siggb
