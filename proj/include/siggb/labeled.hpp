#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"
#include "signature.hpp"

namespace siggb {

/// f^[u] stored as f and lpp(u). The full module vector u is never kept.
template <field_element C>
struct LabeledPoly {
  std::size_t id = 0;
  Polynomial<C> poly;
  Signature sig;
  bool is_syzygy = false;
};

/// The growing set G: labeled polynomials in insertion order plus a
/// divisibility-pruned set of known syzygy signatures.
template <field_element C>
class Basis {
public:
  Basis(std::vector<Polynomial<C>> inputs, ModuleOrder mord)
      : inputs_(std::move(inputs)), mord_(std::move(mord)) {}

  std::span<const LabeledPoly<C>> members() const { return members_; }
  const LabeledPoly<C>& member(std::size_t id) const { return members_[id]; }
  std::size_t size() const { return members_.size(); }

  std::span<const Signature> syzygy_sigs() const { return syzygy_sigs_; }
  std::span<const Polynomial<C>> inputs() const { return inputs_; }
  const ModuleOrder& module_order() const { return mord_; }
  std::size_t nvars() const { return mord_.base.nvars; }

  std::size_t nonzero_count() const {
    return static_cast<std::size_t>(std::count_if(
        members_.begin(), members_.end(),
        [](const auto& m) { return !m.is_syzygy; }));
  }

  /// Appends a labeled polynomial and returns its id. Zero polynomials go
  /// through record_zero_reduction so the syzygy set stays in sync.
  std::size_t append(Polynomial<C> poly, Signature sig) {
    if (sig.is_sentinel())
      throw input_error("labeled polynomial with sentinel signature");
    if (poly.is_zero())
      return record_zero_reduction(sig);
    std::size_t id = members_.size();
    members_.push_back({id, std::move(poly), std::move(sig), false});
    return id;
  }

  /// Inserts `sig` into the syzygy set (keeping it an antichain) and appends
  /// the zero member 0^[sig]. Returns the new member's id.
  std::size_t record_zero_reduction(const Signature& sig) {
    if (sig.is_sentinel())
      throw input_error("record_zero_reduction on sentinel signature");
    add_syzygy_signature(sig);
    std::size_t id = members_.size();
    members_.push_back({id, Polynomial<C>(mord_.base), sig, true});
    return id;
  }

  /// Adds a syzygy signature without creating a member. Returns false when an
  /// existing entry already divides it.
  bool add_syzygy_signature(const Signature& sig) {
    for (const auto& s : syzygy_sigs_)
      if (signature_divides(s, sig))
        return false;
    std::erase_if(syzygy_sigs_,
                  [&](const Signature& s) { return signature_divides(sig, s); });
    syzygy_sigs_.push_back(sig);
    return true;
  }

  bool syzygy_divides(const Signature& sig) const {
    return std::any_of(syzygy_sigs_.begin(), syzygy_sigs_.end(),
                       [&](const auto& s) { return signature_divides(s, sig); });
  }

  std::vector<Polynomial<C>> nonzero_polys() const {
    std::vector<Polynomial<C>> out;
    for (const auto& m : members_)
      if (!m.is_syzygy)
        out.push_back(m.poly);
    return out;
  }

private:
  std::vector<Polynomial<C>> inputs_;
  ModuleOrder mord_;
  std::vector<LabeledPoly<C>> members_;
  std::vector<Signature> syzygy_sigs_;
};

/// Signature of the principal syzygy 0^[h e_i - f_i w], where w is h's
/// representation. The two candidate leading terms are lpp(h) e_i and
/// lpp(f_i) lpp(w); when they coincide the leading coefficient may cancel and
/// the true signature is unknown, so nothing is returned.
template <field_element C>
std::optional<Signature> syzygy_signature(const LabeledPoly<C>& h,
                                          std::uint32_t i,
                                          std::span<const Polynomial<C>> inputs,
                                          const ModuleOrder& mord) {
  if (i < 1 || i > inputs.size())
    throw input_error("generator index out of range");
  if (h.poly.is_zero())
    throw input_error("syzygy_signature of a zero polynomial");
  Signature a{i, h.poly.lpp()};
  Signature b = signature_mul(inputs[i - 1].lpp(), h.sig);
  if (a == b)
    return std::nullopt;
  return compare_signatures(a, b, mord) > 0 ? a : b;
}

/// G = {f_i^[e_i]} plus the signatures of 0^[f_j e_i - f_i e_j], i < j.
template <field_element C>
Basis<C> init_basis(std::vector<Polynomial<C>> inputs, ModuleOrder mord) {
  if (inputs.empty())
    throw input_error("no input polynomials");
  for (std::size_t i = 0; i < inputs.size(); ++i)
    if (inputs[i].is_zero())
      throw input_error("input polynomial " + std::to_string(i + 1) +
                        " is zero");
  const std::size_t n = mord.base.nvars;
  Basis<C> basis(std::move(inputs), std::move(mord));
  const auto ins = basis.inputs();
  for (std::size_t i = 0; i < ins.size(); ++i)
    basis.append(ins[i], Signature::unit(static_cast<std::uint32_t>(i + 1), n));
  for (std::size_t j = 1; j < ins.size(); ++j) {
    const auto& fj = basis.member(j);
    for (std::size_t i = 0; i < j; ++i)
      if (auto s = syzygy_signature(fj, static_cast<std::uint32_t>(i + 1), ins,
                                    basis.module_order()))
        basis.add_syzygy_signature(*s);
  }
  return basis;
}

} // namespace siggb
