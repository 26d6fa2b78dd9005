#include <random>

#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace siggb;
using namespace siggb::test;

namespace {

const RewriteOrder kF5{RewriteOrderKind::f5, kGrevlex3};
const RewriteOrder kGvw{RewriteOrderKind::gvw, kGrevlex3};
const RewriteOrder kInverted{RewriteOrderKind::inverted_insertion, kGrevlex3};

LabeledPoly<Rational> labeled(std::size_t id, Monomial lead, Signature sig) {
  return {id, Polynomial<Rational>::monomial(kGrevlex3, lead, Rational(1)), sig, false};
}

LabeledPoly<Rational> zero_member(std::size_t id, Signature sig) {
  return {id, Polynomial<Rational>(kGrevlex3), sig, true};
}

PartialOrdering flip(PartialOrdering o) {
  switch (o) {
  case PartialOrdering::less: return PartialOrdering::greater;
  case PartialOrdering::greater: return PartialOrdering::less;
  default: return o;
  }
}

// Rebuilds the basis state after the first `k` members of `full`.
Basis<Zp> prefix_basis(const Basis<Zp>& full, std::size_t k) {
  std::vector<Polynomial<Zp>> ins(full.inputs().begin(), full.inputs().end());
  Basis<Zp> B(ins, full.module_order());
  const auto m = static_cast<std::uint32_t>(ins.size());
  for (std::size_t id = 0; id < k; ++id) {
    const auto& g = full.member(id);
    B.append(g.poly, g.sig);
    if (g.is_syzygy)
      continue;
    const std::uint32_t upto = id < m ? static_cast<std::uint32_t>(id) : m;
    for (std::uint32_t i = 1; i <= upto; ++i)
      if (auto s = syzygy_signature(B.member(id), i, B.inputs(), B.module_order()))
        B.add_syzygy_signature(*s);
  }
  return B;
}

} // namespace

TEST_CASE("rewrite_compare under the f5 order", "[criterion]") {
  auto a = labeled(0, xyz(1, 0, 0), Signature::unit(1, 3));
  auto b = labeled(5, xyz(0, 2, 0), {1, xyz(0, 1, 0)});
  CHECK(rewrite_compare(a, b, kF5) == PartialOrdering::greater);
  CHECK(rewrite_compare(b, a, kF5) == PartialOrdering::less);
  CHECK(rewrite_compare(a, a, kF5) == PartialOrdering::incomparable);

  // A zero member is below any nonzero one regardless of insertion time.
  auto z = zero_member(1, {2, xyz(1, 0, 0)});
  CHECK(rewrite_compare(z, b, kF5) == PartialOrdering::less);
  CHECK(rewrite_compare(b, z, kF5) == PartialOrdering::greater);
}

TEST_CASE("rewrite_compare under the gvw order", "[criterion]") {
  auto f = labeled(2, xyz(1, 0, 0), {1, xyz(0, 1, 0)});
  auto z = zero_member(4, {1, xyz(0, 0, 1)});
  CHECK(rewrite_compare(f, z, kGvw) == PartialOrdering::greater);
  CHECK(rewrite_compare(z, f, kGvw) == PartialOrdering::less);

  auto other = labeled(6, xyz(1, 0, 0), {2, xyz(0, 1, 0)});
  CHECK(rewrite_compare(f, other, kGvw) == PartialOrdering::incomparable);

  // Equal scaled lpps: the later member is smaller.
  auto a = labeled(3, xyz(0, 1, 0), {1, xyz(1, 0, 0)});
  auto b = labeled(7, xyz(0, 1, 0), {1, xyz(1, 0, 0)});
  CHECK(rewrite_compare(b, a, kGvw) == PartialOrdering::less);
  CHECK(rewrite_compare(a, b, kGvw) == PartialOrdering::greater);

  // L = xy: y * y^2 = y^3 against x * xz = x^2 z, and x^2 z < y^3 in grevlex.
  auto c = labeled(1, xyz(0, 2, 0), {1, xyz(1, 0, 0)});
  auto d = labeled(9, xyz(1, 0, 1), {1, xyz(0, 1, 0)});
  CHECK(rewrite_compare(d, c, kGvw) == PartialOrdering::less);
}

TEST_CASE("gen_rewritable", "[criterion]") {
  auto B = init_basis(example_ideal(), ModuleOrder::pot(kGrevlex3));
  const auto& f1 = B.member(0);

  auto w = gen_rewritable(xyz(1, 0, 1), f1, B, kF5);
  REQUIRE(w);
  CHECK(w->source == Witness::Source::syzygy_set);
  CHECK(w->sig == Signature{1, xyz(1, 0, 1)});

  // Only f1 itself divides y e1, and a member never rewrites itself.
  CHECK_FALSE(gen_rewritable(xyz(0, 1, 0), f1, B, kF5));
  CHECK_FALSE(gen_rewritable(xyz(0, 1, 0), f1, B, kGvw));

  auto C = B;
  C.append(parse_poly("x,y,z", "x^4 - z"), {1, xyz(0, 1, 0)});
  auto wf = gen_rewritable(xyz(0, 1, 0), C.member(0), C, kF5);
  REQUIRE(wf);
  CHECK(wf->source == Witness::Source::member);
  CHECK(wf->member_id == 3);
  // Under gvw the newcomer scales to x^4, above y * yz = y^2 z.
  CHECK_FALSE(gen_rewritable(xyz(0, 1, 0), C.member(0), C, kGvw));

  auto D = B;
  D.append(parse_poly("x,y,z", "y^2 - z^2"), {1, xyz(0, 1, 0)});
  auto wg = gen_rewritable(xyz(0, 1, 0), D.member(0), D, kGvw);
  REQUIRE(wg);
  CHECK(wg->member_id == 3);

  CHECK_THROWS_AS(gen_rewritable(xyz(0, 0, 0), zero_member(0, {1, xyz(1, 0, 0)}), B, kF5),
                  input_error);
}

TEST_CASE("pair_rejected", "[criterion]") {
  auto mord = ModuleOrder::pot(kGrevlex3);
  auto F = example_ideal();
  Basis<Rational> B(F, mord);
  B.append(F[0], Signature::unit(1, 3));
  B.append(F[1], Signature::unit(2, 3));

  RejectionStats stats;
  CriticalPair same;
  same.left = 0, same.right = 1;
  same.t_left = same.t_right = xyz(0, 0, 0);
  same.sig_left = same.sig_right = Signature::unit(1, 3);
  CHECK(pair_rejected(same, B, kF5, stats));
  CHECK(stats.rejected_not_regular == 1);
  CHECK(stats.seen == 1);

  // Without any syzygy signatures or later members the pair survives.
  auto p = make_critical_pair(B.member(0), B.member(1), mord);
  CHECK(p.sig_left == Signature{1, xyz(1, 0, 0)});
  CHECK_FALSE(pair_rejected(p, B, kF5, stats));
  CHECK_FALSE(pair_rejected(p, B, kGvw, stats));
  CHECK(stats.seen == 1);

  // A later member at x e1 rewrites the left side under f5.
  B.append(parse_poly("x,y,z", "x^2 - y^2"), {1, xyz(1, 0, 0)});
  CHECK(pair_rejected(p, B, kF5, stats));
  CHECK(stats.rejected_rewritable_left == 1);

  // A syzygy at y e2 rewrites the right side.
  Basis<Rational> C(F, mord);
  C.append(F[0], Signature::unit(1, 3));
  C.append(F[1], Signature::unit(2, 3));
  C.add_syzygy_signature({2, xyz(0, 1, 0)});
  CHECK(classify_pair(p, C, kGvw) == PairVerdict::rewritable_right);
  CHECK(classify_pair(p, C, kF5) == PairVerdict::rewritable_right);
}

TEST_CASE("assert_admissible", "[criterion]") {
  auto src = labeled(2, xyz(0, 2, 0), {1, xyz(1, 0, 0)});
  auto h = labeled(5, xyz(0, 1, 1), {1, xyz(1, 0, 0)});
  CHECK_NOTHROW(assert_admissible(h, src, kF5));
  CHECK_NOTHROW(assert_admissible(h, src, kGvw));
  CHECK_THROWS_AS(assert_admissible(h, src, kInverted), admissibility_error);
  try {
    assert_admissible(h, src, kInverted);
  } catch (const admissibility_error& e) {
    CHECK(e.new_id == 5);
    CHECK(e.source_id == 2);
  }
  // Different indices are incomparable under gvw, so nothing is checked.
  auto far = labeled(6, xyz(3, 0, 0), {2, xyz(1, 0, 0)});
  CHECK_NOTHROW(assert_admissible(far, src, kGvw));
  // A zero result ranks below its source.
  CHECK_NOTHROW(assert_admissible(zero_member(7, {1, xyz(1, 0, 0)}), src, kInverted));
}

TEST_CASE("parse_rewrite_order", "[criterion]") {
  CHECK(parse_rewrite_order("f5") == RewriteOrderKind::f5);
  CHECK(parse_rewrite_order("gvw") == RewriteOrderKind::gvw);
  CHECK_THROWS_AS(parse_rewrite_order("inverted"), config_error);
}

TEST_CASE("rewrite orders are strict partial orders, total within an index",
          "[criterion][property]") {
  std::mt19937_64 rng(31);
  std::bernoulli_distribution zero(0.2);
  auto draw = [&](std::size_t id, std::uint32_t index) {
    Signature s{index, detail::random_monomial(3, 3, rng)};
    return zero(rng) ? zero_member(id, s)
                     : labeled(id, detail::random_monomial(3, 4, rng), s);
  };
  for (const auto& ord : {kF5, kGvw}) {
    for (int i = 0; i < 3000; ++i) {
      auto a = draw(0, 1), b = draw(1, 1), c = draw(2, 1);
      auto ab = rewrite_compare(a, b, ord), bc = rewrite_compare(b, c, ord),
           ac = rewrite_compare(a, c, ord);
      REQUIRE(ab != PartialOrdering::incomparable);
      REQUIRE(rewrite_compare(b, a, ord) == flip(ab));
      REQUIRE(rewrite_compare(a, a, ord) == PartialOrdering::incomparable);
      if (ab == PartialOrdering::less && bc == PartialOrdering::less)
        REQUIRE(ac == PartialOrdering::less);
      if (a.is_syzygy && !b.is_syzygy)
        REQUIRE(ab == PartialOrdering::less);
    }
  }
}

TEST_CASE("gen_rewritable is monotone in the basis", "[criterion][property]") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 15; ++trial) {
    auto F = random_ideal(rng, 3, 3, 3, 101);
    for (auto kind : {RewriteOrderKind::f5, RewriteOrderKind::gvw}) {
      EngineConfig cfg;
      cfg.rewrite_order = kind;
      auto res = agc_run(F, cfg);
      const auto& full = res.basis;
      RewriteOrder ord{kind, full.module_order().base};
      for (std::size_t k = full.inputs().size(); k <= full.size(); ++k) {
        auto B = prefix_basis(full, k);
        for (int s = 0; s < 20; ++s) {
          std::size_t id = std::uniform_int_distribution<std::size_t>(0, k - 1)(rng);
          if (B.member(id).is_syzygy)
            continue;
          auto t = detail::random_monomial(3, 3, rng);
          if (gen_rewritable(t, B.member(id), B, ord))
            REQUIRE(gen_rewritable(t, full.member(id), full, ord));
        }
      }
    }
  }
}
