#include <optional>
#include <random>

#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace siggb;
using namespace siggb::test;

namespace {

std::vector<Monomial> leading_monomials(const std::vector<Polynomial<Zp>>& G) {
  std::vector<Monomial> out;
  for (const auto& g : G)
    out.push_back(g.lpp());
  return out;
}

std::vector<EngineConfig> all_configs() {
  std::vector<EngineConfig> out;
  for (auto mo : {ModuleOrderKind::pot, ModuleOrderKind::schreyer})
    for (auto ro : {RewriteOrderKind::f5, RewriteOrderKind::gvw})
      for (auto st : {Strategy::min_signature, Strategy::min_degree, Strategy::fifo}) {
        EngineConfig c;
        c.module_order = mo;
        c.rewrite_order = ro;
        c.strategy = st;
        out.push_back(c);
      }
  return out;
}

CriticalPair pair_at(std::size_t left, std::size_t right, Signature sig, Monomial lcm) {
  CriticalPair p;
  p.left = left, p.right = right;
  p.sig_left = sig;
  p.sig_right = Signature::unit(3, 3);
  p.lcm = lcm;
  return p;
}

} // namespace

TEST_CASE("make_critical_pair on the three-generator example", "[engine]") {
  auto mord = ModuleOrder::pot(kGrevlex3);
  auto B = init_basis(example_ideal(), mord);
  auto p = make_critical_pair(B.member(0), B.member(1), mord);
  CHECK(p.left == 0);
  CHECK(p.right == 1);
  CHECK(p.t_left == xyz(1, 0, 0));
  CHECK(p.t_right == xyz(0, 1, 0));
  CHECK(p.lcm == xyz(1, 1, 1));
  CHECK(p.sig_left == Signature{1, xyz(1, 0, 0)});
  CHECK(p.sig_right == Signature{2, xyz(0, 1, 0)});
  CHECK(p.regular());

  auto q = make_critical_pair(B.member(1), B.member(0), mord);
  CHECK(q.left == p.left);
  CHECK(q.right == p.right);
  CHECK(q.sig_left == p.sig_left);
  CHECK(q.t_right == p.t_right);

  auto Z = B;
  Z.record_zero_reduction({1, xyz(2, 0, 0)});
  CHECK_THROWS_AS(make_critical_pair(Z.member(0), Z.member(3), mord), input_error);
}

TEST_CASE("pair selection per strategy", "[engine]") {
  auto mord = ModuleOrder::pot(kGrevlex3);
  auto a = pair_at(0, 1, {1, xyz(2, 0, 0)}, xyz(1, 1, 1)); // deg 3, larger sig
  auto b = pair_at(0, 2, {1, xyz(0, 1, 0)}, xyz(2, 2, 0)); // deg 4, smaller sig
  auto c = pair_at(1, 2, {2, xyz(0, 0, 1)}, xyz(0, 0, 2)); // deg 2, smallest sig

  PairQueue sig_q(Strategy::min_signature, mord);
  PairQueue deg_q(Strategy::min_degree, mord);
  PairQueue fifo_q(Strategy::fifo, mord);
  for (auto* q : {&sig_q, &deg_q, &fifo_q}) {
    q->push(a);
    q->push(b);
    q->push(c);
    CHECK(q->size() == 3);
    CHECK(q->pushed() == 3);
  }
  CHECK(sig_q.pop().right == 2);
  CHECK(sig_q.pop().sig_left == Signature{1, xyz(0, 1, 0)});
  CHECK(sig_q.pop().sig_left == Signature{1, xyz(2, 0, 0)});

  CHECK(deg_q.pop().lcm == xyz(0, 0, 2));
  CHECK(deg_q.pop().lcm == xyz(1, 1, 1));
  CHECK(deg_q.pop().lcm == xyz(2, 2, 0));

  CHECK(fifo_q.pop().seq == 0);
  CHECK(fifo_q.pop().seq == 1);
  CHECK(fifo_q.pop().seq == 2);
  CHECK(fifo_q.empty());
  CHECK_THROWS(fifo_q.pop());

  // Equal signatures fall back to the ids.
  PairQueue tie(Strategy::min_signature, mord);
  tie.push(pair_at(2, 1, {1, xyz(1, 0, 0)}, xyz(1, 0, 0)));
  tie.push(pair_at(1, 0, {1, xyz(1, 0, 0)}, xyz(1, 0, 0)));
  CHECK(tie.pop().left == 1);

  CHECK(parse_strategy("sig") == Strategy::min_signature);
  CHECK(parse_strategy("degree") == Strategy::min_degree);
  CHECK(parse_strategy("fifo") == Strategy::fifo);
  CHECK_THROWS_AS(parse_strategy("random"), config_error);
}

TEST_CASE("spoly and one_side_reduce", "[engine]") {
  auto mord = ModuleOrder::pot(kGrevlex3);
  auto B = init_basis(example_ideal(), mord);
  auto p = make_critical_pair(B.member(0), B.member(1), mord);
  auto [s, sig] = spoly(p, B);
  CHECK(s == parse_poly("x,y,z", "-x^2 + y^2"));
  CHECK(sig == Signature{1, xyz(1, 0, 0)});

  // f1 and f2 would scale to x e1 and y e2, neither strictly below y e2;
  // only z f3 at z e3 is eligible.
  auto h = one_side_reduce(parse_poly("x,y,z", "x*y*z - y^2"), {2, xyz(0, 1, 0)}, B);
  CHECK(h.poly == parse_poly("x,y,z", "-y^2 + z^2"));
  CHECK(h.sig == Signature{2, xyz(0, 1, 0)});
  CHECK(h.id == 3);
  CHECK_FALSE(h.is_syzygy);

  // With a large enough signature the polynomial reduces to zero.
  auto z = one_side_reduce(B.member(2).poly.times_monomial(xyz(0, 0, 1)),
                           {1, xyz(0, 0, 1)}, B);
  CHECK(z.is_syzygy);
  CHECK(z.poly.is_zero());

  CHECK_THROWS_AS(one_side_reduce(s, Signature::sentinel(3), B), input_error);
}

TEST_CASE("engine matches the Buchberger oracle on the example", "[engine]") {
  auto F = example_ideal();
  auto expected = reduce_basis(buchberger(F, kGrevlex3));
  REQUIRE(is_groebner(expected));
  for (const auto& cfg : all_configs()) {
    auto res = agc_run(F, cfg);
    CHECK(res.outcome == Outcome::complete);
    auto G = reduce_basis(res.basis.nonzero_polys());
    CHECK(G == expected);
    CHECK(res.stats.consistent());
    CHECK(res.stats.seen == res.selections);
    CHECK(res.stats.reduced <= res.pairs_generated);
  }
}

TEST_CASE("a single input is its own basis", "[engine]") {
  auto F = parse_polys("x,y,z", {"2*x^2 - 4*y"});
  auto res = agc_run(F, EngineConfig{});
  CHECK(res.outcome == Outcome::complete);
  CHECK(res.pairs_generated == 0);
  REQUIRE(res.basis.size() == 1);
  CHECK(res.basis.member(0).poly == parse_poly("x,y,z", "x^2 - 2*y"));
}

TEST_CASE("random ideals agree with the oracle across configurations",
          "[engine][property]") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    auto F = random_ideal(rng, 3, 3, 3, 101);
    auto expected = reduce_basis(buchberger(F, kGrevlex3));
    for (const auto& cfg : all_configs()) {
      auto res = agc_run(F, cfg);
      REQUIRE(res.outcome == Outcome::complete);
      auto G = reduce_basis(res.basis.nonzero_polys());
      REQUIRE(G == expected);
      REQUIRE(leading_monomials(G) == leading_monomials(expected));
      REQUIRE(is_groebner(res.basis.nonzero_polys()));
    }
  }
}

TEST_CASE("reductions keep the signature of the selected pair", "[engine][property]") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    auto F = random_ideal(rng, 3, 4, 3, 101);
    for (const auto& cfg : all_configs()) {
      std::vector<Signature> seen_sigs;
      std::optional<Signature> pending;
      std::size_t size_before = 0;
      bool ok = true;
      PairObserver<Zp> obs = [&](const CriticalPair& p, const Basis<Zp>& B,
                                 PairVerdict v) {
        if (pending) {
          // The member appended since the last call carries that pair's signature.
          ok = ok && B.size() == size_before + 1 &&
               B.member(size_before).sig == *pending;
          pending.reset();
        }
        for (std::size_t k = 0; k < seen_sigs.size(); ++k)
          ok = ok && B.member(k).sig == seen_sigs[k];
        seen_sigs.clear();
        for (const auto& g : B.members())
          seen_sigs.push_back(g.sig);
        size_before = B.size();
        ok = ok && (p.sig_left == p.sig_right) == (v == PairVerdict::not_regular);
        if (v == PairVerdict::reduce)
          pending = p.sig_left;
      };
      auto res = agc_run(F, cfg, obs);
      REQUIRE(ok);
      std::vector<Polynomial<Zp>> ins(res.basis.inputs().begin(), res.basis.inputs().end());
      auto rep = check_labeled_gb(res.basis, ins, 200, trial, res.basis.module_order());
      REQUIRE(rep.ok());
    }
  }
}

TEST_CASE("safety caps end the run as capped", "[engine]") {
  auto K = gen_katsura(4);
  auto F = to_zp(K.polys, 32003);
  EngineConfig cfg;
  cfg.max_selections = 1;
  auto res = agc_run(F, cfg);
  CHECK(res.outcome == Outcome::capped);
  CHECK(res.selections == 1);
  CHECK_FALSE(res.cap_reason.empty());

  EngineConfig deg;
  deg.max_degree = 2;
  CHECK(agc_run(F, deg).outcome == Outcome::capped);

  EngineConfig bad;
  bad.max_selections = 0;
  CHECK_THROWS_AS(agc_run(F, bad), config_error);
  CHECK_THROWS_AS(agc_run(std::vector<Polynomial<Zp>>{}, EngineConfig{}), input_error);
}

TEST_CASE("the inverted order trips the admissibility check", "[engine]") {
  EngineConfig cfg;
  cfg.rewrite_order = RewriteOrderKind::inverted_insertion;
  CHECK_THROWS_AS(agc_run(example_ideal(), cfg), admissibility_error);
}

TEST_CASE("inputs in another term order are converted", "[engine]") {
  auto F = parse_polys("x,y,z", {"y*z - x", "x*z - y", "x*y - z"}, TermOrderKind::lex);
  EngineConfig cfg;
  cfg.term_order = TermOrderKind::lex;
  auto res = agc_run(F, cfg);
  auto G = reduce_basis(res.basis.nonzero_polys());
  CHECK(G == reduce_basis(buchberger(F, TermOrder{TermOrderKind::lex, 3})));
  CHECK(G.front().order().kind == TermOrderKind::lex);
}
