#pragma once

// One end-to-end run: map an ideal file into its working field, run the
// engine, optionally verify, and summarize as a RunRecord.

#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "engine.hpp"
#include "ideal_io.hpp"
#include "verify.hpp"

namespace siggb {

struct RunOptions {
  EngineConfig engine;
  bool verify = false;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 1;
  /// The criterion-free oracle only runs on rings this small.
  std::size_t oracle_max_vars = 4;
};

enum class VerifyStatus { not_run, pass, fail };

struct RunRecord {
  std::string input;
  std::uint32_t characteristic = 0;
  TermOrderKind order = TermOrderKind::grevlex;
  ModuleOrderKind module_order = ModuleOrderKind::schreyer;
  RewriteOrderKind rewrite_order = RewriteOrderKind::gvw;
  Strategy strategy = Strategy::min_signature;

  std::uint64_t all_pairs = 0;
  std::uint64_t reduced_pairs = 0;
  std::uint64_t nonzero_generators = 0;
  std::uint64_t syzygy_signatures = 0;
  std::uint64_t reduced_gb_size = 0;
  std::uint64_t time_ms = 0;
  Outcome outcome = Outcome::complete;

  VerifyStatus verify = VerifyStatus::not_run;
  std::string message; ///< cap reason, failure or verification diagnostic
};

inline std::string_view to_string(VerifyStatus v) {
  switch (v) {
  case VerifyStatus::not_run: return "skipped";
  case VerifyStatus::pass: return "pass";
  case VerifyStatus::fail: return "fail";
  }
  return "?";
}

/// Newline-delimited key=value lines.
inline void write_kv(std::ostream& os, const RunRecord& r, bool with_time = true) {
  os << "input=" << r.input << '\n'
     << "char=" << r.characteristic << '\n'
     << "order=" << to_string(r.order) << '\n'
     << "module_order=" << to_string(r.module_order) << '\n'
     << "rewrite_order=" << to_string(r.rewrite_order) << '\n'
     << "strategy=" << to_string(r.strategy) << '\n'
     << "all_pairs=" << r.all_pairs << '\n'
     << "reduced_pairs=" << r.reduced_pairs << '\n'
     << "nonzero_generators=" << r.nonzero_generators << '\n'
     << "syzygy_signatures=" << r.syzygy_signatures << '\n'
     << "reduced_gb_size=" << r.reduced_gb_size << '\n';
  if (with_time)
    os << "time_ms=" << r.time_ms << '\n';
  os << "outcome=" << to_string(r.outcome) << '\n';
  if (r.verify != VerifyStatus::not_run)
    os << "verify=" << to_string(r.verify) << '\n';
}

inline void write_table(std::ostream& os, const RunRecord& r) {
  os << r.input << "  [" << to_string(r.order) << ", "
     << to_string(r.module_order) << ", " << to_string(r.rewrite_order) << ", "
     << to_string(r.strategy) << ", char " << r.characteristic << "]\n"
     << "  #all.   " << r.all_pairs << '\n'
     << "  #red.   " << r.reduced_pairs << '\n'
     << "  #gen.   " << r.nonzero_generators << '\n'
     << "  #syz.   " << r.syzygy_signatures << '\n'
     << "  reduced " << r.reduced_gb_size << '\n'
     << "  time    " << r.time_ms << " ms\n"
     << "  outcome " << to_string(r.outcome);
  if (r.verify != VerifyStatus::not_run)
    os << ", verify " << to_string(r.verify);
  os << '\n';
  if (!r.message.empty())
    os << "  note    " << r.message << '\n';
}

template <field_element C>
RunRecord run_engine(std::vector<Polynomial<C>> polys, const RunOptions& opt,
                     std::string label) {
  RunRecord rec;
  rec.input = std::move(label);
  rec.characteristic = opt.engine.characteristic;
  rec.order = opt.engine.term_order;
  rec.module_order = opt.engine.module_order;
  rec.rewrite_order = opt.engine.rewrite_order;
  rec.strategy = opt.engine.strategy;

  auto t0 = std::chrono::steady_clock::now();
  std::optional<AgcResult<C>> res;
  try {
    res.emplace(agc_run(polys, opt.engine));
  } catch (const admissibility_error& e) {
    rec.outcome = Outcome::failed;
    rec.message = e.what();
    return rec;
  }
  auto gb = res->basis.nonzero_polys();
  auto reduced = reduce_basis(gb);
  rec.time_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - t0)
          .count());

  rec.all_pairs = res->pairs_generated;
  rec.reduced_pairs = res->stats.reduced;
  rec.nonzero_generators = res->basis.nonzero_count();
  rec.syzygy_signatures = res->basis.syzygy_sigs().size();
  rec.reduced_gb_size = reduced.size();
  rec.outcome = res->outcome;
  rec.message = res->cap_reason;

  if (opt.verify && rec.outcome == Outcome::complete) {
    rec.verify = VerifyStatus::pass;
    if (!is_groebner(gb)) {
      rec.verify = VerifyStatus::fail;
      rec.message = "engine output is not a Groebner basis";
    }
    if (rec.verify == VerifyStatus::pass) {
      std::vector<Polynomial<C>> ins(res->basis.inputs().begin(),
                                     res->basis.inputs().end());
      auto rep = check_labeled_gb(res->basis, ins, opt.samples, opt.seed,
                                  res->basis.module_order());
      if (!rep.ok()) {
        rec.verify = VerifyStatus::fail;
        rec.message = std::to_string(rep.attempted - rep.passed) +
                      " labeled-basis samples uncovered; first: " +
                      rep.diagnostics.front();
      }
    }
    if (rec.verify == VerifyStatus::pass && !polys.empty() &&
        polys.front().nvars() <= opt.oracle_max_vars) {
      TermOrder ord{opt.engine.term_order, polys.front().nvars()};
      if (reduce_basis(buchberger(polys, ord)) != reduced) {
        rec.verify = VerifyStatus::fail;
        rec.message = "reduced basis differs from the Buchberger oracle";
      }
    }
  }
  return rec;
}

/// Maps the file's exact polynomials into GF(p) (p > 0) or keeps them over Q.
inline RunRecord run_ideal(const IdealFile& file, RunOptions opt,
                           std::string label) {
  opt.engine.characteristic = file.characteristic;
  if (file.characteristic == 0)
    return run_engine<Rational>(file.polys, opt, std::move(label));
  PrimeField field(file.characteristic);
  std::vector<Polynomial<Zp>> polys;
  for (const auto& p : file.polys) {
    auto q = to_prime_field(p, field);
    if (q.is_zero())
      throw input_error("a generator vanishes modulo " +
                        std::to_string(file.characteristic));
    polys.push_back(std::move(q));
  }
  return run_engine<Zp>(std::move(polys), opt, std::move(label));
}

} // namespace siggb
