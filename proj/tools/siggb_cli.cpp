// Command-line driver: runs the signature engine on an ideal file or a
// built-in benchmark and prints a run record.
//
// Exit status: 0 complete (and verified, with --verify), 1 usage or parse
// error, 2 a safety cap tripped, 3 verification or admissibility failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <siggb/siggb.hpp>

namespace {

siggb::IdealFile load_bench(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw siggb::config_error("--bench expects katsura:N or cyclic:N");
  std::string family = spec.substr(0, colon);
  int n = 0;
  try {
    n = std::stoi(spec.substr(colon + 1));
  } catch (const std::exception&) {
    throw siggb::config_error("bad benchmark size in '" + spec + "'");
  }
  if (family == "katsura")
    return siggb::gen_katsura(n);
  if (family == "cyclic")
    return siggb::gen_cyclic(n);
  throw siggb::config_error("unknown benchmark family '" + family + "'");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signature-based Groebner basis engine"};

  std::string input, bench, order, module_order = "schreyer",
                                   rewrite_order = "gvw", strategy = "sig",
                                   stats_format = "kv";
  std::optional<std::uint32_t> characteristic;
  bool verify = false, emit_file = false;
  std::uint64_t seed = 1, max_pairs = 1'000'000, samples = 1000;
  std::uint32_t max_degree = 64;

  auto* in_opt = app.add_option("--input", input, "ideal file");
  auto* bench_opt =
      app.add_option("--bench", bench, "built-in benchmark: katsura:N or cyclic:N");
  in_opt->excludes(bench_opt);
  app.add_option("--char", characteristic,
                 "coefficient characteristic (0 = rationals); overrides the file");
  app.add_option("--order", order, "term order: grevlex, lex or grlex");
  app.add_option("--module-order", module_order, "pot or schreyer")
      ->check(CLI::IsMember({"pot", "schreyer"}));
  app.add_option("--rewrite-order", rewrite_order, "f5 or gvw")
      ->check(CLI::IsMember({"f5", "gvw"}));
  app.add_option("--strategy", strategy, "sig, degree or fifo")
      ->check(CLI::IsMember({"sig", "degree", "fifo"}));
  app.add_flag("--verify", verify,
               "check the output (Buchberger criterion, labeled-basis sampling, "
               "oracle comparison on small rings)");
  app.add_option("--stats-format", stats_format, "kv or table")
      ->check(CLI::IsMember({"kv", "table"}));
  app.add_option("--seed", seed, "seed for the labeled-basis sampler");
  app.add_option("--samples", samples, "labeled-basis samples under --verify");
  app.add_option("--max-pairs", max_pairs, "cap on pair selections")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-degree", max_degree, "cap on pair degree")
      ->check(CLI::PositiveNumber);
  app.add_flag("--emit-file", emit_file,
               "print the ideal in file format and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  siggb::IdealFile file;
  std::string label;
  try {
    if (!input.empty()) {
      std::ifstream in(input);
      if (!in) {
        std::cerr << "error: cannot open '" << input << "'\n";
        return 1;
      }
      std::stringstream ss;
      ss << in.rdbuf();
      file = siggb::parse_ideal_file(ss.str());
      label = input;
    } else if (!bench.empty()) {
      file = load_bench(bench);
      label = bench;
    } else {
      std::cerr << "error: one of --input or --bench is required\n";
      return 1;
    }

    if (characteristic) {
      if (*characteristic != 0)
        siggb::PrimeField check(*characteristic);
      file.characteristic = *characteristic;
    } else if (!bench.empty()) {
      file.characteristic = 32003;
    }
    if (!order.empty()) {
      file.order = siggb::parse_term_order(order);
      for (auto& p : file.polys)
        p = siggb::with_order(p, file.term_order());
    }

    if (emit_file) {
      std::cout << siggb::render_ideal_file(file);
      return 0;
    }

    siggb::RunOptions opt;
    opt.engine.term_order = file.order;
    opt.engine.module_order = siggb::parse_module_order(module_order);
    opt.engine.rewrite_order = siggb::parse_rewrite_order(rewrite_order);
    opt.engine.strategy = siggb::parse_strategy(strategy);
    opt.engine.max_selections = max_pairs;
    opt.engine.max_degree = max_degree;
    opt.verify = verify;
    opt.seed = seed;
    opt.samples = samples;

    siggb::RunRecord rec = siggb::run_ideal(file, opt, label);
    if (stats_format == "table")
      siggb::write_table(std::cout, rec);
    else
      siggb::write_kv(std::cout, rec);
    if (!rec.message.empty() && stats_format == "kv")
      std::cerr << "note: " << rec.message << '\n';

    if (rec.outcome == siggb::Outcome::failed ||
        rec.verify == siggb::VerifyStatus::fail)
      return 3;
    if (rec.outcome == siggb::Outcome::capped)
      return 2;
    return 0;
  } catch (const siggb::parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
