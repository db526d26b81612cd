#include "ilseq/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <string>

#include "ilseq/construct_u.hpp"
#include "ilseq/generators.hpp"
#include "ilseq/interleave.hpp"
#include "ilseq/io.hpp"
#include "ilseq/search.hpp"
#include "ilseq/verify.hpp"

namespace ilseq {

namespace {

struct RunConfig {
  // gen
  std::int64_t p = 0;
  std::string kind;
  unsigned degree = 0;
  std::string taps;
  bool modified = false;
  // files
  std::string out;
  std::string spec;
  std::string seq;
  std::string a;
  std::string b;
  std::string s;
  std::string s_prime;
  // numeric parameters
  std::size_t k = 0;
  std::size_t t = 0;
  std::int64_t eta = 0;
  std::int64_t mu = 0;
  bool all = false;
  std::string regime = "const";
  int condition = 1;
  std::uint64_t seed = 1;
  std::size_t samples = 0;
  bool no_enforce = false;
  std::size_t period = 0;
  std::string target = "ideal";
  int jobs = 0;
  bool cross_check = false;
  bool json = false;
  std::string format = "csv";
};

BalanceRegime parse_regime(const std::string& text) {
  if (text == "const") return BalanceRegime::Constant;
  if (text == "antisym") return BalanceRegime::Antisymmetric;
  throw InvalidInput("regime must be 'const' or 'antisym', got '" + text + "'");
}

std::uint32_t parse_hex(const std::string& text) {
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(text, &used, 16);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || value > 0xFFFFFFFFul) {
    throw InvalidInput("--taps expects a hexadecimal polynomial mask, got '" + text + "'");
  }
  return static_cast<std::uint32_t>(value);
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out.empty()) {
    out << text;
  } else {
    write_text_file(cfg.out, text);
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int report_exit(const TheoremReport& report) {
  return report.passed() ? kExitOk : kExitMismatch;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Interleaved binary sequences with optimal periodic autocorrelation", "ilseq"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a sequence family");
  gen->require_subcommand(1);
  auto* gen_legendre = gen->add_subcommand("legendre", "Legendre sequence of an odd prime");
  gen_legendre->add_option("--p", cfg.p, "Odd prime")->required();
  gen_legendre->add_option("--kind", cfg.kind, "first (l(0)=1) or second (l(0)=0)")
      ->required()
      ->check(CLI::IsMember({"first", "second"}));
  auto* gen_mseq = gen->add_subcommand("msequence", "m-sequence from a primitive polynomial");
  gen_mseq->add_option("--degree", cfg.degree, "Register length n (2..16)")->required();
  gen_mseq->add_option("--taps", cfg.taps, "Polynomial mask in hex, bit i = coeff of x^i");
  auto* gen_twin = gen->add_subcommand("twinprime", "Twin-prime interleaved sequence");
  gen_twin->add_option("--p", cfg.p, "Smaller prime of the twin pair")->required();
  gen_twin->add_flag("--modified", cfg.modified, "Use the all-one constant column");
  for (auto* sub : {gen_legendre, gen_mseq, gen_twin}) {
    sub->add_option("--out", cfg.out, "Output file (default stdout)");
  }

  // interleave
  auto* inter = app.add_subcommand("interleave", "Array form of interleaved sequences");
  inter->require_subcommand(1);
  auto* inter_build = inter->add_subcommand("build", "Build a sequence from a spec file");
  inter_build->add_option("--spec", cfg.spec, "Spec file")->required();
  inter_build->add_option("--out", cfg.out, "Output file (default stdout)");
  auto* inter_decompose = inter->add_subcommand("decompose", "Write the K x T spec of a sequence");
  inter_decompose->add_option("--seq", cfg.seq, "Sequence file")->required();
  inter_decompose->add_option("--k", cfg.k, "Rows K")->required();
  inter_decompose->add_option("--t", cfg.t, "Columns T")->required();
  inter_decompose->add_option("--out", cfg.out, "Output file (default stdout)");

  // build-u / predict-u
  auto* build_u_cmd = app.add_subcommand("build-u", "Period-4N sequence u from s and s'");
  build_u_cmd->add_option("--s", cfg.s, "Sequence file for s")->required();
  build_u_cmd->add_option("--sprime", cfg.s_prime, "Sequence file for s'")->required();
  build_u_cmd->add_option("--eta", cfg.eta, "Shift offset eta")->required();
  build_u_cmd->add_option("--out", cfg.out, "Output file (default stdout)");

  auto* predict = app.add_subcommand("predict-u", "Closed-form autocorrelation of u");
  predict->add_option("--spec", cfg.spec, "Spec file for s (column 0 ignored)")->required();
  predict->add_option("--eta", cfg.eta, "Shift offset eta")->required();
  predict->add_option("--regime", cfg.regime, "const or antisym")
      ->check(CLI::IsMember({"const", "antisym"}));
  auto* mu_opt = predict->add_option("--mu", cfg.mu, "Single lag");
  auto* all_opt = predict->add_flag("--all", cfg.all, "All lags, with measured values, as JSON");
  mu_opt->excludes(all_opt);
  predict->add_flag("--no-enforce", cfg.no_enforce, "Predict even if the hypothesis fails");
  predict->add_option("--out", cfg.out, "Output file (default stdout)");

  // corr / classify / export
  auto* corr = app.add_subcommand("corr", "Periodic correlation spectrum");
  corr->add_option("--a", cfg.a, "Sequence file a")->required();
  corr->add_option("--b", cfg.b, "Sequence file b (cross-correlation)");
  corr->add_flag("--json", cfg.json, "Emit spectrum JSON");
  corr->add_option("--out", cfg.out, "Output file (default stdout)");

  auto* classify_cmd = app.add_subcommand("classify", "Optimality class of a sequence");
  classify_cmd->add_option("--a", cfg.a, "Sequence file")->required();
  classify_cmd->add_flag("--json", cfg.json, "Emit spectrum JSON");

  auto* export_cmd = app.add_subcommand("export", "Export a spectrum for plotting");
  export_cmd->add_option("--a", cfg.a, "Sequence file a")->required();
  export_cmd->add_option("--b", cfg.b, "Sequence file b (cross-correlation)");
  export_cmd->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"csv"}));
  export_cmd->add_option("--out", cfg.out, "Output file (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "Check a correlation identity against measurement");
  verify->require_subcommand(1);
  std::vector<CLI::App*> verify_subs;
  for (const char* name : {"theorem1", "theorem2", "corollaries", "theorem3", "theorem4"}) {
    auto* sub = verify->add_subcommand(name);
    sub->add_option("--spec", cfg.spec, "Spec file (column 0 ignored)");
    sub->add_option("--out", cfg.out, "Report file (default stdout)");
    sub->add_option("--seed", cfg.seed, "Seed for sampled checks");
    verify_subs.push_back(sub);
  }
  auto* v_theorem3 = verify_subs[3];
  auto* v_theorem4 = verify_subs[4];
  v_theorem3->add_option("--eta", cfg.eta, "Shift offset eta");
  v_theorem3->add_option("--regime", cfg.regime, "const or antisym")
      ->check(CLI::IsMember({"const", "antisym"}));
  v_theorem3->add_flag("--no-enforce", cfg.no_enforce, "Run even if the hypothesis fails");
  v_theorem4->add_option("--eta", cfg.eta, "Shift offset eta");
  v_theorem4->add_option("--condition", cfg.condition, "1 or 2")->check(CLI::IsMember({1, 2}));
  v_theorem4->add_option("--samples", cfg.samples,
                         "Instead of --spec: sample this many condition-violating specs");

  // search
  auto* search = app.add_subcommand("search", "Exhaustive search for ideal/optimal sequences");
  search->add_option("--period", cfg.period, "Period N")->required();
  search->add_option("--target", cfg.target, "ideal or optimal")
      ->check(CLI::IsMember({"ideal", "optimal"}));
  search->add_option("--jobs", cfg.jobs, "Worker threads (0 = default)");
  search->add_flag("--cross-check", cfg.cross_check, "Also classify with the definitional oracle");
  search->add_flag("--json", cfg.json, "Emit JSON");
  search->add_option("--out", cfg.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    if (gen_legendre->parsed()) {
      const auto kind = cfg.kind == "first" ? LegendreKind::First : LegendreKind::Second;
      emit(cfg, out,
           format_sequence(legendre(cfg.p, kind),
                           "legendre p=" + std::to_string(cfg.p) + " kind=" + cfg.kind));
      return kExitOk;
    }
    if (gen_mseq->parsed()) {
      std::optional<std::uint32_t> poly;
      if (!cfg.taps.empty()) poly = parse_hex(cfg.taps);
      emit(cfg, out,
           format_sequence(m_sequence(cfg.degree, poly),
                           "msequence degree=" + std::to_string(cfg.degree)));
      return kExitOk;
    }
    if (gen_twin->parsed()) {
      emit(cfg, out,
           format_sequence(twin_prime(cfg.p, cfg.modified),
                           "twinprime p=" + std::to_string(cfg.p) +
                               (cfg.modified ? " modified" : "")));
      return kExitOk;
    }
    if (inter_build->parsed()) {
      emit(cfg, out, format_sequence(build(read_spec_file(cfg.spec))));
      return kExitOk;
    }
    if (inter_decompose->parsed()) {
      emit(cfg, out, format_spec(to_array(read_sequence_file(cfg.seq), cfg.k, cfg.t)));
      return kExitOk;
    }
    if (build_u_cmd->parsed()) {
      const auto s = read_sequence_file(cfg.s);
      const auto sp = read_sequence_file(cfg.s_prime);
      emit(cfg, out, format_sequence(build_u(s, sp, cfg.eta)));
      return kExitOk;
    }
    if (predict->parsed()) {
      const auto spec = read_spec_file(cfg.spec);
      PredictOptions options;
      options.enforce_hypothesis = !cfg.no_enforce;
      const UPredictor predictor(spec, cfg.eta, parse_regime(cfg.regime), options);
      if (cfg.all) {
        const auto observed = autocorrelation_spectrum(build_u(spec, cfg.eta));
        Json j = to_json(observed);
        Series series{"R_u", CorrelationKind::Auto, predictor.spectrum(), observed.values};
        j["predicted"] = series.predicted;
        j["observed"] = series.observed;
        j["mismatched_shifts"] = series.mismatched_shifts();
        j["verdict"] = series.mismatched_shifts().empty() ? "pass" : "fail";
        emit(cfg, out, dump(j));
        return series.mismatched_shifts().empty() ? kExitOk : kExitMismatch;
      }
      if (mu_opt->count() == 0) throw InvalidInput("predict-u needs --mu M or --all");
      emit(cfg, out, std::to_string(predictor(cfg.mu)) + "\n");
      return kExitOk;
    }
    if (corr->parsed() || export_cmd->parsed()) {
      const auto a = read_sequence_file(cfg.a);
      const auto spectrum = cfg.b.empty()
                                ? autocorrelation_spectrum(a)
                                : cross_correlation_spectrum(a, read_sequence_file(cfg.b));
      if (export_cmd->parsed()) {
        emit(cfg, out, to_csv(spectrum));
      } else if (cfg.json) {
        emit(cfg, out, dump(to_json(spectrum)));
      } else {
        std::string text;
        for (std::size_t tau = 0; tau < spectrum.values.size(); ++tau) {
          text += std::to_string(tau) + " " + std::to_string(spectrum.values[tau]) + "\n";
        }
        emit(cfg, out, text);
      }
      return kExitOk;
    }
    if (classify_cmd->parsed()) {
      const auto spectrum = autocorrelation_spectrum(read_sequence_file(cfg.a));
      if (cfg.json) {
        out << dump(to_json(spectrum));
      } else {
        const auto cls = classify(spectrum);
        out << "period " << spectrum.period << " residue " << cls.residue << " verdict "
            << to_string(cls.verdict) << "\n";
      }
      return kExitOk;
    }
    if (verify->parsed()) {
      const bool sampling = v_theorem4->parsed() && cfg.samples > 0;
      if (!sampling && cfg.spec.empty()) throw InvalidInput("verify needs --spec FILE");
      TheoremReport report;
      if (sampling) {
        SamplingOptions options;
        options.samples = cfg.samples;
        options.seed = cfg.seed;
        report = sample_theorem4_reverse(options);
      } else {
        const auto spec = read_spec_file(cfg.spec);
        if (verify_subs[0]->parsed()) report = verify_theorem1(spec);
        if (verify_subs[1]->parsed()) report = verify_theorem2(spec);
        if (verify_subs[2]->parsed()) report = verify_corollaries(spec);
        if (v_theorem3->parsed()) {
          report = verify_theorem3(spec, cfg.eta, parse_regime(cfg.regime), !cfg.no_enforce);
        }
        if (v_theorem4->parsed()) report = verify_theorem4(spec, cfg.eta, cfg.condition);
      }
      emit(cfg, out, dump(to_json(report)));
      return report_exit(report);
    }
    if (search->parsed()) {
      SearchOptions options;
      options.jobs = cfg.jobs;
      options.cross_check = cfg.cross_check;
      const auto result =
          exhaustive_search(cfg.period, parse_search_target(cfg.target), options);
      if (cfg.json) {
        emit(cfg, out, dump(to_json(result)));
      } else {
        std::string text;
        for (const auto& rep : result.representatives) text += rep.to_string() + "\n";
        emit(cfg, out, text);
      }
      return result.oracle_disagreements == 0 ? kExitOk : kExitMismatch;
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  err << "error: no command given\n";
  return kExitInvalid;
}

}  // namespace ilseq
