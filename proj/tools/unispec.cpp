#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "unispec.h"

namespace {

struct Args {
  std::string model;
  std::string spec;
  std::string kind;
  std::string suite = "all";
  int n = -1;
  int n_max = 0;
  std::vector<int> primes;
  int r = 0;
  int s = 0;
  std::string theta;
  std::string lambda;
  std::uint64_t trials = 10000;
  std::uint64_t seed = UNISPEC_DEFAULT_SEED;
  int limit = 64;
  std::string format = "csv";
  std::string out;
};

int fail(unispec_status status) {
  std::cerr << "unispec: " << unispec_last_error() << "\n";
  return static_cast<int>(status);
}

int emit(const std::string& text, const Args& args) {
  if (args.out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream file(args.out, std::ios::binary);
  if (!file || !(file << text)) {
    std::cerr << "unispec: cannot write " << args.out << "\n";
    return UNISPEC_INVALID;
  }
  return 0;
}

int emit_table(unispec_status status, unispec_table* table, const Args& args) {
  if (status != UNISPEC_OK) return fail(status);
  if (args.format != "csv" && args.format != "json") {
    unispec_table_free(table);
    std::cerr << "unispec: unknown format '" << args.format << "', expected csv or json\n";
    return UNISPEC_INVALID;
  }
  char* text = unispec_table_render(table, args.format == "json" ? UNISPEC_JSON : UNISPEC_CSV);
  const int code = emit(text, args);
  unispec_string_free(text);
  unispec_table_free(table);
  return code;
}

int single_prime(const Args& args) { return args.primes.empty() ? 0 : args.primes.front(); }

int run_dist(const Args& args) {
  unispec_table* table = nullptr;
  const unispec_status st = unispec_dist(args.model.c_str(), args.n, single_prime(args), &table);
  return emit_table(st, table, args);
}

int run_sample(const Args& args) {
  std::string spec = args.spec;
  if (spec.empty()) {
    const int p = args.primes.empty() ? 2 : args.primes.front();
    if (args.model == "coins")
      spec = "coins:p=" + std::to_string(p) + ",limit=" + std::to_string(args.limit);
    else if (args.model == "borodin")
      spec = "borodin:n=" + std::to_string(args.n) + ",p=" + std::to_string(p);
    else {
      std::cerr << "unispec: give a sampler spec or --model borodin|coins\n";
      return UNISPEC_INVALID;
    }
  }
  if (args.trials == 0) {
    std::cerr << "unispec: --trials must be at least 1\n";
    return UNISPEC_INVALID;
  }
  unispec_table* table = nullptr;
  const unispec_status st = unispec_sample(spec.c_str(), args.trials, args.seed, &table);
  return emit_table(st, table, args);
}

int run_stats(const Args& args) {
  unispec_stats_params params{};
  params.model = args.model.empty() ? nullptr : args.model.c_str();
  params.n = args.n < 0 ? 0 : args.n;
  params.p = single_prime(args);
  params.r = args.r;
  params.s = args.s;
  params.theta = args.theta.empty() ? nullptr : args.theta.c_str();
  params.lambda = args.lambda.empty() ? nullptr : args.lambda.c_str();
  unispec_table* table = nullptr;
  const unispec_status st = unispec_stats(args.kind.c_str(), &params, &table);
  return emit_table(st, table, args);
}

int run_verify(const Args& args) {
  unispec_verify_options options{};
  options.n_max = args.n_max;
  options.n = args.n < 0 ? 0 : args.n;
  options.primes = args.primes.data();
  options.prime_count = args.primes.size();
  options.trials = args.trials;
  options.seed = args.seed;
  unispec_report* report = nullptr;
  const unispec_status st = unispec_verify(args.suite.c_str(), &options, &report);
  if (st != UNISPEC_OK) return fail(st);
  char* json = unispec_report_json(report);
  int code = emit(json, args);
  unispec_string_free(json);
  if (code == 0 && !unispec_report_passed(report)) {
    std::cerr << "unispec: " << unispec_report_failures(report) << " of " << unispec_report_checks(report)
              << " checks failed\n";
    code = 1;
  }
  unispec_report_free(report);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jordan types of random unipotent matrices over F_p"};
  app.require_subcommand(1);
  app.set_version_flag("--version", unispec_version());
  Args args;

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--format", args.format, "csv or json")->capture_default_str();
    cmd->add_option("--out", args.out, "write output to PATH instead of stdout");
  };

  auto* dist = app.add_subcommand("dist", "exact Jordan-type distribution");
  dist->add_option("model,--model", args.model, "gl or triangular")->required();
  dist->add_option("--n", args.n, "matrix size")->required();
  dist->add_option("--p", args.primes, "field size")->required()->expected(1);
  add_output(dist);

  auto* sample = app.add_subcommand("sample", "empirical law of a growth sampler");
  sample->add_option("spec", args.spec, "borodin:n=<n>,p=<p> or coins:p=<p>,limit=<k>");
  sample->add_option("--model", args.model, "borodin or coins, when no spec is given");
  sample->add_option("--n", args.n, "number of dots for borodin");
  sample->add_option("--p", args.primes, "field size")->expected(1);
  sample->add_option("--limit", args.limit, "last coin flipped")->capture_default_str();
  sample->add_option("--trials", args.trials, "number of samples")->capture_default_str();
  sample->add_option("--seed", args.seed, "RNG seed")->capture_default_str();
  add_output(sample);

  auto* stats = app.add_subcommand("stats", "line and arc statistics");
  stats->add_option("kind", args.kind, "mean-xr, mean-arc, second-moment, orbits or xtheta")->required();
  stats->add_option("--model", args.model, "gl or triangular");
  stats->add_option("--n", args.n, "matrix size");
  stats->add_option("--p", args.primes, "field size")->expected(1);
  stats->add_option("--r", args.r, "orbit exponent r; 0 means all");
  stats->add_option("--s", args.s, "second index for second-moment");
  stats->add_option("--theta", args.theta, "arc length as a fraction a/b");
  stats->add_option("--lambda", args.lambda, "Jordan type, e.g. \"[2,1]\"");
  add_output(stats);

  auto* verify = app.add_subcommand("verify", "check identities against exact sums and oracles; JSON report");
  verify->add_option("suite", args.suite, "identities, oracle, samplers or all")->capture_default_str();
  verify->add_option("--n-max", args.n_max, "largest n for size-indexed checks");
  verify->add_option("--n", args.n, "run size-indexed checks at this n only");
  verify->add_option("--p", args.primes, "primes to check, comma separated")->delimiter(',');
  verify->add_option("--trials", args.trials, "sampler trials; default per check");
  verify->add_option("--seed", args.seed, "RNG seed")->capture_default_str();
  verify->add_option("--out", args.out, "write the report to PATH instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : UNISPEC_INVALID;
  }

  if (*verify && verify->count("--trials") == 0) args.trials = 0;
  if (*dist) return run_dist(args);
  if (*sample) return run_sample(args);
  if (*stats) return run_stats(args);
  return run_verify(args);
}
