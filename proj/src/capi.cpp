#include "unispec.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <variant>

#include "unispec/commands.hpp"
#include "unispec/errors.hpp"
#include "unispec/growth.hpp"
#include "unispec/verify.hpp"

struct unispec_table {
  unispec::Table table;
};

struct unispec_report {
  unispec::VerifyReport report;
};

struct unispec_sampler {
  unispec::SamplerSpec spec;
  std::variant<unispec::BorodinSampler, unispec::CoinSampler> sampler;
};

namespace {

thread_local std::string last_error;

template <typename F>
unispec_status guard(F&& body) {
  try {
    body();
    last_error.clear();
    return UNISPEC_OK;
  } catch (const unispec::InvalidArgument& e) {
    last_error = e.what();
    return UNISPEC_INVALID;
  } catch (const unispec::BoundExceeded& e) {
    last_error = e.what();
    return UNISPEC_BOUND;
  } catch (const unispec::DegenerateInput& e) {
    last_error = e.what();
    return UNISPEC_DEGENERATE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return UNISPEC_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return UNISPEC_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require_out(const void* out) {
  if (out == nullptr) unispec::throw_invalid("output pointer is null");
}

std::string required_text(const char* text, const char* what) {
  if (text == nullptr) unispec::throw_invalid(std::string(what) + " is required");
  return text;
}

}  // namespace

extern "C" {

const char* unispec_last_error(void) { return last_error.c_str(); }

const char* unispec_version(void) { return "0.1.0"; }

void unispec_string_free(char* s) { std::free(s); }

size_t unispec_table_rows(const unispec_table* t) { return t ? t->table.rows.size() : 0; }

size_t unispec_table_cols(const unispec_table* t) { return t ? t->table.columns.size() : 0; }

const char* unispec_table_header(const unispec_table* t, size_t col) {
  if (!t || col >= t->table.columns.size()) return nullptr;
  return t->table.columns[col].c_str();
}

const char* unispec_table_cell(const unispec_table* t, size_t row, size_t col) {
  if (!t || row >= t->table.rows.size() || col >= t->table.rows[row].size()) return nullptr;
  return t->table.rows[row][col].c_str();
}

size_t unispec_table_footer_lines(const unispec_table* t) { return t ? t->table.footer.size() : 0; }

const char* unispec_table_footer(const unispec_table* t, size_t line) {
  if (!t || line >= t->table.footer.size()) return nullptr;
  return t->table.footer[line].c_str();
}

char* unispec_table_render(const unispec_table* t, unispec_format fmt) {
  if (!t) return nullptr;
  return dup_string(t->table.render(fmt == UNISPEC_JSON ? unispec::Format::Json : unispec::Format::Csv));
}

void unispec_table_free(unispec_table* t) { delete t; }

unispec_status unispec_dist(const char* model, int n, int p, unispec_table** out) {
  return guard([&] {
    require_out(out);
    const auto m = unispec::parse_model(required_text(model, "model"));
    *out = new unispec_table{unispec::dist_table(m, n, p)};
  });
}

unispec_status unispec_sample(const char* spec, uint64_t trials, uint64_t seed, unispec_table** out) {
  return guard([&] {
    require_out(out);
    const auto parsed = unispec::SamplerSpec::parse(required_text(spec, "sampler spec"));
    *out = new unispec_table{unispec::sample_table(parsed, trials, seed)};
  });
}

unispec_status unispec_stats(const char* kind, const unispec_stats_params* params, unispec_table** out) {
  return guard([&] {
    require_out(out);
    if (params == nullptr) unispec::throw_invalid("stats parameters are required");
    unispec::StatsParams sp;
    if (params->model) sp.model = unispec::parse_model(params->model);
    sp.n = params->n;
    sp.p = params->p;
    sp.r = params->r;
    sp.s = params->s;
    if (params->theta) sp.theta = unispec::Rational::parse(params->theta);
    if (params->lambda) sp.lambda = unispec::Partition::parse(params->lambda);
    *out = new unispec_table{unispec::stats_table(required_text(kind, "stats kind"), sp)};
  });
}

unispec_status unispec_verify(const char* suite, const unispec_verify_options* options, unispec_report** out) {
  return guard([&] {
    require_out(out);
    unispec::VerifyOptions vo;
    if (options) {
      vo.n_max = options->n_max;
      vo.n = options->n;
      if (options->prime_count > 0) {
        if (options->primes == nullptr) unispec::throw_invalid("prime list is null");
        vo.primes.assign(options->primes, options->primes + options->prime_count);
      }
      vo.trials = options->trials;
      vo.seed = options->seed;
    }
    *out = new unispec_report{unispec::run_verification(required_text(suite, "suite"), vo)};
  });
}

int unispec_report_passed(const unispec_report* r) { return r && r->report.passed() ? 1 : 0; }

size_t unispec_report_checks(const unispec_report* r) { return r ? r->report.checks.size() : 0; }

size_t unispec_report_failures(const unispec_report* r) { return r ? r->report.failures() : 0; }

char* unispec_report_json(const unispec_report* r) {
  if (!r) return nullptr;
  return dup_string(r->report.to_json().dump(2) + "\n");
}

void unispec_report_free(unispec_report* r) { delete r; }

unispec_status unispec_sampler_create(const char* spec, uint64_t seed, unispec_sampler** out) {
  return guard([&] {
    require_out(out);
    const auto parsed = unispec::SamplerSpec::parse(required_text(spec, "sampler spec"));
    unispec::Rng rng(seed);
    if (parsed.kind == unispec::SamplerSpec::Kind::Borodin)
      *out = new unispec_sampler{parsed, unispec::BorodinSampler(parsed.p, rng)};
    else
      *out = new unispec_sampler{parsed, unispec::CoinSampler(parsed.p, parsed.limit, rng)};
  });
}

unispec_status unispec_sampler_draw(unispec_sampler* s, char** partition) {
  return guard([&] {
    require_out(partition);
    if (s == nullptr) unispec::throw_invalid("sampler is null");
    unispec::Partition lambda;
    if (auto* b = std::get_if<unispec::BorodinSampler>(&s->sampler))
      lambda = b->run(s->spec.n);
    else
      lambda = std::get<unispec::CoinSampler>(s->sampler).run();
    *partition = dup_string(lambda.to_string());
  });
}

void unispec_sampler_free(unispec_sampler* s) { delete s; }

}  // extern "C"
