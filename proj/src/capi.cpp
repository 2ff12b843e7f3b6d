// extern "C" surface wrapping the core, per include/theta2/theta2.h.

#include "theta2/theta2.h"

#include <atomic>
#include <cstring>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "catalog.hpp"
#include "config.hpp"
#include "density_ref.hpp"
#include "error.hpp"
#include "expr.hpp"
#include "groebner.hpp"
#include "l3suite.hpp"
#include "ladder.hpp"
#include "poly.hpp"
#include "series.hpp"
#include "theta.hpp"

struct theta2_series {
  theta2::Series impl;
};

struct theta2_ctx {
  theta2::RunConfig cfg = theta2::RunConfig::defaults();
};

namespace {

thread_local std::string g_last_error;

int status_of(const theta2::Error& e) {
  switch (e.kind()) {
    case theta2::ErrorKind::kUsage: return THETA2_ERR_USAGE;
    case theta2::ErrorKind::kBudget: return THETA2_ERR_BUDGET;
    case theta2::ErrorKind::kDivisionByZero: return THETA2_ERR_DOMAIN;
    case theta2::ErrorKind::kPrecision: return THETA2_ERR_PRECISION;
    case theta2::ErrorKind::kInternal: return THETA2_ERR_INTERNAL;
  }
  return THETA2_ERR_INTERNAL;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    return THETA2_OK;
  } catch (const theta2::Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return THETA2_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int require(bool cond, const char* msg) {
  if (!cond) {
    g_last_error = msg;
    return THETA2_ERR_USAGE;
  }
  return THETA2_OK;
}

theta2::RunConfig config_of(const theta2_ctx* ctx) {
  return ctx != nullptr ? ctx->cfg : theta2::RunConfig::defaults();
}

std::string classes_json(const std::set<theta2::CongruenceClass>& classes) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& c : classes) {
    if (!first) os << ",";
    first = false;
    os << "{\"residue\":" << c.residue << ",\"modulus\":" << c.modulus << "}";
  }
  os << "]";
  return os.str();
}

}  // namespace

extern "C" {

const char* theta2_last_error(void) { return g_last_error.c_str(); }

void theta2_string_free(char* s) { std::free(s); }

theta2_ctx* theta2_ctx_new(void) { return new theta2_ctx(); }

void theta2_ctx_free(theta2_ctx* ctx) { delete ctx; }

int theta2_ctx_set_precision_ceiling(theta2_ctx* ctx, int64_t max_bits) {
  if (int rc = require(ctx && max_bits > 0, "positive ceiling required")) return rc;
  ctx->cfg.e_max = max_bits;
  return THETA2_OK;
}

int theta2_ctx_set_memory_ceiling(theta2_ctx* ctx, int64_t bytes) {
  if (int rc = require(ctx && bytes > 0, "positive ceiling required")) return rc;
  ctx->cfg.memory_bytes = bytes;
  return THETA2_OK;
}

int theta2_ctx_set_pair_budget(theta2_ctx* ctx, int64_t pairs) {
  if (int rc = require(ctx && pairs > 0, "positive budget required")) return rc;
  ctx->cfg.pair_budget = pairs;
  return THETA2_OK;
}

int theta2_ctx_set_parallelism(theta2_ctx* ctx, int workers) {
  if (int rc = require(ctx && workers >= 0, "workers must be >= 0")) return rc;
  ctx->cfg.workers = workers;
  return THETA2_OK;
}

int theta2_series_theta(int64_t l, int64_t i, int64_t max_exp,
                        theta2_series** out) {
  if (int rc = require(out != nullptr, "output handle required")) return rc;
  return guarded([&] {
    *out = new theta2_series{theta2::theta_series(l, i, max_exp)};
  });
}

int theta2_series_inverse(const theta2_series* s, theta2_series** out) {
  if (int rc = require(s && out, "series handle required")) return rc;
  return guarded([&] { *out = new theta2_series{s->impl.inverse()}; });
}

int theta2_series_add(const theta2_series* a, const theta2_series* b,
                      theta2_series** out) {
  if (int rc = require(a && b && out, "series handles required")) return rc;
  return guarded([&] { *out = new theta2_series{a->impl.add(b->impl)}; });
}

int theta2_series_mul(const theta2_series* a, const theta2_series* b,
                      theta2_series** out) {
  if (int rc = require(a && b && out, "series handles required")) return rc;
  return guarded([&] { *out = new theta2_series{a->impl.mul(b->impl)}; });
}

int theta2_series_square(const theta2_series* s, theta2_series** out) {
  if (int rc = require(s && out, "series handle required")) return rc;
  return guarded([&] { *out = new theta2_series{s->impl.square()}; });
}

int theta2_series_project(const theta2_series* s, uint64_t q, uint64_t j,
                          theta2_series** out) {
  if (int rc = require(s && out, "series handle required")) return rc;
  return guarded([&] { *out = new theta2_series{s->impl.project(q, j)}; });
}

int theta2_series_eval(int64_t l, const char* expression, int64_t max_exp,
                       theta2_series** out) {
  if (int rc = require(expression && out, "expression required")) return rc;
  return guarded([&] {
    *out = new theta2_series{
        theta2::expr_eval(theta2::expr_parse(expression), l, max_exp)};
  });
}

int theta2_series_coeff(const theta2_series* s, int64_t n, int* bit) {
  if (int rc = require(s && bit, "series handle required")) return rc;
  return guarded([&] { *bit = s->impl.coeff_at(n); });
}

int theta2_series_valuation(const theta2_series* s, int64_t* v) {
  if (int rc = require(s && v, "series handle required")) return rc;
  *v = s->impl.valuation();
  return THETA2_OK;
}

int theta2_series_bound(const theta2_series* s, int64_t* bound) {
  if (int rc = require(s && bound, "series handle required")) return rc;
  *bound = s->impl.bound();
  return THETA2_OK;
}

int theta2_series_is_zero(const theta2_series* s, int* zero) {
  if (int rc = require(s && zero, "series handle required")) return rc;
  *zero = s->impl.is_zero() ? 1 : 0;
  return THETA2_OK;
}

int theta2_series_dump(const theta2_series* s, char** out) {
  if (int rc = require(s && out, "series handle required")) return rc;
  return guarded([&] { *out = copy_string(s->impl.dump()); });
}

int theta2_series_support(const theta2_series* s, int64_t lo, int64_t hi,
                          char** out) {
  if (int rc = require(s && out, "series handle required")) return rc;
  return guarded([&] {
    std::ostringstream os;
    bool first = true;
    for (int64_t e : s->impl.support(lo, hi)) {
      if (!first) os << ' ';
      os << e;
      first = false;
    }
    *out = copy_string(os.str());
  });
}

void theta2_series_free(theta2_series* s) { delete s; }

int theta2_exceptional_set(int64_t l, char** out_json) {
  if (int rc = require(out_json != nullptr, "output required")) return rc;
  return guarded([&] {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (int64_t k : theta2::exceptional_set(l)) {
      if (!first) os << ",";
      os << k;
      first = false;
    }
    os << "]";
    *out_json = copy_string(os.str());
  });
}

int theta2_basic_classes(int64_t l, char** out_json) {
  if (int rc = require(out_json != nullptr, "output required")) return rc;
  return guarded(
      [&] { *out_json = copy_string(classes_json(theta2::basic_classes(l))); });
}

int theta2_ustar_classes(int64_t l, char** out_json) {
  if (int rc = require(out_json != nullptr, "output required")) return rc;
  return guarded(
      [&] { *out_json = copy_string(classes_json(theta2::ustar_classes(l))); });
}

int theta2_covered_residues(int64_t l, int64_t modulus, int64_t* count) {
  if (int rc = require(count != nullptr, "output required")) return rc;
  return guarded([&] { *count = theta2::covered_residue_count(l, modulus); });
}

int theta2_certify_quotient(const theta2_ctx* ctx, int64_t l, const char* u,
                            const char* v, int* certified) {
  if (int rc = require(u && v && certified, "u, v and output required")) return rc;
  return guarded([&] {
    const std::size_t m = static_cast<std::size_t>(l / 2);
    *certified = theta2::certify_quotient(theta2::poly_parse(m, u),
                                          theta2::poly_parse(m, v), l,
                                          config_of(ctx))
                     ? 1
                     : 0;
  });
}

int theta2_ideal_member(const theta2_ctx* ctx, int64_t l, const char* p,
                        const char* extra_gens, int* member) {
  if (int rc = require(p && member, "polynomial and output required")) return rc;
  return guarded([&] {
    const std::size_t m = static_cast<std::size_t>(l / 2);
    std::vector<theta2::Poly> gens = theta2::quintic_generators(l);
    if (extra_gens != nullptr && extra_gens[0] != '\0') {
      std::istringstream in(extra_gens);
      std::string piece;
      while (std::getline(in, piece, '|')) {
        if (!piece.empty()) gens.push_back(theta2::poly_parse(m, piece));
      }
    }
    theta2::IdealF2 ideal(m, std::move(gens));
    *member = theta2::ideal_member(theta2::poly_parse(m, p), ideal,
                                   config_of(ctx))
                  ? 1
                  : 0;
  });
}

int theta2_quotient_ladder(int64_t l, int64_t r, uint64_t q, uint64_t j,
                           char** u_text, char** v_text) {
  if (int rc = require(u_text && v_text, "outputs required")) return rc;
  return guarded([&] {
    const theta2::LadderResult res = theta2::quotient_ladder(l, r, q, j);
    *u_text = copy_string(res.u.to_string());
    *v_text = copy_string(res.v.to_string());
  });
}

int theta2_verify(const theta2_ctx* ctx, int64_t l_filter,
                  const char* id_filter, int64_t e_override, int include_slow,
                  char** out_jsonl, int64_t* failed, int64_t* budget_exceeded,
                  int64_t* matched) {
  if (int rc = require(out_jsonl && failed && budget_exceeded && matched,
                       "outputs required"))
    return rc;
  return guarded([&] {
    theta2::VerifyOptions opts;
    opts.l_filter = l_filter;
    if (id_filter != nullptr) opts.id_filter = id_filter;
    opts.E_override = e_override;
    opts.include_slow = include_slow != 0;
    const theta2::VerifySummary sum =
        theta2::run_catalog(theta2::builtin_catalog(), opts, config_of(ctx));
    std::ostringstream os;
    for (const auto& rep : sum.reports) os << rep.to_json() << "\n";
    *out_jsonl = copy_string(os.str());
    *failed = sum.failed;
    *budget_exceeded = sum.budget_exceeded;
    *matched = sum.matched;
  });
}

int theta2_density_count(const theta2_ctx* ctx, int64_t l, int64_t r,
                         int64_t residue, int64_t modulus, int64_t X,
                         int64_t* count) {
  if (int rc = require(count != nullptr, "output required")) return rc;
  return guarded([&] {
    *count =
        theta2::density_count(l, r, {residue, modulus}, X, config_of(ctx));
  });
}

int theta2_density_reference(const theta2_ctx* ctx, char** out_json,
                             int64_t* mismatches) {
  if (int rc = require(out_json && mismatches, "outputs required")) return rc;
  return guarded([&] {
    const theta2::RunConfig cfg = config_of(ctx);
    const auto rows = theta2::density_reference_rows();
    std::vector<int64_t> got(rows.size(), -1);
    std::vector<std::string> errors(rows.size());

    // group rows sharing one inverse series by (l, r)
    std::map<std::pair<int64_t, int64_t>, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      groups[{rows[i].l, rows[i].r}].push_back(i);
    }
    std::vector<std::vector<std::size_t>> work;
    for (auto& [key, idx] : groups) work.push_back(idx);

    // cap concurrency by the per-job series footprint (~6 working buffers
    // of E bits each during inversion)
    int64_t worst_bits = 1;
    for (const auto& row : rows) {
      worst_bits = std::max(
          worst_bits, row.residue + row.X * row.l * row.modulus + 2 * row.r * row.r);
    }
    const int64_t per_job_bytes = worst_bits / 8 * 6;
    const int64_t mem_cap =
        std::max<int64_t>(1, cfg.memory_bytes / std::max<int64_t>(1, per_job_bytes));

    std::atomic<std::size_t> next{0};
    auto runner = [&] {
      while (true) {
        const std::size_t w = next.fetch_add(1);
        if (w >= work.size()) break;
        for (std::size_t i : work[w]) {
          const auto& row = rows[i];
          try {
            got[i] = theta2::density_count(
                row.l, row.r, {row.residue, row.modulus}, row.X, cfg);
          } catch (const theta2::Error& e) {
            errors[i] = e.what();
          }
        }
      }
    };
    const int workers = std::max(
        1, std::min<int>(std::min<int64_t>(cfg.effective_workers(), mem_cap),
                         static_cast<int>(work.size())));
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(runner);
    runner();
    for (auto& t : pool) t.join();

    int64_t bad = 0;
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& row = rows[i];
      if (i != 0) os << ",";
      os << "{\"l\":" << row.l << ",\"r\":" << row.r
         << ",\"residue\":" << row.residue << ",\"modulus\":" << row.modulus
         << ",\"X\":" << row.X << ",\"expected\":" << row.expected;
      if (!errors[i].empty()) {
        os << ",\"error\":\"" << errors[i] << "\"";
        ++bad;
      } else {
        os << ",\"count\":" << got[i]
           << ",\"match\":" << (got[i] == row.expected ? "true" : "false");
        if (got[i] != row.expected) ++bad;
      }
      os << "}";
    }
    os << "]";
    *out_json = copy_string(os.str());
    *mismatches = bad;
  });
}

int theta2_l3_suite(int64_t n_max, char** out_jsonl, int64_t* failed) {
  if (int rc = require(out_jsonl && failed, "outputs required")) return rc;
  return guarded([&] {
    theta2::L3Options opts;
    opts.n_max = n_max;
    const auto reports = theta2::l3_suite(opts);
    std::ostringstream os;
    int64_t bad = 0;
    for (const auto& rep : reports) {
      os << rep.to_json() << "\n";
      if (rep.outcome == "fail") ++bad;
    }
    *out_jsonl = copy_string(os.str());
    *failed = bad;
  });
}

int theta2_partition_check(int64_t k_max, char** out_json, int* passed) {
  if (int rc = require(out_json && passed, "outputs required")) return rc;
  return guarded([&] {
    const theta2::CheckReport rep = theta2::partition_parity_check(k_max);
    *out_json = copy_string(rep.to_json());
    *passed = rep.passed() ? 1 : 0;
  });
}

}  // extern "C"
