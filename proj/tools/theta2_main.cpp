// theta2 command-line toolkit, built entirely on the shared C API.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "theta2/theta2.h"

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct CtxHandle {
  theta2_ctx* ctx = theta2_ctx_new();
  ~CtxHandle() { theta2_ctx_free(ctx); }
};

struct StringOut {
  char* s = nullptr;
  ~StringOut() { theta2_string_free(s); }
};

struct SeriesOut {
  theta2_series* s = nullptr;
  ~SeriesOut() { theta2_series_free(s); }
};

int exit_for(int status) {
  switch (status) {
    case THETA2_OK: return kExitPass;
    case THETA2_ERR_BUDGET: return kExitBudget;
    case THETA2_ERR_USAGE: return kExitUsage;
    default: return kExitFail;
  }
}

int report_error(int status) {
  std::fprintf(stderr, "error: %s\n", theta2_last_error());
  return exit_for(status);
}

bool parse_window(const std::string& text, int64_t& lo, int64_t& hi) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) return false;
  try {
    lo = std::stoll(text.substr(0, dots));
    hi = std::stoll(text.substr(dots + 2));
  } catch (...) {
    return false;
  }
  return lo < hi;
}

struct CommonOpts {
  int64_t e_max = 0;
  int64_t memory_max = 0;
  int64_t pair_budget = 0;
  int workers = -1;

  void apply(theta2_ctx* ctx) const {
    if (e_max > 0) theta2_ctx_set_precision_ceiling(ctx, e_max);
    if (memory_max > 0) theta2_ctx_set_memory_ceiling(ctx, memory_max);
    if (pair_budget > 0) theta2_ctx_set_pair_budget(ctx, pair_budget);
    if (workers >= 0) theta2_ctx_set_parallelism(ctx, workers);
  }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--e-max", opts.e_max, "precision ceiling in bits");
  cmd->add_option("--memory-max", opts.memory_max, "memory ceiling in bytes");
  cmd->add_option("--pair-budget", opts.pair_budget,
                  "Groebner S-pair reduction budget");
  cmd->add_option("--workers", opts.workers, "worker threads (0 = all cores)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"characteristic-2 theta series toolkit"};
  app.require_subcommand(1);

  // ---- theta ----
  auto* cmd_theta = app.add_subcommand("theta", "print a theta series");
  int64_t t_l = 3, t_i = 1, t_max = 4096;
  cmd_theta->add_option("--l", t_l, "odd modulus")->required();
  cmd_theta->add_option("--i", t_i, "generator index")->required();
  cmd_theta->add_option("--max-exp,--E", t_max, "exponent bound (default 4096)");

  // ---- inverse ----
  auto* cmd_inverse =
      app.add_subcommand("inverse", "print the reciprocal of a theta series");
  int64_t i_l = 3, i_r = 1, i_max = 0;
  std::string i_window;
  cmd_inverse->add_option("--l", i_l, "odd modulus")->required();
  cmd_inverse->add_option("--r", i_r, "generator index, prime to l")->required();
  cmd_inverse->add_option("--window", i_window,
                          "half-open exponent window LO..HI");
  cmd_inverse->add_option("--max-exp,--E", i_max, "exponent bound");

  // ---- classes ----
  auto* cmd_classes =
      app.add_subcommand("classes", "print congruence class tables");
  int64_t c_l = 3;
  bool c_ustar = false, c_basic = false, c_exceptional = false;
  cmd_classes->add_option("--l", c_l, "odd modulus")->required();
  cmd_classes->add_flag("--ustar", c_ustar, "complement classes");
  cmd_classes->add_flag("--basic", c_basic, "basic classes");
  cmd_classes->add_flag("--exceptional", c_exceptional,
                        "exceptional integers");

  // ---- verify ----
  auto* cmd_verify =
      app.add_subcommand("verify", "run the identity catalog (JSON lines)");
  int64_t v_l = 0, v_E = 0;
  std::string v_id;
  bool v_slow = false;
  CommonOpts v_common;
  cmd_verify->add_option("--l", v_l, "restrict to one modulus");
  cmd_verify->add_option("--id", v_id, "entry id (trailing * for a prefix)");
  cmd_verify->add_option("--E", v_E, "override the recorded precision");
  cmd_verify->add_flag("--include-slow", v_slow,
                       "include the long-running certificates");
  add_common(cmd_verify, v_common);

  // ---- groebner ----
  auto* cmd_groebner =
      app.add_subcommand("groebner", "quotient certificates and membership");
  int64_t g_l = 5;
  std::string g_u, g_v, g_member, g_ideal = "N";
  std::vector<std::string> g_with;
  CommonOpts g_common;
  cmd_groebner->add_option("--l", g_l, "odd modulus")->required();
  cmd_groebner->add_option("--u", g_u, "numerator polynomial");
  cmd_groebner->add_option("--v", g_v, "denominator polynomial");
  cmd_groebner->add_option("--member", g_member, "polynomial to test");
  cmd_groebner->add_option("--ideal", g_ideal,
                           "ideal for membership (N = quintic relations)");
  cmd_groebner->add_option("--with", g_with,
                           "additional ideal generators (repeatable)");
  add_common(cmd_groebner, g_common);

  // ---- density ----
  auto* cmd_density =
      app.add_subcommand("density", "membership counts along a progression");
  int64_t d_l = 3, d_r = 1, d_class = 7, d_mod = 8, d_count = 131072;
  bool d_all = false;
  std::string d_format = "text";
  CommonOpts d_common;
  cmd_density->add_option("--l", d_l, "odd modulus");
  cmd_density->add_option("--r", d_r, "generator index, prime to l");
  cmd_density->add_option("--class", d_class, "class residue");
  cmd_density->add_option("--mod", d_mod, "class modulus (power of 2)");
  cmd_density->add_option("--count", d_count, "number of candidates");
  cmd_density->add_flag("--all-paper", d_all,
                        "run the embedded reference matrix and diff it");
  cmd_density->add_option("--format", d_format, "text | csv | json");
  add_common(cmd_density, d_common);

  // ---- partition ----
  auto* cmd_partition =
      app.add_subcommand("partition", "partition-parity equivalence check");
  int64_t p_kmax = 20000;
  cmd_partition->add_option("--kmax", p_kmax, "check k = 1..kmax");

  // ---- l3suite ----
  auto* cmd_l3 =
      app.add_subcommand("l3suite", "elementary checks over B(a) for l=3");
  int64_t s_nmax = 1000000;
  cmd_l3->add_option("--n-max", s_nmax, "scan members below this bound");

  // ---- ladder ----
  auto* cmd_ladder = app.add_subcommand(
      "ladder", "polynomial representatives of a projected reciprocal");
  int64_t la_l = 5, la_r = 1;
  uint64_t la_q = 8, la_j = 0;
  cmd_ladder->add_option("--l", la_l, "odd modulus")->required();
  cmd_ladder->add_option("--r", la_r, "generator index")->required();
  cmd_ladder->add_option("--q", la_q, "projection modulus")->required();
  cmd_ladder->add_option("--j", la_j, "projection residue")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  if (cmd_theta->parsed()) {
    SeriesOut s;
    if (int rc = theta2_series_theta(t_l, t_i, t_max, &s.s)) return report_error(rc);
    StringOut text;
    theta2_series_dump(s.s, &text.s);
    std::fputs(text.s, stdout);
    return kExitPass;
  }

  if (cmd_inverse->parsed()) {
    int64_t lo = 0, hi = 0;
    bool windowed = false;
    if (!i_window.empty()) {
      if (!parse_window(i_window, lo, hi)) {
        std::fprintf(stderr, "error: bad --window (expected LO..HI)\n");
        return kExitUsage;
      }
      windowed = true;
    } else if (i_max <= 0) {
      std::fprintf(stderr, "error: need --window or --max-exp\n");
      return kExitUsage;
    }
    // enough input precision for the requested part of the reciprocal
    const int64_t rsq = (i_r % i_l) * (i_r % i_l);
    const int64_t need = (windowed ? hi : i_max) + 2 * rsq * rsq + 2;
    SeriesOut theta;
    if (int rc = theta2_series_theta(i_l, i_r, need > 16 ? need : 16, &theta.s))
      return report_error(rc);
    SeriesOut inv;
    if (int rc = theta2_series_inverse(theta.s, &inv.s)) return report_error(rc);
    int64_t v = 0, bound = 0;
    theta2_series_valuation(inv.s, &v);
    theta2_series_bound(inv.s, &bound);
    if (windowed) {
      StringOut support;
      if (int rc = theta2_series_support(inv.s, lo, hi, &support.s))
        return report_error(rc);
      std::printf("v=%lld E=%lld\n%s\n", static_cast<long long>(v),
                  static_cast<long long>(bound), support.s);
    } else {
      StringOut support;
      if (int rc = theta2_series_support(inv.s, v, i_max, &support.s))
        return report_error(rc);
      std::printf("v=%lld E=%lld\n%s\n", static_cast<long long>(v),
                  static_cast<long long>(bound), support.s);
    }
    return kExitPass;
  }

  if (cmd_classes->parsed()) {
    if (c_ustar + c_basic + c_exceptional != 1) {
      std::fprintf(stderr,
                   "error: pick exactly one of --ustar, --basic, --exceptional\n");
      return kExitUsage;
    }
    StringOut out;
    int rc = c_exceptional ? theta2_exceptional_set(c_l, &out.s)
             : c_basic     ? theta2_basic_classes(c_l, &out.s)
                           : theta2_ustar_classes(c_l, &out.s);
    if (rc != THETA2_OK) return report_error(rc);
    const json rows = json::parse(out.s);
    if (c_exceptional) {
      for (const auto& k : rows) std::printf("%lld\n", k.get<long long>());
    } else {
      for (const auto& row : rows) {
        std::printf("%lld mod %lld\n", row["residue"].get<long long>(),
                    row["modulus"].get<long long>());
      }
    }
    return kExitPass;
  }

  if (cmd_verify->parsed()) {
    CtxHandle ctx;
    v_common.apply(ctx.ctx);
    StringOut out;
    int64_t failed = 0, budget = 0, matched = 0;
    int rc = theta2_verify(ctx.ctx, v_l, v_id.empty() ? nullptr : v_id.c_str(),
                           v_E, v_slow ? 1 : 0, &out.s, &failed, &budget,
                           &matched);
    if (rc != THETA2_OK) return report_error(rc);
    std::fputs(out.s, stdout);
    if (matched == 0) {
      std::fprintf(stderr, "error: no catalog entry matches the filter\n");
      return kExitUsage;
    }
    if (failed > 0) return kExitFail;
    if (budget > 0) return kExitBudget;
    return kExitPass;
  }

  if (cmd_groebner->parsed()) {
    CtxHandle ctx;
    g_common.apply(ctx.ctx);
    json out;
    if (!g_member.empty()) {
      if (g_ideal != "N") {
        std::fprintf(stderr, "error: --ideal must be N (use --with for extras)\n");
        return kExitUsage;
      }
      std::string extras;
      for (const auto& w : g_with) {
        if (!extras.empty()) extras += "|";
        extras += w;
      }
      int member = 0;
      int rc = theta2_ideal_member(ctx.ctx, g_l, g_member.c_str(),
                                   extras.empty() ? nullptr : extras.c_str(),
                                   &member);
      if (rc != THETA2_OK) return report_error(rc);
      out = {{"l", g_l}, {"member", member == 1}};
      std::printf("%s\n", out.dump().c_str());
      return member == 1 ? kExitPass : kExitFail;
    }
    if (g_u.empty() || g_v.empty()) {
      std::fprintf(stderr, "error: need --u and --v (or --member)\n");
      return kExitUsage;
    }
    int certified = 0;
    int rc = theta2_certify_quotient(ctx.ctx, g_l, g_u.c_str(), g_v.c_str(),
                                     &certified);
    if (rc != THETA2_OK) return report_error(rc);
    out = {{"l", g_l}, {"equal", certified == 1}};
    std::printf("%s\n", out.dump().c_str());
    return certified == 1 ? kExitPass : kExitFail;
  }

  if (cmd_density->parsed()) {
    CtxHandle ctx;
    d_common.apply(ctx.ctx);
    if (d_all) {
      StringOut out;
      int64_t mismatches = 0;
      int rc = theta2_density_reference(ctx.ctx, &out.s, &mismatches);
      if (rc != THETA2_OK) return report_error(rc);
      const json rows = json::parse(out.s);
      if (d_format == "json") {
        std::printf("%s\n", rows.dump().c_str());
      } else if (d_format == "csv") {
        std::printf("l,r,residue,modulus,X,count,expected,match\n");
        for (const auto& row : rows) {
          std::printf("%lld,%lld,%lld,%lld,%lld,%lld,%lld,%s\n",
                      row["l"].get<long long>(), row["r"].get<long long>(),
                      row["residue"].get<long long>(),
                      row["modulus"].get<long long>(),
                      row["X"].get<long long>(),
                      row.value("count", -1LL), row["expected"].get<long long>(),
                      row.value("match", false) ? "true" : "false");
        }
      } else {
        for (const auto& row : rows) {
          std::printf("l=%-3lld r=%-2lld %lld mod %-4lld X=%-7lld -> %lld (expected %lld) %s\n",
                      row["l"].get<long long>(), row["r"].get<long long>(),
                      row["residue"].get<long long>(),
                      row["modulus"].get<long long>(),
                      row["X"].get<long long>(), row.value("count", -1LL),
                      row["expected"].get<long long>(),
                      row.value("match", false) ? "ok" : "MISMATCH");
        }
      }
      return mismatches == 0 ? kExitPass : kExitFail;
    }
    const auto t0 = std::chrono::steady_clock::now();
    int64_t count = 0;
    int rc = theta2_density_count(ctx.ctx, d_l, d_r, d_class, d_mod, d_count,
                                  &count);
    if (rc != THETA2_OK) return report_error(rc);
    const int64_t ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
    if (d_format == "json") {
      const json row = {{"l", d_l},     {"r", d_r},         {"residue", d_class},
                        {"modulus", d_mod}, {"X", d_count}, {"count", count},
                        {"elapsed_ms", ms}};
      std::printf("%s\n", row.dump().c_str());
    } else if (d_format == "csv") {
      std::printf("l,r,residue,modulus,X,count,elapsed_ms\n");
      std::printf("%lld,%lld,%lld,%lld,%lld,%lld,%lld\n",
                  static_cast<long long>(d_l), static_cast<long long>(d_r),
                  static_cast<long long>(d_class),
                  static_cast<long long>(d_mod),
                  static_cast<long long>(d_count),
                  static_cast<long long>(count), static_cast<long long>(ms));
    } else {
      std::printf("%lld\n", static_cast<long long>(count));
    }
    return kExitPass;
  }

  if (cmd_partition->parsed()) {
    StringOut out;
    int passed = 0;
    int rc = theta2_partition_check(p_kmax, &out.s, &passed);
    if (rc != THETA2_OK) return report_error(rc);
    std::printf("%s\n", out.s);
    return passed == 1 ? kExitPass : kExitFail;
  }

  if (cmd_l3->parsed()) {
    StringOut out;
    int64_t failed = 0;
    int rc = theta2_l3_suite(s_nmax, &out.s, &failed);
    if (rc != THETA2_OK) return report_error(rc);
    std::fputs(out.s, stdout);
    return failed == 0 ? kExitPass : kExitFail;
  }

  if (cmd_ladder->parsed()) {
    StringOut u, v;
    int rc = theta2_quotient_ladder(la_l, la_r, la_q, la_j, &u.s, &v.s);
    if (rc != THETA2_OK) return report_error(rc);
    std::printf("u = %s\nv = %s\n", u.s, v.s);
    return kExitPass;
  }

  return kExitUsage;
}
