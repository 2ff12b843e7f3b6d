#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "config.hpp"

namespace theta2 {

// One verifiable identity.  `numeric` entries compare two expression trees
// as series at precision E; `groebner` entries certify a quotient through
// the quintic ideal; `member` entries check ideal membership; `ladder`
// entries run the quotient ladder (and optionally certify its output).
struct IdentityEntry {
  std::string id;
  int64_t l = 3;
  int64_t E = 4096;
  std::string lhs, rhs;  // numeric method when nonempty
  std::optional<std::pair<std::string, std::string>> groebner_uv;
  std::optional<std::string> member_u;
  std::optional<std::pair<uint64_t, uint64_t>> ladder_qj;
  bool ladder_certify = false;
  bool slow = false;  // excluded unless include_slow is requested
  std::string anchor;

  bool has_method() const {
    return !lhs.empty() || groebner_uv || member_u || ladder_qj;
  }
};

struct CheckReport {
  std::string id;
  std::string method;   // numeric | groebner | member | ladder | ladder+groebner
  std::string outcome;  // pass | fail | budget-exceeded
  std::string witness;  // first mismatching exponent or certificate detail
  int64_t ms = 0;

  std::string to_json() const;
  bool passed() const { return outcome == "pass"; }
};

// Parses the record format:
//   entry <id> / l <n> / E <n> / numeric <lhs> == <rhs> /
//   groebner <u> | <v> / member <u> / ladder <q> <j> [certify] /
//   slow / anchor <text> / end
std::vector<IdentityEntry> parse_catalog(const std::string& text);

// The full built-in catalog: the declarative record file plus the generated
// families (even-part, pair-product and quintic projection identities, and
// the U* ladder certifications per modulus row).
const std::vector<IdentityEntry>& builtin_catalog();

// Runs one entry (all of its methods).
std::vector<CheckReport> run_identity(const IdentityEntry& entry,
                                      const RunConfig& cfg,
                                      int64_t E_override = 0);

struct VerifyOptions {
  int64_t l_filter = 0;   // 0 = all
  std::string id_filter;  // empty = all; exact id or prefix ending in '*'
  int64_t E_override = 0;
  bool include_slow = false;
};

struct VerifySummary {
  std::vector<CheckReport> reports;
  int64_t matched = 0;
  int64_t failed = 0;
  int64_t budget_exceeded = 0;
};

VerifySummary run_catalog(const std::vector<IdentityEntry>& entries,
                          const VerifyOptions& opts, const RunConfig& cfg);

}  // namespace theta2
