#pragma once

// Claim registry and the verification table: every check runs a computation,
// compares against a pinned expectation and yields one ClaimRecord.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hodge::report {

enum class Status { Pass, Fail, Evidence, Flagged };

std::string status_string(Status s);
/// Inverse of status_string; throws std::invalid_argument.
Status parse_status(const std::string& s);

struct ClaimRecord {
  std::string claim_id;  // "section<N>.claim<MM>", N the module position in module_names()
  std::string module;
  std::string check;     // selector used by the per-module CLI commands
  std::string topic;
  std::string expected;
  std::string computed;
  Status status = Status::Fail;

  bool operator==(const ClaimRecord& o) const;
};

/// Search and enumeration limits.
struct Budgets {
  std::size_t node_budget = 1'000'000;  // normalization search
  int max_enumeration_genus = 3;        // exhaustive homomorphism enumeration, 2 or 3
  int ladder_limit = 10;                // extra generators 1+i, 2+i, ... for W_K
  int span_rounds = 20;                 // closure rounds for W_F
  std::vector<int> primes{13, 17};      // finite-field locus comparison

  /// Flat key=value lines; '#' starts a comment. Unknown keys or bad values
  /// throw std::invalid_argument.
  static Budgets from_config_text(const std::string& text);
  static Budgets from_config_file(const std::string& path);
  /// Multiplies the search budgets by a positive factor (at least 1 each).
  void scale(double factor);
  /// Applies HODGE_BUDGET_SCALE if it is set; throws on a malformed value.
  void apply_environment();
};

/// Module names in registry order.
const std::vector<std::string>& module_names();

/// Records of one module in claim order. Throws std::invalid_argument for an unknown module.
std::vector<ClaimRecord> run_module(const std::string& module, const Budgets& budgets = {});

/// All modules, or one; sorted by claim_id.
std::vector<ClaimRecord> run_suite(const std::optional<std::string>& module = std::nullopt,
                                   const Budgets& budgets = {});

/// Records of one module whose check selector equals the given one.
std::vector<ClaimRecord> run_check(const std::string& module, const std::string& check, const Budgets& budgets = {});

std::string emit_json(const std::vector<ClaimRecord>& records);
std::string emit_markdown(const std::vector<ClaimRecord>& records);
/// Inverse of emit_json; throws on malformed input.
std::vector<ClaimRecord> parse_json(const std::string& text);

/// 0 iff no record has status FAIL.
int exit_code(const std::vector<ClaimRecord>& records);

}  // namespace hodge::report
