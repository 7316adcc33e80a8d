#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ef/perm_group.hpp"

namespace ef {

/// Number of prime factors of n counted with multiplicity; omega(1) = 0.
/// Throws InvalidInput for n = 0.
int omega(std::uint64_t n);

/// ((k+1) m (m+1) + 2) (k+3) / 2 — always integral for k, m >= 0.
long long bound_f(long long k, long long m);
/// (k+1) m (m+1) / 2 — always integral for k, m >= 0.
long long bound_f1(long long k, long long m);

enum class PrecOrder { Less, Greater, Equal };
/// Compares the prime-exponent vectors (i2, i3, i5, ...) of a and b
/// lexicographically by ascending prime.  Equal only for a = b.
/// Throws InvalidInput when either argument is zero.
PrecOrder prec_compare(std::uint64_t a, std::uint64_t b);

/// One verification outcome.  `verdict` is "pass", "fail", or
/// "skipped(<reason>)"; a fail's fields are enough to replay it alone.
struct VerificationReport {
  std::string check_id;
  std::string group_id;
  std::string element;  // canonical cycle string; empty when not element-based
  int n = -1;           // -1 when the check is not indexed by n
  std::map<std::string, long long> computed;
  std::string verdict;
  std::string mode = "exact";  // "exact" or "probabilistic"
  std::uint64_t seed = 0;
  long long runtime_ms = 0;
};

/// Single-line JSON rendering with a fixed key order; byte-stable for fixed
/// inputs and seed.
std::string report_json(const VerificationReport& r);

struct CorpusEntry {
  std::string name;
  PermGroup group = PermGroup::trivial(1);
  std::vector<std::string> tags;  // e.g. "soluble", "no-enumeration"
};

struct VerifyConfig {
  std::uint64_t seed = 42;
  int jobs = 4;
  bool timings = false;   // when false, runtime_ms is reported as 0
  bool weaken_f1 = false;  // self-test: replace f1 by f1 - 1 and expect fails
  /// Groups up to this order are swept over every element; larger enumerable
  /// groups fall back to conjugacy-class representatives (verdicts are
  /// conjugation-invariant, so nothing is lost).
  std::uint64_t full_sweep_limit = 1000;
  int t11_n_max = 3;   // Engel depth for the Fitting-height bound check
  int t1x_n_max = 2;   // Engel depth for the F*/D bound checks
  int baer_n_max = 6;  // left-Engel search depth for the Baer equivalence
  /// Replay filters; empty string / -1 match everything.
  std::string only_check;
  std::string only_group;
  std::string only_element;
  int only_n = -1;
};

/// Runs every applicable check over the corpus.  Deterministic for a fixed
/// seed: reports come back sorted by (check_id, group, element, n) and are
/// identical for any `jobs` value.  An empty corpus yields an empty list.
std::vector<VerificationReport> run_suite(const std::vector<CorpusEntry>& corpus,
                                          const VerifyConfig& cfg);

/// Builds the r-fold coordinate-cycling wreath setting over a nonabelian
/// simple template and checks the two wreath lemmas:
///  - the coordinate-restricted Engel values generate the full base (prime r);
///  - the Engel subgroup of phi over the whole of base<phi> is the base
///    (skipped with reason "too-large" when base<phi> exceeds the
///    enumeration limit).
std::vector<VerificationReport> verify_wreath_lemmas(const PermGroup& s_template,
                                                     int r, int n,
                                                     const VerifyConfig& cfg);

struct SuiteSummary {
  long long passes = 0;
  long long fails = 0;
  long long skips = 0;
  /// check_id -> (bound - least series index containing the element) -> count,
  /// over pass verdicts that computed both numbers.
  std::map<std::string, std::map<long long, long long>> slack_histogram;
  /// check_id -> number of non-skipped reports.
  std::map<std::string, long long> exercised;
};

SuiteSummary summarize(const std::vector<VerificationReport>& reports);

}  // namespace ef
