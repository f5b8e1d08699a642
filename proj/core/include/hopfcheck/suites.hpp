#pragma once

// Fixed verification suites grouped by scope. Each returns its reports in a
// fixed order so that output does not depend on timing.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfcheck/report.hpp"
#include "hopfcheck/rewrite.hpp"
#include "hopfcheck/scalars.hpp"

namespace hopfcheck {

struct SuiteOptions {
  /// Parameters (a1, a2); empty means symbolic over Q[a1, a2].
  std::optional<std::pair<Rational, Rational>> point;
  std::uint64_t seed = 1;
  /// Wall-clock budget for exhaustive associativity; 0 means unlimited.
  double budget_sec = 600;
  std::size_t fuel = kDefaultFuel;
};

/// Scope names accepted by run_scope, in the order "all" runs them.
const std::vector<std::string>& suite_scopes();

/// Word enumeration at a = (0, 0).
std::vector<Report> nichols_suite(const SuiteOptions& opt);
/// Ambiguities, basis and associativity of the 8-rule system.
std::vector<Report> diamond_suite(const SuiteOptions& opt);
/// Hopf axioms, Hopf ideal, c-identity, coradical and associated graded.
std::vector<Report> hopf_suite(const SuiteOptions& opt);
/// Isotypic filtration properties, the skew-primitive solver and the
/// Yetter-Drinfeld modules over S3.
std::vector<Report> lemmas_suite(const SuiteOptions& opt);
/// The parameter action, orbit equality and the isomorphisms Theta.
std::vector<Report> classify_suite(const SuiteOptions& opt);

/// Runs one scope or "all"; throws std::invalid_argument for unknown scopes.
std::vector<Report> run_scope(const std::string& scope, const SuiteOptions& opt);

}  // namespace hopfcheck
