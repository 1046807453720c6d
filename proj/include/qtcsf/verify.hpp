#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qtcsf/chromatic.hpp"
#include "qtcsf/json_io.hpp"
#include "qtcsf/xpoly.hpp"

namespace qtcsf {

struct VerifyParams {
  int n = 4;                // graph size, or top degree for "relations"
  std::optional<int> m;     // variable count; each suite has its own default
  int r = 4;                // top Pieri degree
  std::uint64_t seed = 20240607;
  int jobs = 1;
  int samples = 50;         // random inputs per (m, degree) in "relations"
};

struct VerifyFailure {
  std::string case_id;
  std::string expected;
  std::string actual;
};

struct VerifyReport {
  std::string suite;
  int cases = 0;
  std::vector<VerifyFailure> failures;  // in case order
  double elapsed = 0;                   // seconds

  bool passed() const { return failures.empty(); }
};

struct VerifyCase {
  std::string id;
  std::function<Verdict()> check;
};

const std::vector<std::string>& suite_names();

/// Builds the cases of a suite. Throws DomainError for an unknown name or
/// parameters violating a suite precondition.
std::vector<VerifyCase> suite_cases(const std::string& suite, const VerifyParams& params);

/// Runs cases on up to `jobs` threads; failures are reported in case order.
/// An exception thrown by a case counts as a failure.
VerifyReport run_cases(const std::string& suite, const std::vector<VerifyCase>& cases, int jobs);

VerifyReport run_suite(const std::string& suite, const VerifyParams& params);

/// Homogeneous polynomial of the given degree with a few random terms and
/// small random coefficients in Z[q^{±1}, t^{±1}].
XPoly random_xpoly(std::mt19937_64& rng, int m, int degree, int max_terms = 4);

/// Text report; the first failure is printed in full. Timing is left out so
/// that the text is reproducible.
std::string render_report(const VerifyReport& report);
json to_json(const VerifyReport& report);

}  // namespace qtcsf
