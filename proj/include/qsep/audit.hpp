#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qsep/tolerances.hpp"

namespace qsep {

struct AuditOptions {
  int n = 1000;
  std::uint64_t seed = 42;
  int jobs = 1;
  double tolerance_scale = 1.0;
};

struct AuditProperty {
  std::string name;
  int passed = 0;
  int total = 0;
  std::vector<std::string> failures;  // "sample=<i> seed=<s> <detail>"

  bool ok() const { return passed == total; }
};

struct AuditSummary {
  AuditOptions options;
  std::vector<AuditProperty> properties;

  bool ok() const;
  /// One line per property plus a closing verdict; identical for identical options.
  void print(std::ostream& out) const;
};

/// Seed of the i-th random sample (SplitMix64 of the base seed and index),
/// independent of how samples are spread across workers.
std::uint64_t sample_seed(std::uint64_t base, std::uint64_t index);

/// Runs every property sweep on `n` random samples plus the fixed registry
/// and Werner-grid checks. Samples are fanned out over `jobs` threads and
/// merged in sample order.
AuditSummary run_audit(const AuditOptions& options);

}  // namespace qsep
