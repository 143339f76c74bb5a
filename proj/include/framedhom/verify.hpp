#pragma once

// Seeded property sweeps behind `framedhom verify`. Each suite checks a
// family of identities exactly and reports one line per property.

#include <cstdint>
#include <string>
#include <vector>

namespace framedhom {

struct VerifyOptions {
  int genus = 2;
  int trials = 200;
  std::uint64_t seed = 1;
};

struct PropertyResult {
  std::string name;
  bool passed = true;
  std::uint64_t checked = 0;
  std::string detail;  // first counterexample, or a summary of counts
};

struct SuiteReport {
  std::string suite;
  std::vector<PropertyResult> properties;
  bool passed() const;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Runs one suite ("all" runs every suite). Throws ValidationError for an
/// unknown name or an unsupported genus.
std::vector<SuiteReport> run_suite(const std::string& name, const VerifyOptions& options);

}  // namespace framedhom
