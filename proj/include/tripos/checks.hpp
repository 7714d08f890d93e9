#pragma once

#include <map>
#include <string>
#include <vector>

#include "tripos/core.hpp"
#include "tripos/report.hpp"

namespace tripos {

/// A fully explicit check invocation: every cap lives here, never inside a
/// checker, so runs are self-documenting and reproducible.
struct CheckSpec {
  std::string check_id;
  std::string flavor = "identity";  // identity | power:N | bool2 | chain3 | chain4 | bool4
  std::string algebra_text;         // overrides flavor with a parsed algebra when nonempty
  std::map<std::string, long long> params;
  std::map<std::string, std::string> strings;

  long long param(const std::string& key, long long fallback) const;
  std::string str(const std::string& key, const std::string& fallback) const;
};

struct CheckInfo {
  std::string id;
  std::string anchor;
  std::string summary;
};

/// The catalog of runnable checks, each listed exactly once.
std::vector<CheckInfo> list_gallery();

/// Dispatches to the named checker. Deterministic for a fixed spec; throws
/// std::invalid_argument for unknown ids or malformed inputs, and translates
/// CapExceeded into the cap-exceeded verdict.
Report run_check(const CheckSpec& spec);

/// Resolves the spec's flavor into an instance ("identity" = power:1).
TriposInstance instance_from_spec(const CheckSpec& spec);

}  // namespace tripos
