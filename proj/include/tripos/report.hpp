#pragma once

#include <string>

#include <json.hpp>

#include "tripos/verdict.hpp"

namespace tripos {

/// A checker run, ready for emission. The structured format is byte-stable
/// for a fixed spec: wall time appears only in the text rendering.
struct Report {
  std::string check_id;
  std::string anchor;   // the mathematical claim the check pins down
  std::string bounds;   // the caps the verdict is relative to
  Verdict verdict = Verdict::Fails;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  nlohmann::ordered_json witness = nlohmann::ordered_json::object();
  double wall_ms = 0.0;
};

std::string emit_text(const Report& r);
std::string emit_structured(const Report& r);

/// 0 holds, 1 fails, 2 cap-exceeded (3 is reserved for input errors).
int report_exit_code(const Report& r);

}  // namespace tripos
