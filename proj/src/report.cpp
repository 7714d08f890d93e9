#include "tripos/report.hpp"

#include <sstream>

namespace tripos {

std::string emit_text(const Report& r) {
  std::ostringstream out;
  out << "check:   " << r.check_id << "\n";
  out << "anchor:  " << r.anchor << "\n";
  if (!r.params.empty()) out << "params:  " << r.params.dump() << "\n";
  out << "bounds:  " << (r.bounds.empty() ? "-" : r.bounds) << "\n";
  out << "verdict: " << verdict_str(r.verdict) << "\n";
  if (!r.witness.empty()) out << "witness: " << r.witness.dump() << "\n";
  out << "wall:    " << r.wall_ms << " ms\n";
  return out.str();
}

std::string emit_structured(const Report& r) {
  nlohmann::ordered_json j;
  j["check"] = r.check_id;
  j["anchor"] = r.anchor;
  j["params"] = r.params;
  j["bounds"] = r.bounds;
  j["verdict"] = verdict_str(r.verdict);
  j["witness"] = r.witness;
  return j.dump(2) + "\n";
}

int report_exit_code(const Report& r) {
  switch (r.verdict) {
    case Verdict::HoldsWithinBounds: return 0;
    case Verdict::Fails: return 1;
    case Verdict::CapExceeded: return 2;
  }
  return 3;
}

}  // namespace tripos
