#pragma once

#include <string>

namespace tripos {

/// Every checker verdict is three-valued: the statements being checked
/// quantify over infinite classes, so "holds" is always holds-within-bounds,
/// and the bounds travel with the verdict.
enum class Verdict { HoldsWithinBounds, Fails, CapExceeded };

inline std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::HoldsWithinBounds: return "holds-within-bounds";
    case Verdict::Fails: return "fails";
    case Verdict::CapExceeded: return "cap-exceeded";
  }
  return "unknown";
}

}  // namespace tripos
