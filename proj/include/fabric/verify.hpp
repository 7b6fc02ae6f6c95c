#pragma once

// Whole-fabric verification: runs every structural and curvature-law check
// over a materialized window and reports one result per check.

#include <string>
#include <vector>

#include "fabric/engine.hpp"

namespace fabric {

/// Per-check tolerances. `geometry` gates the incidence predicates
/// (tangency, orthogonality, concyclicity, through-carrier); the remaining
/// fields pin the law checks and are relative unless noted.
struct VerifyTolerances {
  double geometry = 1e-8;
  double delta_rel = 1e-9;        // frame differences vs 2d/r^2
  double law_rel = 1e-6;          // geometric bends vs closed form
  double recurrence = 1e-8;       // three-term recurrence, scaled by max(1, |term|)
  double descartes_rel = 1e-9;    // residual vs (sum of |bends|)^2
  double shared_rel = 1e-10;      // shared member vs direct inversion
  double anchor_rel = 1e-9;       // closed form re-anchored at every m
};

struct CheckResult {
  std::string name;
  bool pass = false;
  double worst = 0.0;  // largest residual-to-tolerance ratio seen
  std::string detail;  // worst offender, empty when nothing stood out
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
  std::string to_text() const;  // one line per check
};

VerificationReport verify_fabric(const Fabric& fabric, const VerifyTolerances& tol = {});

}  // namespace fabric
