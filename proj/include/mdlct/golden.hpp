#pragma once

#include <ostream>

#include "mdlct/dataset.hpp"

namespace mdlct {

/// Built-in known-good fixture: 10 transactions over items {1..5} with
/// hand-verified mining, code-table and generation results. Used by the
/// `golden` self-check command and the test suite.
Dataset golden_dataset();

/// Runs the self-checks, printing one "ok"/"FAIL" line per check to `out`.
/// Returns true when everything passed.
bool run_golden(std::ostream& out);

}  // namespace mdlct
