#pragma once

#include <string>

#include "rmt/config.hpp"

namespace rmt {

inline constexpr const char* kLibraryVersion = "0.1.0";

// Runs one experiment described by a resolved key-value config and returns
// the CSV artifact. Deterministic given (config, seed); replicates are
// distributed over worker threads with per-index result slots, so the output
// does not depend on the thread count. The experiment kind is taken from the
// "experiment" key: gen | moment-scan | modified-moment-scan | edge-mc |
// band-scan | et-report | nb-verify | diagram-catalog | ad-series.
std::string run_experiment(const KeyValue& cfg);

}  // namespace rmt
