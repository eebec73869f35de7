// Copyright (c) 2026 the tsc-graphs authors
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <string>
#include <vector>

#include "tsc/json_io.hpp"
#include "tsc/semilinear.hpp"

namespace tsc {

struct CaseKey {
  long p = 0;
  int r = 0;
  int k = 0;
  bool operator==(const CaseKey& o) const {
    return p == o.p && r == o.r && k == o.k;
  }
};

struct ReplayOptions {
  bool include_long = false;  // adds the hours-budget 2^8 case
  int threads = 1;
  std::string cache_dir;  // empty = no certificate cache
};

// The parameter table of supported classification cases.
std::vector<CaseKey> default_replay_cases(bool include_long);

// Builds the canonical field for a case (fixed modulus for 7^4).
FieldRef case_field(long p, int r);

// Line-by-line correspondence exponent -> normalized vector -> color for the
// 121-vertex exceptional graph, machine-readable.
Json table1_correspondence();

// The exceptional 3-colored direction-partition graphs.
ColoredCayleyGraph exceptional_graph_25();
ColoredCayleyGraph exceptional_graph_121();

// Runs the configured search, consulting/filling the certificate cache
// (keyed by SHA-256 of graph record + config + kind) when cache_dir is set.
// Result json = certificate + {"kind", "cache_hit"}.
Json cached_search(const ColoredCayleyGraph& graph, const SearchConfig& config,
                   const std::string& kind, const std::string& cache_dir);

// Full pipeline over the given cases: Foulser enumeration, overgroup
// analysis, graph construction, searches, verdicts.  Per-case failures are
// recorded and the pipeline continues.
Json replay_classification(const std::vector<CaseKey>& cases,
                           const ReplayOptions& options);

}  // namespace tsc
