// Copyright (c) 2026 the tsc-graphs authors
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <cstdint>
#include <optional>

#include "tsc/graph.hpp"
#include "tsc/symmetry.hpp"

namespace tsc {

struct SearchConfig {
  ColorPermutation target;
  bool fix_first_column = true;
  bool prune_pair_sums = true;
  int thread_count = 1;
  std::uint64_t progress_interval = 10'000'000;
  bool count_all = false;  // keep enumerating past the first witness
};

struct SearchCertificate {
  enum class Outcome { WitnessFound, Exhausted };
  Outcome outcome = Outcome::Exhausted;
  std::optional<LinearMap> witness;
  std::uint64_t candidates_enumerated = 0;  // leaves fully verified
  std::uint64_t candidates_pruned = 0;      // leaves cut by column pruning
  std::uint64_t search_space = 0;           // constrained product space
  std::uint64_t witness_count = 0;          // only meaningful with count_all
  double wall_time_s = 0.0;
  bool fast_path = false;
  SearchConfig config;
};

// Per-column candidate vectors: column i may only be a vector of color
// target(color(e_i)).  Column 0 is pinned to the minimal-dlog vector of its
// class when fix_first_column is set.
std::vector<std::vector<Code>> column_candidates(const ColoredCayleyGraph& graph,
                                                 const ColorPermutation& target,
                                                 bool fix_first_column);

// Keep (true) iff for every pair of chosen columns (i, j) the sum has the
// color required of the image of e_i + e_j.
bool pair_sum_keep(const ColoredCayleyGraph& graph, const ColorPermutation& target,
                   const std::vector<Code>& columns);

// Depth-first search over column candidates for a matrix inducing the target
// color permutation; exact exhaustion counters.
SearchCertificate transposition_search(const ColoredCayleyGraph& graph,
                                       const SearchConfig& config);

// Same contract with a cyclic target (first-column pinning is disabled when
// the target moves color 0).
SearchCertificate cyclic_search(const ColoredCayleyGraph& graph,
                                const SearchConfig& config);

// Byte-coded variant for GF(2^r), r <= 8: matrix-vector product is the
// exclusive-or of the columns selected by the input bits.
SearchCertificate gf2_fast_path(const ColoredCayleyGraph& graph,
                                const SearchConfig& config);

// Number of invertible matrices inducing the identity color permutation.
std::uint64_t stabilizer_count(const ColoredCayleyGraph& graph,
                               int thread_count = 1);

}  // namespace tsc
