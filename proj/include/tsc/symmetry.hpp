// Copyright (c) 2026 the tsc-graphs authors
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tsc/graph.hpp"
#include "tsc/semilinear.hpp"

namespace tsc {

using ColorPermutation = std::vector<int>;

// Zero-stabilizer used to certify arc-transitivity: either a Foulser triple
// inside GammaL_1 or an explicit list of matrices.
using Stabilizer = std::variant<FoulserTriple, std::vector<LinearMap>>;

struct ArcTransitivityReport {
  bool arc_transitive = false;
  long stabilizer_orbits = 0;
  std::string detail;
};

// True iff the stabilizer's orbit partition on nonzero elements equals the
// color partition exactly (translations supplied implicitly).
ArcTransitivityReport verify_arc_transitive(const ColoredCayleyGraph& graph,
                                            const Stabilizer& stabilizer);

struct LinesReport {
  bool monochromatic = false;
  std::optional<Code> violating_line;  // representative of the first bad line
};

// True iff every 1-dimensional subspace over the prime subfield minus zero
// is single-colored.
LinesReport lines_monochromatic(const ColoredCayleyGraph& graph);

// Induced permutation of colors if B maps each color class onto a single
// class; otherwise nullopt with a witness vector filled in.
std::optional<ColorPermutation> induced_color_perm_matrix(
    const LinearMap& b, const ColoredCayleyGraph& graph,
    Code* witness = nullptr);

struct ColorGroupSummary {
  long order = 0;
  bool is_symmetric = false;
  bool is_cyclic_transitive = false;
  std::vector<ColorPermutation> generators;
  std::vector<ColorPermutation> elements;
};

ColorGroupSummary color_symmetry_group(const ColoredCayleyGraph& graph,
                                       const std::vector<LinearMap>& witnesses);

// All invertible matrices inducing the identity color permutation.
// Throws EnumerationTooLarge beyond the full-enumeration regime.
std::vector<LinearMap> linear_stabilizer(const ColoredCayleyGraph& graph,
                                         long max_gl_order = 10'000'000);

struct IsoOptions {
  bool permute_colors = false;
  long max_vertices = 256;
};

// Color-preserving vertex bijection (entry v = image of vertex code v), or
// nullopt after exhausting the backtracking space.
std::optional<std::vector<Code>> iso_colored(const ColoredCayleyGraph& a,
                                             const ColoredCayleyGraph& b,
                                             const IsoOptions& opts = {});

struct TscReport {
  ArcTransitivityReport arc;
  ColorGroupSummary colors;
  std::string verdict;  // TOTALLY_SYMMETRIC or UNRESOLVED
};

TscReport verify_tsc(const ColoredCayleyGraph& graph, const Stabilizer& stabilizer,
                     const std::vector<LinearMap>& witnesses);

}  // namespace tsc
