// Copyright (c) 2026 the tsc-graphs authors
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <optional>
#include <vector>

#include "tsc/graph.hpp"

namespace tsc {

// Standard-form generating triple (d, e, s) for a subgroup
// <omega^d, omega^e alpha^s> of GammaL_1(p^r).  s is stored in [1, r];
// s = r means the subgroup has no Frobenius part.
struct FoulserTriple {
  long d = 1;
  long e = 0;
  int s = 1;

  bool operator==(const FoulserTriple& o) const {
    return d == o.d && e == o.e && s == o.s;
  }
};

struct SemilinearSubgroup {
  FoulserTriple triple;
  std::vector<GammaElem> elements;
};

// Composition as functions: result(x) = a(b(x)).
GammaElem gamma_compose(const GammaElem& a, const GammaElem& b, const FieldTable& f);

// Image of the nonzero element with discrete log i under omega^e alpha^s.
long gamma_apply_exp(const GammaElem& g, long i, const FieldTable& f);

bool is_valid_triple(const FoulserTriple& t, const FieldTable& f);

// Unique standard form of the subgroup generated by the given elements.
FoulserTriple standard_form(const std::vector<GammaElem>& generators,
                            const FieldTable& f);

// All (p^r-1)r/(ds) elements of the subgroup, sorted by (s, e).
std::vector<GammaElem> subgroup_elements(const FoulserTriple& t, const FieldTable& f);

long subgroup_order(const FoulserTriple& t, const FieldTable& f);

// Orbits of the subgroup on nonzero-element exponents; blocks ordered by
// minimal exponent.
std::vector<std::vector<long>> orbit_partition(const FoulserTriple& t,
                                               const FieldTable& f);

// All valid standard-form triples over the field (no orbit filtering).
std::vector<FoulserTriple> all_standard_triples(const FieldTable& f);

// Standard-form triples whose orbit partition has exactly k equal orbits and
// which survive as stabilizer candidates: the subgroup is the full setwise
// stabilizer of its own partition inside GammaL_1, and the partition
// normalizer in GammaL_1 acts transitively on the blocks.
std::vector<FoulserTriple> enumerate_k_equal_orbit_subgroups(const FieldTable& f,
                                                             int k);

// Unfiltered variant: every triple with exactly k equal orbits.
std::vector<FoulserTriple> enumerate_equal_orbit_triples(const FieldTable& f, int k);

struct ColorActionSummary {
  FoulserTriple overgroup;
  std::vector<std::vector<int>> color_perms;  // induced by overgroup generators
  long group_order = 0;                       // induced group on colors
  bool transitive = false;
  bool cyclic = false;
  bool symmetric = false;
};

// Standard-form M0 containing A with index k whose action permutes A's
// orbits, with the induced permutation group on colors summarized.
std::vector<ColorActionSummary> enumerate_color_transitive_overgroups(
    const FoulserTriple& a, const FieldTable& f, int k);

struct ColorPermRejection {
  long witness_exp_a = 0;  // two same-colored elements...
  long witness_exp_b = 0;  // ...mapped to different classes
};

// Induced permutation of colors if g maps each color class onto a single
// class; otherwise nullopt with the rejection witness filled in.
std::optional<std::vector<int>> induced_color_perm(const GammaElem& g,
                                                   const ColoredCayleyGraph& graph,
                                                   ColorPermRejection* rejection = nullptr);

// Matrix whose action on coordinate vectors (basis 1, x, ..., x^(r-1))
// agrees with g on all field elements.
LinearMap embed_semilinear_as_matrix(const GammaElem& g, const FieldTable& f);

}  // namespace tsc
