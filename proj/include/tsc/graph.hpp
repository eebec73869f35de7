// Copyright (c) 2026 the tsc-graphs authors
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <string>
#include <variant>
#include <vector>

#include "tsc/field.hpp"
#include "tsc/linear_map.hpp"

namespace tsc {

// An element omega^e * alpha^s of GammaL_1(p^r); acts on a nonzero omega^i
// as omega^(p^s * i + e).
struct GammaElem {
  long e = 0;
  int s = 0;
};

// Translation-invariant k-coloring of K_q stored as color-of-difference
// table indexed by discrete log: color_of_exp()[j] = color(omega^j).
class ColoredCayleyGraph {
 public:
  ColoredCayleyGraph(FieldRef field, int k, std::vector<int> color_of_exp,
                     std::string label);

  const FieldTable& field() const { return *field_; }
  FieldRef field_ref() const { return field_; }
  int k() const { return k_; }
  const std::string& label() const { return label_; }
  const std::vector<int>& color_of_exp() const { return color_; }

  int color_of_exp(long e) const { return color_[field_->mod_exp(e)]; }
  // Color of a nonzero element code; -1 for zero (no self-edges).
  int color_of_code(Code a) const {
    return a == 0 ? -1 : color_[field_->dlog(a)];
  }
  // Edge color between distinct vertices u, v.
  int edge_color(Code u, Code v) const { return color_of_code(field_->sub(u, v)); }

  std::vector<long> color_class_sizes() const;

 private:
  FieldRef field_;
  int k_;
  std::vector<int> color_;
  std::string label_;
};

// One block structure on the (q^d-1)/(q-1) directions of F_q^d.  Vectors are
// lists of d component codes in the base field.
struct DirectionPartition {
  int d = 0;
  std::vector<std::vector<std::vector<long>>> blocks;  // block -> vector -> coeffs
};

// Generator for orbital colorings: either a semilinear element or an
// invertible matrix over F_p.
using OrbitalGenerator = std::variant<GammaElem, LinearMap>;

ColoredCayleyGraph gp_k(FieldRef field, int k);
ColoredCayleyGraph paley(FieldRef field);
ColoredCayleyGraph peisert(FieldRef field);

// k = (q^d-1)/(q-1) colors on F_q^d, one per direction; vertices flattened
// into GF(q^d) with the canonical modulus.
ColoredCayleyGraph direction_graph(FieldRef field_q, int d);

// Edge color = index of the partition block containing the direction of the
// difference vector.
ColoredCayleyGraph partition_direction_graph(FieldRef field_q, int d,
                                             const DirectionPartition& partition,
                                             const std::string& label = "");

// Colors = orbits of the generated 0-stabilizer on nonzero elements,
// indexed by smallest dlog per orbit.  Orbits must be closed under negation.
ColoredCayleyGraph orbital_graph(FieldRef field,
                                 const std::vector<OrbitalGenerator>& generators);

ColoredCayleyGraph merge_colors(const ColoredCayleyGraph& g,
                                const std::vector<int>& surjection);

}  // namespace tsc
