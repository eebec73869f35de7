// Copyright (c) 2026 the tsc-graphs authors
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <vector>

#include "tsc/field.hpp"

namespace tsc {

// r x r matrix over F_p acting on the vertex vector space.  Entries are
// row-major, reduced into [0, p).
struct LinearMap {
  long p = 0;
  int r = 0;
  std::vector<long> m;  // size r*r, m[i*r+j] = entry (row i, col j)

  LinearMap() = default;
  LinearMap(long p_, int r_, std::vector<long> entries);

  long at(int i, int j) const { return m[i * r + j]; }
  long& at(int i, int j) { return m[i * r + j]; }

  static LinearMap identity(long p, int r);
  // Matrix with the given columns, each a field-element code.
  static LinearMap from_columns(const FieldTable& f, const std::vector<Code>& cols);

  Code apply(const FieldTable& f, Code v) const;
  LinearMap compose(const LinearMap& other) const;  // this * other
  bool invertible() const;

  bool operator==(const LinearMap& o) const { return p == o.p && r == o.r && m == o.m; }
  bool operator<(const LinearMap& o) const { return m < o.m; }
};

}  // namespace tsc
