// Copyright (c) 2026 the tsc-graphs authors
// Licensed under the Apache License, Version 2.0.

#include "tsc/linear_map.hpp"

namespace tsc {

namespace {
long mod(long a, long m) {
  a %= m;
  return a < 0 ? a + m : a;
}
}  // namespace

LinearMap::LinearMap(long p_, int r_, std::vector<long> entries)
    : p(p_), r(r_), m(std::move(entries)) {
  if (static_cast<int>(m.size()) != r * r)
    throw Error(ErrorCode::InvalidArgument, "matrix entry count != r*r");
  for (auto& e : m) e = mod(e, p);
}

LinearMap LinearMap::identity(long p, int r) {
  std::vector<long> e(r * r, 0);
  for (int i = 0; i < r; ++i) e[i * r + i] = 1;
  return LinearMap(p, r, std::move(e));
}

LinearMap LinearMap::from_columns(const FieldTable& f, const std::vector<Code>& cols) {
  int r = f.r();
  std::vector<long> e(r * r, 0);
  for (int j = 0; j < r; ++j) {
    Coeffs c = f.decode(cols[j]);
    for (int i = 0; i < r; ++i) e[i * r + j] = c[i];
  }
  return LinearMap(f.p(), r, std::move(e));
}

Code LinearMap::apply(const FieldTable& f, Code v) const {
  Coeffs in = f.decode(v);
  Coeffs out(r, 0);
  for (int i = 0; i < r; ++i) {
    long acc = 0;
    for (int j = 0; j < r; ++j) acc += at(i, j) * in[j];
    out[i] = acc % p;
  }
  return f.encode(out);
}

LinearMap LinearMap::compose(const LinearMap& other) const {
  std::vector<long> e(r * r, 0);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      long a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < r; ++j)
        e[i * r + j] = (e[i * r + j] + a * other.at(k, j)) % p;
    }
  return LinearMap(p, r, std::move(e));
}

bool LinearMap::invertible() const {
  // Gaussian elimination mod p.
  std::vector<long> a = m;
  for (int col = 0; col < r; ++col) {
    int pivot = -1;
    for (int row = col; row < r; ++row)
      if (a[row * r + col] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) return false;
    if (pivot != col)
      for (int j = 0; j < r; ++j) std::swap(a[pivot * r + j], a[col * r + j]);
    long inv = 1, v = a[col * r + col];
    for (long t = 1; t < p; ++t)
      if (v * t % p == 1) {
        inv = t;
        break;
      }
    for (int j = 0; j < r; ++j) a[col * r + j] = a[col * r + j] * inv % p;
    for (int row = 0; row < r; ++row) {
      if (row == col) continue;
      long factor = a[row * r + col];
      if (factor == 0) continue;
      for (int j = 0; j < r; ++j)
        a[row * r + j] = mod(a[row * r + j] - factor * a[col * r + j], p);
    }
  }
  return true;
}

}  // namespace tsc
