// Copyright (c) 2026 the tsc-graphs authors
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "tsc/error.hpp"

namespace tsc {

// Coefficient vector over F_p, index i = coefficient of x^i.
using Coeffs = std::vector<long>;

// Nonnegative integer code of a field element: sum_i a_i * p^i with
// 0 <= a_i < p.  Code 0 is the zero element.
using Code = int32_t;

struct FieldSpec {
  long p = 0;
  int r = 0;
  Coeffs poly;  // monic, degree r, entries c0..cr
};

// A realized GF(p^r): log/antilog tables over a fixed primitive root,
// irreducible modulus, Frobenius by exponent arithmetic.  Immutable after
// construction and safe to share across threads.
class FieldTable {
 public:
  // Builds GF(p^r).  If poly is absent the lexicographically smallest monic
  // irreducible of degree r is used (coefficient vectors compared as base-p
  // integers, constant term least significant).  If omega is absent, x is
  // used when primitive, otherwise the smallest primitive element in the
  // same coefficient order.
  static std::shared_ptr<const FieldTable> build(
      long p, int r, std::optional<Coeffs> poly = std::nullopt,
      std::optional<Coeffs> omega = std::nullopt);

  static bool is_irreducible(long p, const Coeffs& poly);

  long p() const { return p_; }
  int r() const { return r_; }
  long q() const { return q_; }
  const Coeffs& poly() const { return spec_.poly; }
  const FieldSpec& spec() const { return spec_; }

  Code omega() const { return antilog_[1 % (q_ - 1)]; }
  Coeffs omega_coeffs() const { return decode(omega()); }

  Code encode(const Coeffs& c) const;
  Coeffs decode(Code a) const;

  long dlog(Code a) const {
    if (a == 0) throw Error(ErrorCode::ZeroHasNoLog, "dlog of zero element");
    return log_[a];
  }
  Code antilog(long e) const { return antilog_[mod_exp(e)]; }

  Code add(Code a, Code b) const;
  Code neg(Code a) const { return neg_[a]; }
  Code sub(Code a, Code b) const { return add(a, neg_[b]); }
  Code mul(Code a, Code b) const {
    if (a == 0 || b == 0) return 0;
    return antilog_[mod_exp(log_[a] + log_[b])];
  }
  Code inv(Code a) const {
    if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    return antilog_[mod_exp(-log_[a])];
  }
  Code pow(Code a, long n) const;

  // a^(p^s); s may be any integer >= 0.
  Code frobenius(Code a, long s) const;

  // Scalar multiple t*a for t in [0, p).
  Code scalar_mul(long t, Code a) const { return mul(static_cast<Code>(t), a); }

  long mod_exp(long e) const {
    long m = q_ - 1;
    e %= m;
    return e < 0 ? e + m : e;
  }

 private:
  FieldTable() = default;

  FieldSpec spec_;
  long p_ = 0;
  int r_ = 0;
  long q_ = 0;
  std::vector<Code> log_;      // size q, log_[0] = -1
  std::vector<Code> antilog_;  // size q-1
  std::vector<Code> neg_;      // size q
  std::vector<long> ppow_;     // p^0..p^r
};

using FieldRef = std::shared_ptr<const FieldTable>;

bool is_prime(long n);

}  // namespace tsc
