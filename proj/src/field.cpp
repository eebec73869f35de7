// Copyright (c) 2026 the tsc-graphs authors
// Licensed under the Apache License, Version 2.0.

#include "tsc/field.hpp"

#include <algorithm>
#include <numeric>

namespace tsc {

namespace {

constexpr long kMaxQ = 1L << 24;

long mod(long a, long m) {
  a %= m;
  return a < 0 ? a + m : a;
}

// Dense polynomial over F_p, index = degree.  Trailing zeros allowed.
using Poly = std::vector<long>;

int degree(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

Poly poly_mod(Poly f, const Poly& m, long p) {
  int dm = degree(m);
  long lead_inv = 1;  // modulus is monic in all callers
  for (int i = degree(f); i >= dm; --i) {
    long c = mod(f[i] * lead_inv, p);
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j)
      f[i - dm + j] = mod(f[i - dm + j] - c * m[j], p);
  }
  f.resize(dm);
  return f;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, long p) {
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = mod(c[i + j] + a[i] * b[j], p);
  }
  return poly_mod(std::move(c), m, p);
}

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(long n) {
  if (n < 2) return false;
  for (long f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

bool FieldTable::is_irreducible(long p, const Coeffs& poly) {
  int d = static_cast<int>(poly.size()) - 1;
  if (d < 1 || poly[d] != 1)
    throw Error(ErrorCode::InvalidArgument, "modulus must be monic of degree >= 1");
  if (d == 1) return true;
  // Trial division by every monic polynomial of degree 1..d/2.
  for (int dd = 1; dd <= d / 2; ++dd) {
    long count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (long code = 0; code < count; ++code) {
      Poly divisor(dd + 1, 0);
      long c = code;
      for (int i = 0; i < dd; ++i) {
        divisor[i] = c % p;
        c /= p;
      }
      divisor[dd] = 1;
      Poly rem = poly_mod(Poly(poly.begin(), poly.end()), divisor, p);
      if (degree(rem) < 0) return false;
    }
  }
  return true;
}

std::shared_ptr<const FieldTable> FieldTable::build(long p, int r,
                                                    std::optional<Coeffs> poly,
                                                    std::optional<Coeffs> omega) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, "p is not prime");
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "extension degree must be >= 1");
  long q = 1;
  for (int i = 0; i < r; ++i) {
    q *= p;
    if (q > kMaxQ) throw Error(ErrorCode::FieldTooLarge, "q exceeds 2^24");
  }

  Coeffs modulus;
  if (poly) {
    modulus = *poly;
    if (static_cast<int>(modulus.size()) - 1 != r || modulus[r] != 1)
      throw Error(ErrorCode::InvalidArgument, "modulus must be monic of degree r");
    for (auto& c : modulus) c = mod(c, p);
    if (!is_irreducible(p, modulus))
      throw Error(ErrorCode::ModulusReducible, "modulus is reducible over F_p");
  } else {
    for (long code = 0;; ++code) {
      modulus.assign(r + 1, 0);
      long c = code;
      for (int i = 0; i < r; ++i) {
        modulus[i] = c % p;
        c /= p;
      }
      modulus[r] = 1;
      if (is_irreducible(p, modulus)) break;
    }
  }

  auto ft = std::shared_ptr<FieldTable>(new FieldTable());
  ft->p_ = p;
  ft->r_ = r;
  ft->q_ = q;
  ft->spec_ = {p, r, modulus};
  ft->ppow_.resize(r + 1);
  ft->ppow_[0] = 1;
  for (int i = 1; i <= r; ++i) ft->ppow_[i] = ft->ppow_[i - 1] * p;

  auto encode_poly = [&](const Poly& f) {
    Code code = 0;
    for (int i = std::min<int>(static_cast<int>(f.size()), r) - 1; i >= 0; --i)
      code = static_cast<Code>(code * p + f[i]);
    return code;
  };
  auto decode_poly = [&](Code a) {
    Poly f(r, 0);
    long v = a;
    for (int i = 0; i < r; ++i) {
      f[i] = v % p;
      v /= p;
    }
    return f;
  };

  auto mul_order = [&](Code a) -> long {
    // Multiplicative order via the prime factorization of q-1.
    Poly base = decode_poly(a);
    auto powmod = [&](long n) {
      Poly acc(1, 1), b = base;
      while (n) {
        if (n & 1) acc = poly_mulmod(acc, b, modulus, p);
        b = poly_mulmod(b, b, modulus, p);
        n >>= 1;
      }
      return acc;
    };
    long ord = q - 1;
    for (long f : prime_factors(q - 1)) {
      while (ord % f == 0 && degree(powmod(ord / f)) == 0 &&
             powmod(ord / f)[0] == 1) {
        ord /= f;
      }
    }
    return ord;
  };

  Code omega_code = 0;
  if (omega) {
    Coeffs oc = *omega;
    if (static_cast<int>(oc.size()) > r)
      throw Error(ErrorCode::InvalidArgument, "omega has too many coefficients");
    Poly of(r, 0);
    for (size_t i = 0; i < oc.size(); ++i) of[i] = mod(oc[i], p);
    omega_code = encode_poly(of);
    if (omega_code == 0 || mul_order(omega_code) != q - 1)
      throw Error(ErrorCode::NotPrimitive, "requested omega is not a primitive root");
  } else {
    Code x_code = r > 1 ? static_cast<Code>(p) : 0;
    if (poly && r > 1 && mul_order(x_code) == q - 1) {
      omega_code = x_code;
    } else {
      for (Code a = 2; a < q; ++a) {
        if (mul_order(a) == q - 1) {
          omega_code = a;
          break;
        }
      }
    }
  }

  ft->log_.assign(q, -1);
  ft->antilog_.assign(q - 1, 0);
  Poly cur(1, 1);
  Poly omega_poly = decode_poly(omega_code);
  for (long e = 0; e < q - 1; ++e) {
    Code code = encode_poly(cur);
    ft->antilog_[e] = code;
    ft->log_[code] = static_cast<Code>(e);
    cur = poly_mulmod(cur, omega_poly, modulus, p);
  }
  ft->neg_.assign(q, 0);
  for (Code a = 0; a < q; ++a) {
    Poly f = decode_poly(a);
    for (auto& c : f) c = mod(-c, p);
    ft->neg_[a] = encode_poly(f);
  }
  return ft;
}

Code FieldTable::encode(const Coeffs& c) const {
  if (static_cast<int>(c.size()) > r_)
    throw Error(ErrorCode::InvalidArgument, "coefficient vector too long");
  Code code = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    long v = c[i] % p_;
    if (v < 0) v += p_;
    code = static_cast<Code>(code * p_ + v);
  }
  return code;
}

Coeffs FieldTable::decode(Code a) const {
  Coeffs c(r_, 0);
  long v = a;
  for (int i = 0; i < r_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

Code FieldTable::add(Code a, Code b) const {
  if (p_ == 2) return a ^ b;
  Code out = 0;
  long va = a, vb = b;
  for (int i = 0; i < r_; ++i) {
    long s = (va % p_ + vb % p_) % p_;
    out += static_cast<Code>(s * ppow_[i]);
    va /= p_;
    vb /= p_;
  }
  return out;
}

Code FieldTable::pow(Code a, long n) const {
  if (a == 0) {
    if (n <= 0) throw Error(ErrorCode::DivisionByZero, "0^n for n <= 0");
    return 0;
  }
  return antilog_[mod_exp(log_[a] * (n % (q_ - 1)))];
}

Code FieldTable::frobenius(Code a, long s) const {
  if (a == 0) return 0;
  // p^s mod (q-1) has period r in s
  long e = log_[a];
  for (long i = 0; i < s % r_; ++i) e = mod_exp(e * p_);
  return antilog_[e];
}

}  // namespace tsc
