// Copyright (c) 2026 the tsc-graphs authors
// Licensed under the Apache License, Version 2.0.

#include "doctest.h"
#include "tsc/field.hpp"

using namespace tsc;

namespace {

// Independent order computation by direct powering.
long brute_order(const FieldTable& f, Code a) {
  Code cur = a;
  long o = 1;
  while (cur != 1) {
    cur = f.mul(cur, a);
    ++o;
  }
  return o;
}

}  // namespace

TEST_CASE("GF(7^4) with x^4+x^3+x^2+3 has omega = x") {
  auto f = FieldTable::build(7, 4, Coeffs{3, 0, 1, 1, 1});
  CHECK(f->q() == 2401);
  CHECK(f->omega_coeffs() == Coeffs{0, 1, 0, 0});
  CHECK(f->dlog(f->encode({0, 1, 0, 0})) == 1);
}

TEST_CASE("GF(121) with 1+x^2 accepts omega = 6+2x") {
  auto f = FieldTable::build(11, 2, Coeffs{1, 0, 1}, Coeffs{6, 2});
  CHECK(f->dlog(f->encode({6, 2})) == 1);
  CHECK(f->dlog(1) == 0);
}

TEST_CASE("prime field F_5 defaults to omega = 2") {
  auto f = FieldTable::build(5, 1);
  CHECK(f->q() == 5);
  // oracle: orders of 2, 3, 4 by direct powering
  CHECK(brute_order(*f, 2) == 4);
  CHECK(brute_order(*f, 3) == 4);
  CHECK(brute_order(*f, 4) == 2);
  CHECK(f->omega_coeffs() == Coeffs{2});
}

TEST_CASE("irreducibility testing") {
  CHECK(FieldTable::is_irreducible(11, {1, 0, 1}));
  CHECK(FieldTable::is_irreducible(5, {2, 0, 1}));
  CHECK_FALSE(FieldTable::is_irreducible(5, {4, 0, 1}));  // (x-1)(x+1)
  CHECK_THROWS_AS(FieldTable::build(5, 2, Coeffs{4, 0, 1}), Error);
  CHECK_THROWS_AS(FieldTable::build(6, 1), Error);
  try {
    FieldTable::build(6, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPrime);
  }
}

TEST_CASE("GF(25) with 2+x^2 picks primitive root 1+x") {
  auto f = FieldTable::build(5, 2, Coeffs{2, 0, 1});
  CHECK(f->omega_coeffs() == Coeffs{1, 1});
  // (1+x)^2 = 4+2x after reducing x^2 -> 3
  Code w = f->encode({1, 1});
  CHECK(f->mul(w, w) == f->encode({4, 2}));
  CHECK(f->dlog(f->encode({4, 2})) == 2);
}

TEST_CASE("basic arithmetic and error paths") {
  auto f = FieldTable::build(5, 2, Coeffs{2, 0, 1});
  Code x = f->encode({0, 1});
  CHECK(f->add(x, f->neg(x)) == 0);
  CHECK_THROWS_AS(f->inv(0), Error);
  CHECK_THROWS_AS(f->dlog(0), Error);
  CHECK(f->mul(f->inv(x), x) == 1);
}

TEST_CASE("frobenius multiplies dlog by p") {
  auto f = FieldTable::build(3, 4);
  Code w = f->antilog(1);
  CHECK(f->frobenius(w, 1) == f->antilog(3));
  CHECK(f->frobenius(f->antilog(3), 2) == f->antilog(27));
}

TEST_CASE("frobenius to the r-th power is the identity") {
  for (auto [p, r] : {std::pair<long, int>{2, 8}, {3, 4}, {5, 2}, {11, 2}}) {
    auto f = FieldTable::build(p, r);
    for (Code a = 0; a < f->q(); ++a) CHECK(f->frobenius(a, r) == a);
  }
}

TEST_CASE("log identity and frobenius homomorphism, exhaustive at small q") {
  for (auto [p, r] : {std::pair<long, int>{2, 4}, {3, 2}, {5, 2}, {2, 8}}) {
    auto f = FieldTable::build(p, r);
    long m = f->q() - 1;
    for (Code a = 1; a < f->q(); ++a)
      for (Code b = 1; b < f->q(); ++b) {
        CHECK(f->dlog(f->mul(a, b)) == (f->dlog(a) + f->dlog(b)) % m);
        CHECK(f->frobenius(f->mul(a, b), 1) ==
              f->mul(f->frobenius(a, 1), f->frobenius(b, 1)));
        CHECK(f->frobenius(f->add(a, b), 1) ==
              f->add(f->frobenius(a, 1), f->frobenius(b, 1)));
      }
  }
}

TEST_CASE("frobenius homomorphism sampled at q = 2401") {
  auto f = FieldTable::build(7, 4, Coeffs{3, 0, 1, 1, 1});
  for (Code a = 1; a < f->q(); a += 97)
    for (Code b = 1; b < f->q(); b += 89) {
      CHECK(f->frobenius(f->mul(a, b), 1) ==
            f->mul(f->frobenius(a, 1), f->frobenius(b, 1)));
      CHECK(f->frobenius(f->add(a, b), 1) ==
            f->add(f->frobenius(a, 1), f->frobenius(b, 1)));
    }
}

TEST_CASE("primitive root has order exactly q-1") {
  for (auto [p, r] : {std::pair<long, int>{2, 6}, {3, 4}, {13, 1}, {17, 2}}) {
    auto f = FieldTable::build(p, r);
    long m = f->q() - 1;
    Code w = f->antilog(1);
    for (long d = 1; d < m; ++d)
      if (m % d == 0) CHECK(f->pow(w, d) != 1);
    CHECK(f->pow(w, m) == 1);
  }
}

TEST_CASE("explicit omega must be primitive") {
  CHECK_THROWS_AS(FieldTable::build(5, 1, std::nullopt, Coeffs{4}), Error);
}
