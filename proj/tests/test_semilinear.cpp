// Copyright (c) 2026 the tsc-graphs authors
// Licensed under the Apache License, Version 2.0.

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "doctest.h"
#include "tsc/semilinear.hpp"

using namespace tsc;

namespace {

using ES = std::pair<long, int>;

ES key(const GammaElem& g) { return {g.e, g.s}; }

// Independent closure oracle: breadth-first products until stable.
std::set<ES> brute_closure(std::vector<GammaElem> gens, const FieldTable& f) {
  std::set<ES> seen{{0, 0}};
  std::vector<GammaElem> frontier{GammaElem{0, 0}};
  while (!frontier.empty()) {
    std::vector<GammaElem> next;
    for (const auto& h : frontier)
      for (const auto& g : gens) {
        GammaElem prod = gamma_compose(g, h, f);
        if (seen.insert(key(prod)).second) next.push_back(prod);
      }
    frontier = std::move(next);
  }
  return seen;
}

std::set<ES> as_set(const std::vector<GammaElem>& v) {
  std::set<ES> out;
  for (const auto& g : v) out.insert(key(g));
  return out;
}

}  // namespace

TEST_CASE("gamma_compose matches the semilinear composition rule") {
  auto f = FieldTable::build(2, 4);
  GammaElem alpha{0, 1}, omega{1, 0};
  // (alpha . omega)(x) = (omega x)^p = omega^p x^p
  GammaElem c = gamma_compose(alpha, omega, *f);
  CHECK(c.e == 2);
  CHECK(c.s == 1);
  // the other order keeps e = 1
  GammaElem c2 = gamma_compose(omega, alpha, *f);
  CHECK(c2.e == 1);
  CHECK(c2.s == 1);
}

TEST_CASE("gamma_compose agrees with pointwise composition, exhaustive pairs") {
  for (auto [p, r] : {std::pair<long, int>{2, 4}, {5, 2}}) {
    auto f = FieldTable::build(p, r);
    long m = f->q() - 1;
    for (long ea = 0; ea < m; ++ea)
      for (int sa = 0; sa < r; ++sa)
        for (long eb = 0; eb < m; ++eb)
          for (int sb = 0; sb < r; ++sb) {
            GammaElem a{ea, sa}, b{eb, sb};
            GammaElem c = gamma_compose(a, b, *f);
            for (long i : {0L, 1L, 7L})
              REQUIRE(gamma_apply_exp(c, i, *f) ==
                      gamma_apply_exp(a, gamma_apply_exp(b, i, *f), *f));
          }
  }
}

TEST_CASE("gamma_compose pointwise at q = 256, all pairs on determining points") {
  auto f = FieldTable::build(2, 8);
  long m = 255;
  for (long ea = 0; ea < m; ea += 3)
    for (int sa = 0; sa < 8; ++sa)
      for (long eb = 0; eb < m; eb += 5)
        for (int sb = 0; sb < 8; ++sb) {
          GammaElem a{ea, sa}, b{eb, sb};
          GammaElem c = gamma_compose(a, b, *f);
          // images of exponents 0 and 1 pin down (e, s) uniquely
          REQUIRE(gamma_apply_exp(c, 0, *f) ==
                  gamma_apply_exp(a, gamma_apply_exp(b, 0, *f), *f));
          REQUIRE(gamma_apply_exp(c, 1, *f) ==
                  gamma_apply_exp(a, gamma_apply_exp(b, 1, *f), *f));
        }
}

TEST_CASE("triple validity conditions") {
  auto f2401 = FieldTable::build(7, 4, Coeffs{3, 0, 1, 1, 1});
  CHECK(is_valid_triple({5, 0, 4}, *f2401));
  CHECK(is_valid_triple({1, 0, 1}, *f2401));
  auto f16 = FieldTable::build(2, 4);
  CHECK(is_valid_triple({3, 0, 2}, *f16));
  CHECK_FALSE(is_valid_triple({1, 0, 3}, *f16));  // s does not divide r
  CHECK_FALSE(is_valid_triple({7, 0, 4}, *f16));  // d does not divide q-1
  CHECK_FALSE(is_valid_triple({3, 3, 2}, *f16));  // e out of range
  CHECK_FALSE(is_valid_triple({3, 1, 2}, *f16));  // d | e(q-1)/(p^s-1) fails
}

TEST_CASE("standard form of generated subgroups") {
  auto f16 = FieldTable::build(2, 4);
  CHECK(standard_form({{3, 0}, {0, 2}}, *f16) == FoulserTriple{3, 0, 2});
  CHECK(standard_form({{1, 0}, {0, 1}}, *f16) == FoulserTriple{1, 0, 1});
  CHECK(standard_form({{0, 0}}, *f16) == FoulserTriple{15, 0, 4});  // trivial

  auto f2401 = FieldTable::build(7, 4, Coeffs{3, 0, 1, 1, 1});
  CHECK(standard_form({{5, 0}}, *f2401) == FoulserTriple{5, 0, 4});

  auto f121 = FieldTable::build(11, 2, Coeffs{1, 0, 1}, Coeffs{6, 2});
  CHECK(standard_form({{6, 0}, {3, 1}}, *f121) == FoulserTriple{6, 3, 1});
}

TEST_CASE("subgroup elements: order formula and closure oracle, q <= 256") {
  for (auto [p, r] :
       {std::pair<long, int>{2, 4}, {5, 2}, {2, 6}, {3, 4}, {2, 8}}) {
    auto f = FieldTable::build(p, r);
    for (const auto& t : all_standard_triples(*f)) {
      auto elems = subgroup_elements(t, *f);
      long expected = (f->q() - 1) * static_cast<long>(r) / (t.d * t.s);
      REQUIRE(static_cast<long>(elems.size()) == expected);
      REQUIRE(subgroup_order(t, *f) == expected);
      std::vector<GammaElem> gens{{t.d, 0}};
      if (t.s < r) gens.push_back({t.e, t.s});
      REQUIRE(as_set(elems) == brute_closure(gens, *f));
      // round trip back to the same standard form
      REQUIRE(standard_form(elems, *f) == t);
    }
  }
}

TEST_CASE("orbit partitions") {
  auto f81 = FieldTable::build(3, 4);
  auto blocks = orbit_partition({16, 0, 4}, *f81);
  CHECK(blocks.size() == 16);
  for (const auto& b : blocks) CHECK(b.size() == 5);

  auto f2401 = FieldTable::build(7, 4, Coeffs{3, 0, 1, 1, 1});
  auto b5 = orbit_partition({5, 0, 4}, *f2401);
  CHECK(b5.size() == 5);
  for (const auto& b : b5) CHECK(b.size() == 480);
  // blocks are ordered by minimal exponent = residue class mod 5
  for (int c = 0; c < 5; ++c)
    for (long e : b5[c]) CHECK(e % 5 == c);

  auto f16 = FieldTable::build(2, 4);
  auto whole = orbit_partition({1, 0, 1}, *f16);
  CHECK(whole.size() == 1);
  CHECK(whole[0].size() == 15);
}

TEST_CASE("surviving stabilizer enumeration matches the known sets") {
  struct Case {
    long p;
    int r;
    int k;
    Coeffs poly;
    FoulserTriple expected;
  };
  std::vector<Case> cases{
      {2, 4, 3, {}, {3, 0, 2}},
      {2, 6, 3, {}, {3, 0, 2}},
      {2, 8, 5, {}, {5, 0, 4}},
      {7, 4, 5, {3, 0, 1, 1, 1}, {5, 0, 4}},
      {3, 4, 5, {}, {5, 0, 4}},
      {3, 4, 4, {}, {4, 0, 2}},
  };
  for (const auto& c : cases) {
    auto f = c.poly.empty() ? FieldTable::build(c.p, c.r)
                            : FieldTable::build(c.p, c.r, c.poly);
    auto got = enumerate_k_equal_orbit_subgroups(*f, c.k);
    REQUIRE(got.size() == 1);
    CHECK(got[0] == c.expected);
    // the filtered set is contained in the unfiltered equal-orbit set
    auto raw = enumerate_equal_orbit_triples(*f, c.k);
    CHECK(std::find(raw.begin(), raw.end(), c.expected) != raw.end());
  }
}

TEST_CASE("unfiltered equal-orbit enumeration keeps non-maximal triples") {
  auto f16 = FieldTable::build(2, 4);
  auto raw = enumerate_equal_orbit_triples(*f16, 3);
  // <omega^3> alone also has three equal orbits but is not the full
  // partition stabilizer
  CHECK(std::find(raw.begin(), raw.end(), FoulserTriple{3, 0, 4}) != raw.end());
  CHECK(std::find(raw.begin(), raw.end(), FoulserTriple{3, 0, 2}) != raw.end());
}

TEST_CASE("color-transitive overgroups of <omega^5> in GammaL_1(7^4)") {
  auto f = FieldTable::build(7, 4, Coeffs{3, 0, 1, 1, 1});
  auto over = enumerate_color_transitive_overgroups({5, 0, 4}, *f, 5);
  REQUIRE(over.size() == 1);
  CHECK(over[0].overgroup == FoulserTriple{1, 0, 4});  // <omega>
  CHECK(over[0].transitive);
  CHECK(over[0].cyclic);
  CHECK_FALSE(over[0].symmetric);
  CHECK(over[0].group_order == 5);
}

TEST_CASE("index-5 overgroups of <omega^10, omega alpha^2> do not exist") {
  // the candidate <omega^2, omega alpha^2> fails to permute the orbits
  auto f = FieldTable::build(7, 4, Coeffs{3, 0, 1, 1, 1});
  CHECK(enumerate_color_transitive_overgroups({10, 1, 2}, *f, 5).empty());
}

TEST_CASE("index-3 overgroups over GF(17^2) are ruled out") {
  auto f = FieldTable::build(17, 2);
  REQUIRE(is_valid_triple({6, 1, 1}, *f));
  CHECK(enumerate_color_transitive_overgroups({6, 1, 1}, *f, 3).empty());
}

TEST_CASE("overgroup of <omega^3, alpha^2> in GammaL_1(2^4) induces C_3") {
  // alpha^2 fixes every color of GP_3(2^4), so the induced group is only
  // cyclic; the full S_3 needs matrices outside GammaL_1
  auto f = FieldTable::build(2, 4);
  auto over = enumerate_color_transitive_overgroups({3, 0, 2}, *f, 3);
  REQUIRE(over.size() == 1);
  CHECK(over[0].overgroup == FoulserTriple{1, 0, 2});
  CHECK(over[0].transitive);
  CHECK(over[0].cyclic);
  CHECK_FALSE(over[0].symmetric);
  CHECK(over[0].group_order == 3);
}

TEST_CASE("induced color permutations of semilinear elements") {
  auto f = FieldTable::build(7, 4, Coeffs{3, 0, 1, 1, 1});
  auto g5 = gp_k(f, 5);
  auto perm = induced_color_perm({1, 0}, g5);
  REQUIRE(perm.has_value());
  CHECK(*perm == std::vector<int>{1, 2, 3, 4, 0});

  auto f16 = FieldTable::build(2, 4);
  auto g3 = gp_k(f16, 3);
  auto pa = induced_color_perm({0, 1}, g3);
  REQUIRE(pa.has_value());
  CHECK(*pa == std::vector<int>{0, 2, 1});
  auto pid = induced_color_perm({3, 0}, g3);
  REQUIRE(pid.has_value());
  CHECK(*pid == std::vector<int>{0, 1, 2});
}

TEST_CASE("non-color-permuting element is rejected with a witness") {
  auto f = FieldTable::build(11, 2, Coeffs{1, 0, 1}, Coeffs{6, 2});
  auto g = orbital_graph(f, {GammaElem{6, 0}, GammaElem{3, 1}});
  ColorPermRejection rej;
  auto perm = induced_color_perm({1, 0}, g, &rej);
  CHECK_FALSE(perm.has_value());
  GammaElem w{1, 0};
  CHECK(g.color_of_exp(rej.witness_exp_a) == g.color_of_exp(rej.witness_exp_b));
  CHECK(g.color_of_exp(gamma_apply_exp(w, rej.witness_exp_a, *f)) !=
        g.color_of_exp(gamma_apply_exp(w, rej.witness_exp_b, *f)));
}

TEST_CASE("matrix embedding of semilinear maps over GF(25)") {
  auto f = FieldTable::build(5, 2, Coeffs{2, 0, 1});
  LinearMap mw = embed_semilinear_as_matrix({1, 0}, *f);
  CHECK(mw.m == std::vector<long>{1, 3, 1, 1});
  LinearMap ma = embed_semilinear_as_matrix({0, 1}, *f);
  CHECK(ma.m == std::vector<long>{1, 0, 0, 4});
  LinearMap mi = embed_semilinear_as_matrix({0, 0}, *f);
  CHECK(mi.m == std::vector<long>{1, 0, 0, 1});
}

TEST_CASE("matrix embedding agrees with the semilinear action pointwise") {
  for (auto [p, r] : {std::pair<long, int>{2, 4}, {5, 2}, {3, 4}}) {
    auto f = FieldTable::build(p, r);
    long m = f->q() - 1;
    for (long e : {0L, 1L, 5L, m - 1})
      for (int s = 0; s < r; ++s) {
        GammaElem g{e % m, s};
        LinearMap mat = embed_semilinear_as_matrix(g, *f);
        REQUIRE(mat.invertible());
        for (Code v = 1; v < f->q(); ++v)
          REQUIRE(mat.apply(*f, v) ==
                  f->antilog(gamma_apply_exp(g, f->dlog(v), *f)));
      }
  }
}
