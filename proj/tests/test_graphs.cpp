// Copyright (c) 2026 the tsc-graphs authors
// Licensed under the Apache License, Version 2.0.

#include <numeric>

#include "doctest.h"
#include "tsc/graph.hpp"
#include "tsc/symmetry.hpp"

using namespace tsc;

TEST_CASE("generalized Paley colorings") {
  auto f16 = FieldTable::build(2, 4);
  auto g = gp_k(f16, 3);
  CHECK(g.k() == 3);
  CHECK(g.color_of_exp(7) == 1);
  CHECK(g.color_class_sizes() == std::vector<long>{5, 5, 5});

  auto f2401 = FieldTable::build(7, 4, Coeffs{3, 0, 1, 1, 1});
  auto g5 = gp_k(f2401, 5);
  CHECK(g5.color_class_sizes() == std::vector<long>(5, 480));

  auto f256 = FieldTable::build(2, 8);
  CHECK(gp_k(f256, 5).color_class_sizes() == std::vector<long>(5, 51));
}

TEST_CASE("gp_k edge-well-definedness precondition") {
  auto f7 = FieldTable::build(7, 1);
  CHECK_THROWS_AS(gp_k(f7, 2), Error);  // (q-1)/k odd, p odd
  try {
    gp_k(f7, 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotEdgeWellDefined);
  }
  CHECK_THROWS_AS(gp_k(f7, 4), Error);  // 4 does not divide 6
}

TEST_CASE("Paley graphs") {
  auto f9 = FieldTable::build(3, 2);
  auto pg = paley(f9);
  CHECK(pg.k() == 2);
  CHECK(pg.color_class_sizes() == std::vector<long>{4, 4});
  auto f25 = FieldTable::build(5, 2, Coeffs{2, 0, 1});
  auto pg25 = paley(f25);
  CHECK(pg25.color_of_exp(2) == 0);
  CHECK(pg25.color_of_exp(3) == 1);
  CHECK_THROWS_AS(paley(FieldTable::build(7, 1)), Error);
}

TEST_CASE("Peisert graphs") {
  auto f9 = FieldTable::build(3, 2);
  auto ps = peisert(f9);
  for (long j : {0, 1, 4, 5}) CHECK(ps.color_of_exp(j) == 0);
  for (long j : {2, 3, 6, 7}) CHECK(ps.color_of_exp(j) == 1);
  CHECK_THROWS_AS(peisert(FieldTable::build(5, 2)), Error);
  // construction itself verifies color(x) = color(-x) exhaustively
  peisert(FieldTable::build(7, 2));
  peisert(FieldTable::build(3, 4));
  peisert(FieldTable::build(11, 2));
}

TEST_CASE("direction graphs") {
  auto f2 = FieldTable::build(2, 1);
  auto g = direction_graph(f2, 2);
  CHECK(g.k() == 3);
  CHECK(g.field().q() == 4);

  auto f3 = FieldTable::build(3, 1);
  auto g4 = direction_graph(f3, 2);
  CHECK(g4.k() == 4);
  CHECK(g4.field().q() == 9);

  auto f4 = FieldTable::build(2, 2);
  auto g5 = direction_graph(f4, 2);
  CHECK(g5.k() == 5);
  CHECK(g5.field().q() == 16);
  CHECK(g5.color_class_sizes() == std::vector<long>(5, 3));
}

namespace {

// Scalar multiplication by lambda in F_q, applied componentwise to a
// flattened vector of F_q^d.
Code scale_vector(const FieldTable& fq, int d, Code flat, Code lambda) {
  long pr = fq.q();
  long out = 0, mult = 1;
  for (int t = 0; t < d; ++t) {
    Code comp = static_cast<Code>(flat % pr);
    out += static_cast<long>(fq.mul(lambda, comp)) * mult;
    mult *= pr;
    flat = static_cast<Code>(flat / pr);
  }
  return static_cast<Code>(out);
}

}  // namespace

TEST_CASE("direction graph colors are scalar-invariant") {
  for (auto [p, r] : {std::pair<long, int>{3, 1}, {2, 2}, {5, 1}}) {
    auto fq = FieldTable::build(p, r);
    auto g = direction_graph(fq, 2);
    long n = g.field().q();
    for (Code v = 1; v < n; ++v)
      for (Code lambda = 1; lambda < fq->q(); ++lambda)
        CHECK(g.color_of_code(scale_vector(*fq, 2, v, lambda)) == g.color_of_code(v));
  }
}

TEST_CASE("partition direction graphs from the exceptional blocks") {
  auto f5 = FieldTable::build(5, 1);
  DirectionPartition p5{2,
                        {{{1, 0}, {0, 1}}, {{1, 1}, {2, 1}}, {{3, 1}, {4, 1}}}};
  auto g5 = partition_direction_graph(f5, 2, p5);
  CHECK(g5.k() == 3);
  CHECK(g5.color_class_sizes() == std::vector<long>(3, 8));

  auto f11 = FieldTable::build(11, 1);
  DirectionPartition p11{2,
                         {{{1, 0}, {0, 1}, {1, 1}, {10, 1}},
                          {{2, 1}, {3, 1}, {5, 1}, {7, 1}},
                          {{4, 1}, {6, 1}, {8, 1}, {9, 1}}}};
  auto g11 = partition_direction_graph(f11, 2, p11);
  CHECK(g11.k() == 3);
  CHECK(g11.color_class_sizes() == std::vector<long>(3, 40));

  // single block covering everything -> 1-colored complete graph
  DirectionPartition whole{2, {{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}}}};
  auto k1 = partition_direction_graph(f5, 2, whole);
  CHECK(k1.k() == 1);
  CHECK(k1.color_class_sizes() == std::vector<long>{24});

  DirectionPartition missing{2, {{{1, 0}, {0, 1}}, {{1, 1}, {2, 1}}}};
  CHECK_THROWS_AS(partition_direction_graph(f5, 2, missing), Error);
}

TEST_CASE("orbital graph of multiplication by omega^5 is GP_5(7^4)") {
  auto f = FieldTable::build(7, 4, Coeffs{3, 0, 1, 1, 1});
  auto orb = orbital_graph(f, {GammaElem{5, 0}});
  auto gp = gp_k(f, 5);
  CHECK(orb.k() == 5);
  CHECK(orb.color_of_exp() == gp.color_of_exp());
}

TEST_CASE("orbital graph of <omega^6, omega^3 alpha> on F_121") {
  auto f = FieldTable::build(11, 2, Coeffs{1, 0, 1}, Coeffs{6, 2});
  auto orb = orbital_graph(f, {GammaElem{6, 0}, GammaElem{3, 1}});
  CHECK(orb.k() == 3);
  CHECK(orb.color_class_sizes() == std::vector<long>(3, 40));
  int expected[12] = {0, 1, 1, 0, 2, 2, 0, 1, 1, 0, 2, 2};
  for (long e = 0; e < 120; ++e) CHECK(orb.color_of_exp(e) == expected[e % 12]);
}

TEST_CASE("orbital graph edge cases") {
  auto f16 = FieldTable::build(2, 4);
  auto discrete = orbital_graph(f16, {GammaElem{0, 0}});
  CHECK(discrete.k() == 15);

  // singleton orbits are not closed under negation in odd characteristic
  auto f7 = FieldTable::build(7, 1);
  CHECK_THROWS_AS(orbital_graph(f7, {GammaElem{0, 0}}), Error);

  LinearMap singular(2, 2, {1, 1, 1, 1});
  auto f9 = FieldTable::build(3, 2);
  CHECK_THROWS_AS(orbital_graph(f9, {singular}), Error);
}

TEST_CASE("merging GP_4(81) yields Paley and Peisert colorings") {
  auto f81 = FieldTable::build(3, 4);
  auto g4 = gp_k(f81, 4);
  auto pal = merge_colors(g4, {0, 1, 0, 1});
  CHECK(pal.color_of_exp() == paley(f81).color_of_exp());
  auto pei = merge_colors(g4, {0, 0, 1, 1});
  CHECK(pei.color_of_exp() == peisert(f81).color_of_exp());

  auto same = merge_colors(g4, {0, 1, 2, 3});
  CHECK(same.color_of_exp() == g4.color_of_exp());
  CHECK_THROWS_AS(merge_colors(g4, {0, 2, 0, 2}), Error);  // 1 unattained
}

TEST_CASE("merged class sizes are sums of the merged classes") {
  auto f81 = FieldTable::build(3, 4);
  auto g4 = gp_k(f81, 4);
  auto merged = merge_colors(g4, {0, 1, 0, 1});
  auto pre = g4.color_class_sizes();
  CHECK(merged.color_class_sizes() ==
        std::vector<long>{pre[0] + pre[2], pre[1] + pre[3]});
}

TEST_CASE("edge symmetry holds on every constructed family") {
  // the constructor enforces color(x) = color(-x); re-check one explicitly
  auto f = FieldTable::build(3, 4);
  auto g = gp_k(f, 5);
  for (long e = 0; e < f->q() - 1; ++e) {
    Code x = f->antilog(e);
    CHECK(g.color_of_code(x) == g.color_of_code(f->neg(x)));
  }
}

TEST_CASE("GP_3 does not depend on the primitive root") {
  for (auto [p, r] : {std::pair<long, int>{2, 4}, {5, 2}, {2, 6}}) {
    auto f1 = FieldTable::build(p, r);
    long m = f1->q() - 1;
    // second primitive root: omega^j for the smallest j > 1 coprime to q-1
    long j = 2;
    while (std::gcd(j, m) != 1) ++j;
    auto f2 = FieldTable::build(p, r, f1->poly(), f1->decode(f1->pow(f1->omega(), j)));
    auto a = gp_k(f1, 3);
    auto b = gp_k(f2, 3);
    IsoOptions opts;
    opts.permute_colors = true;
    CHECK(iso_colored(a, b, opts).has_value());
  }
}
