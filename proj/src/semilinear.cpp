// Copyright (c) 2026 the tsc-graphs authors
// Licensed under the Apache License, Version 2.0.

#include "tsc/semilinear.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

namespace tsc {

namespace {

long pow_mod(long base, long exp, long m) {
  long acc = 1 % m;
  base %= m;
  for (long i = 0; i < exp; ++i) acc = acc * base % m;
  return acc;
}

long key_of(const GammaElem& g, long m) { return g.s * m + g.e; }

// p^s exactly; safe since s <= r and p^r <= 2^24.
long pow_exact(long p, long s) {
  long acc = 1;
  for (long i = 0; i < s; ++i) acc *= p;
  return acc;
}

GammaElem normalize(GammaElem g, const FieldTable& f) {
  long m = f.q() - 1;
  g.e = ((g.e % m) + m) % m;
  g.s = ((g.s % f.r()) + f.r()) % f.r();
  return g;
}

// Closure of a generator set under composition (finite group, BFS).
std::vector<GammaElem> closure(std::vector<GammaElem> gens, const FieldTable& f) {
  long m = f.q() - 1;
  for (auto& g : gens) g = normalize(g, f);
  std::set<long> seen;
  std::vector<GammaElem> elems{GammaElem{0, 0}};
  seen.insert(0);
  std::vector<GammaElem> frontier = elems;
  while (!frontier.empty()) {
    std::vector<GammaElem> next;
    for (const auto& a : frontier) {
      for (const auto& g : gens) {
        GammaElem c = gamma_compose(g, a, f);
        if (seen.insert(key_of(c, m)).second) {
          elems.push_back(c);
          next.push_back(c);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(elems.begin(), elems.end(), [](const GammaElem& a, const GammaElem& b) {
    return a.s != b.s ? a.s < b.s : a.e < b.e;
  });
  return elems;
}

}  // namespace

GammaElem gamma_compose(const GammaElem& a, const GammaElem& b, const FieldTable& f) {
  long m = f.q() - 1;
  GammaElem an = normalize(a, f), bn = normalize(b, f);
  long ps = pow_mod(f.p(), an.s, m);
  GammaElem out;
  out.e = (an.e + ps * bn.e) % m;
  out.s = (an.s + bn.s) % f.r();
  return out;
}

long gamma_apply_exp(const GammaElem& g, long i, const FieldTable& f) {
  long m = f.q() - 1;
  GammaElem gn = normalize(g, f);
  long ps = pow_mod(f.p(), gn.s, m);
  return f.mod_exp(ps * f.mod_exp(i) + gn.e);
}

bool is_valid_triple(const FoulserTriple& t, const FieldTable& f) {
  long m = f.q() - 1;
  if (t.s <= 0 || f.r() % t.s != 0) return false;
  if (t.d <= 0 || m % t.d != 0) return false;
  if (t.e < 0 || t.e >= t.d) return false;
  long quotient = m / (pow_exact(f.p(), t.s) - 1);
  return (t.e * quotient) % t.d == 0;
}

long subgroup_order(const FoulserTriple& t, const FieldTable& f) {
  return (f.q() - 1) * f.r() / (t.d * t.s);
}

FoulserTriple standard_form(const std::vector<GammaElem>& generators,
                            const FieldTable& f) {
  if (generators.empty())
    throw Error(ErrorCode::InvalidArgument, "empty generator list");
  long m = f.q() - 1;
  auto elems = closure(generators, f);

  long d = m;  // gcd of pure-scalar exponents and q-1
  int s = f.r();
  for (const auto& g : elems) {
    if (g.s == 0) d = std::gcd(d, g.e);
    else s = std::min<long>(s, g.s);
  }
  if (d == 0) d = m;  // q = 2 edge case
  long e = 0;
  if (s < f.r()) {
    for (const auto& g : elems)
      if (g.s == s) {
        e = g.e % d;
        break;
      }
  }
  return FoulserTriple{d, e, s};
}

std::vector<GammaElem> subgroup_elements(const FoulserTriple& t, const FieldTable& f) {
  if (!is_valid_triple(t, f))
    throw Error(ErrorCode::NotStandardForm, "triple violates standard-form conditions");
  std::vector<GammaElem> gens{GammaElem{t.d, 0}, GammaElem{t.e, t.s % f.r()}};
  auto elems = closure(gens, f);
  if (static_cast<long>(elems.size()) != subgroup_order(t, f))
    throw Error(ErrorCode::NotStandardForm, "cardinality formula mismatch");
  return elems;
}

std::vector<std::vector<long>> orbit_partition(const FoulserTriple& t,
                                               const FieldTable& f) {
  if (!is_valid_triple(t, f))
    throw Error(ErrorCode::NotStandardForm, "triple violates standard-form conditions");
  long m = f.q() - 1;
  long ps = pow_mod(f.p(), t.s % f.r(), m);
  std::vector<int> block_of(m, -1);
  std::vector<std::vector<long>> blocks;
  for (long start = 0; start < m; ++start) {
    if (block_of[start] != -1) continue;
    int id = static_cast<int>(blocks.size());
    blocks.emplace_back();
    std::vector<long> frontier{start};
    block_of[start] = id;
    while (!frontier.empty()) {
      long i = frontier.back();
      frontier.pop_back();
      blocks[id].push_back(i);
      long nexts[2] = {(i + t.d) % m, (ps * i + t.e) % m};
      for (long j : nexts)
        if (block_of[j] == -1) {
          block_of[j] = id;
          frontier.push_back(j);
        }
    }
    std::sort(blocks[id].begin(), blocks[id].end());
  }
  return blocks;
}

std::vector<FoulserTriple> all_standard_triples(const FieldTable& f) {
  long m = f.q() - 1;
  std::vector<FoulserTriple> out;
  for (int s = 1; s <= f.r(); ++s) {
    if (f.r() % s != 0) continue;
    long quotient = m / (pow_exact(f.p(), s) - 1);
    for (long d = 1; d <= m; ++d) {
      if (m % d != 0) continue;
      long step = d / std::gcd(d, quotient);
      for (long e = 0; e < d; e += step) out.push_back(FoulserTriple{d, e, s});
    }
  }
  return out;
}

std::vector<FoulserTriple> enumerate_equal_orbit_triples(const FieldTable& f, int k) {
  long m = f.q() - 1;
  std::vector<FoulserTriple> out;
  if (k < 1 || m % k != 0) return out;
  long block_size = m / k;
  for (const auto& t : all_standard_triples(f)) {
    // Quick bound: orbits cannot be larger than the subgroup order.
    if (subgroup_order(t, f) < block_size) continue;
    auto blocks = orbit_partition(t, f);
    if (static_cast<int>(blocks.size()) != k) continue;
    bool equal = std::all_of(blocks.begin(), blocks.end(), [&](const auto& b) {
      return static_cast<long>(b.size()) == block_size;
    });
    if (equal) out.push_back(t);
  }
  return out;
}

namespace {

// Induced permutation of blocks if the element maps every block onto a
// block; nullopt otherwise.
std::optional<std::vector<int>> block_perm(long e, int s,
                                           const std::vector<int>& block_of,
                                           int k, const FieldTable& f) {
  long m = f.q() - 1;
  long ps = pow_mod(f.p(), s, m);
  std::vector<int> perm(k, -1);
  for (long i = 0; i < m; ++i) {
    int b = block_of[i];
    int img = block_of[(ps * i + e) % m];
    if (perm[b] == -1) perm[b] = img;
    else if (perm[b] != img) return std::nullopt;
  }
  return perm;
}

std::vector<int> block_of_from(const std::vector<std::vector<long>>& blocks, long m) {
  std::vector<int> block_of(m, -1);
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
    for (long i : blocks[b]) block_of[i] = b;
  return block_of;
}

// Closure in S_k of a list of permutations.
std::vector<std::vector<int>> perm_group_closure(std::vector<std::vector<int>> gens,
                                                 int k) {
  std::set<std::vector<int>> seen;
  std::vector<int> id(k);
  std::iota(id.begin(), id.end(), 0);
  seen.insert(id);
  std::vector<std::vector<int>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& a : frontier)
      for (const auto& g : gens) {
        std::vector<int> c(k);
        for (int i = 0; i < k; ++i) c[i] = g[a[i]];
        if (seen.insert(c).second) next.push_back(c);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

bool group_is_cyclic(const std::vector<std::vector<int>>& elems, int k) {
  std::vector<int> id(k);
  std::iota(id.begin(), id.end(), 0);
  size_t order = elems.size();
  for (const auto& g : elems) {
    std::vector<int> cur = id;
    size_t o = 0;
    do {
      std::vector<int> nxt(k);
      for (int i = 0; i < k; ++i) nxt[i] = g[cur[i]];
      cur = std::move(nxt);
      ++o;
    } while (cur != id);
    if (o == order) return true;
  }
  return false;
}

bool group_is_transitive(const std::vector<std::vector<int>>& elems, int k) {
  std::vector<bool> hit(k, false);
  for (const auto& g : elems) hit[g[0]] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

}  // namespace

std::vector<FoulserTriple> enumerate_k_equal_orbit_subgroups(const FieldTable& f,
                                                             int k) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "k must be >= 2");
  long m = f.q() - 1;
  std::vector<FoulserTriple> out;
  for (const auto& t : enumerate_equal_orbit_triples(f, k)) {
    auto blocks = orbit_partition(t, f);
    auto block_of = block_of_from(blocks, m);

    // The subgroup must be the full stabilizer of its own partition inside
    // GammaL_1 (the automorphism stabilizer is everything preserving colors).
    long fixing = 0;
    for (int s = 0; s < f.r(); ++s) {
      long ps = pow_mod(f.p(), s, m);
      for (long e = 0; e < m; ++e) {
        bool fixes = true;
        for (long i = 0; i < m; ++i)
          if (block_of[(ps * i + e) % m] != block_of[i]) {
            fixes = false;
            break;
          }
        if (fixes) ++fixing;
      }
    }
    if (fixing != subgroup_order(t, f)) continue;

    // Color symmetry requires some overgroup in GammaL_1 permuting the
    // blocks transitively; the block images of the identity block under the
    // partition normalizer form that orbit.
    std::vector<bool> reachable(k, false);
    for (int s = 0; s < f.r(); ++s)
      for (long e = 0; e < m; ++e)
        if (auto perm = block_perm(e, s, block_of, k, f)) reachable[(*perm)[0]] = true;
    if (std::all_of(reachable.begin(), reachable.end(), [](bool b) { return b; }))
      out.push_back(t);
  }
  return out;
}

std::vector<ColorActionSummary> enumerate_color_transitive_overgroups(
    const FoulserTriple& a, const FieldTable& f, int k) {
  long m = f.q() - 1;
  auto blocks = orbit_partition(a, f);
  auto block_of = block_of_from(blocks, m);
  int nblocks = static_cast<int>(blocks.size());
  long target_order = subgroup_order(a, f) * k;

  // Membership of omega^e alpha^s in <omega^d, omega^e0 alpha^s0>.
  auto member_of = [&](const GammaElem& g, const FoulserTriple& t) {
    int s0 = t.s % f.r();
    long gs = g.s % f.r();
    if (s0 == 0) {
      return gs == 0 && g.e % t.d == 0;
    }
    if (gs % s0 != 0) return false;
    long tpow = gs / s0;
    // (omega^e0 alpha^s0)^tpow has exponent e0 * (p^(s0*tpow)-1)/(p^s0-1)
    long ps0 = pow_mod(f.p(), s0, m);
    long acc = 0, cur = 1;
    for (long i = 0; i < tpow; ++i) {
      acc = (acc + cur) % m;
      cur = cur * ps0 % m;
    }
    long e_t = t.e % m * acc % m;
    long diff = ((g.e - e_t) % m + m) % m;
    return diff % t.d == 0;
  };

  std::vector<ColorActionSummary> out;
  for (const auto& t : all_standard_triples(f)) {
    if (subgroup_order(t, f) != target_order) continue;
    if (!member_of(GammaElem{a.d % m, 0}, t)) continue;
    if (!member_of(GammaElem{a.e, a.s % f.r()}, t)) continue;

    auto p1 = block_perm(t.d % m, 0, block_of, nblocks, f);
    auto p2 = block_perm(t.e, t.s % f.r(), block_of, nblocks, f);
    if (!p1 || !p2) continue;

    ColorActionSummary summary;
    summary.overgroup = t;
    summary.color_perms = {*p1, *p2};
    auto group = perm_group_closure(summary.color_perms, nblocks);
    summary.group_order = static_cast<long>(group.size());
    summary.transitive = group_is_transitive(group, nblocks);
    summary.cyclic = group_is_cyclic(group, nblocks);
    long factorial = 1;
    for (int i = 2; i <= nblocks; ++i) factorial *= i;
    summary.symmetric = summary.group_order == factorial;
    out.push_back(std::move(summary));
  }
  return out;
}

std::optional<std::vector<int>> induced_color_perm(const GammaElem& g,
                                                   const ColoredCayleyGraph& graph,
                                                   ColorPermRejection* rejection) {
  const FieldTable& f = graph.field();
  long m = f.q() - 1;
  int k = graph.k();
  std::vector<int> perm(k, -1);
  std::vector<long> first_exp(k, -1);
  for (long i = 0; i < m; ++i) {
    int c = graph.color_of_exp(i);
    int img = graph.color_of_exp(gamma_apply_exp(g, i, f));
    if (perm[c] == -1) {
      perm[c] = img;
      first_exp[c] = i;
    } else if (perm[c] != img) {
      if (rejection) *rejection = {first_exp[c], i};
      return std::nullopt;
    }
  }
  return perm;
}

LinearMap embed_semilinear_as_matrix(const GammaElem& g, const FieldTable& f) {
  GammaElem gn{((g.e % (f.q() - 1)) + f.q() - 1) % (f.q() - 1), g.s};
  std::vector<Code> cols(f.r());
  Code we = f.antilog(gn.e);
  for (int j = 0; j < f.r(); ++j) {
    Code basis = f.encode([&] {
      Coeffs c(f.r(), 0);
      c[j] = 1;
      return c;
    }());
    cols[j] = f.mul(we, f.frobenius(basis, gn.s));
  }
  return LinearMap::from_columns(f, cols);
}

}  // namespace tsc
