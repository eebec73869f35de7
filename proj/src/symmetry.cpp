// Copyright (c) 2026 the tsc-graphs authors
// Licensed under the Apache License, Version 2.0.

#include "tsc/symmetry.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace tsc {

namespace {

// Orbit partition of the stabilizer action on nonzero codes, as a label
// array indexed by code (labels in discovery order of smallest dlog).
std::vector<int> stabilizer_orbit_labels(const ColoredCayleyGraph& graph,
                                         const Stabilizer& stab, int* count) {
  const FieldTable& f = graph.field();
  long q = f.q();
  std::vector<std::vector<Code>> images;
  if (std::holds_alternative<FoulserTriple>(stab)) {
    const auto& t = std::get<FoulserTriple>(stab);
    for (const auto& g : {GammaElem{t.d, 0}, GammaElem{t.e, t.s % f.r()}}) {
      std::vector<Code> img(q, 0);
      for (long e = 0; e < q - 1; ++e)
        img[f.antilog(e)] = f.antilog(gamma_apply_exp(g, e, f));
      images.push_back(std::move(img));
    }
  } else {
    for (const auto& lm : std::get<std::vector<LinearMap>>(stab)) {
      if (!lm.invertible())
        throw Error(ErrorCode::SingularGenerator, "stabilizer matrix is singular");
      std::vector<Code> img(q, 0);
      for (Code v = 1; v < q; ++v) img[v] = lm.apply(f, v);
      images.push_back(std::move(img));
    }
  }
  std::vector<int> label(q, -1);
  int orbits = 0;
  for (long e = 0; e < q - 1; ++e) {
    Code start = f.antilog(e);
    if (label[start] != -1) continue;
    int id = orbits++;
    std::vector<Code> frontier{start};
    label[start] = id;
    while (!frontier.empty()) {
      Code v = frontier.back();
      frontier.pop_back();
      for (const auto& img : images) {
        Code w = img[v];
        if (label[w] == -1) {
          label[w] = id;
          frontier.push_back(w);
        }
      }
    }
  }
  if (count) *count = orbits;
  return label;
}

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

ArcTransitivityReport verify_arc_transitive(const ColoredCayleyGraph& graph,
                                            const Stabilizer& stabilizer) {
  const FieldTable& f = graph.field();
  int orbits = 0;
  auto label = stabilizer_orbit_labels(graph, stabilizer, &orbits);
  ArcTransitivityReport report;
  report.stabilizer_orbits = orbits;
  if (orbits != graph.k()) {
    report.detail = "stabilizer has " + std::to_string(orbits) + " orbits, graph has " +
                    std::to_string(graph.k()) + " colors";
    return report;
  }
  // Partitions are equal iff orbit label -> color is a well-defined
  // bijection (colors need not be indexed in orbit-label order, e.g. for
  // block-listed partition colorings).
  std::vector<int> orbit_color(orbits, -1);
  std::vector<bool> color_used(graph.k(), false);
  for (long e = 0; e < f.q() - 1; ++e) {
    int o = label[f.antilog(e)];
    int c = graph.color_of_exp(e);
    if (orbit_color[o] == -1) {
      if (color_used[c]) {
        report.detail = "two orbits share color " + std::to_string(c);
        return report;
      }
      orbit_color[o] = c;
      color_used[c] = true;
    } else if (orbit_color[o] != c) {
      report.detail = "orbit/color mismatch at exponent " + std::to_string(e);
      return report;
    }
  }
  report.arc_transitive = true;
  report.detail = "stabilizer orbits equal color classes";
  return report;
}

LinesReport lines_monochromatic(const ColoredCayleyGraph& graph) {
  const FieldTable& f = graph.field();
  long q = f.q();
  std::vector<bool> visited(q, false);
  for (Code v = 1; v < q; ++v) {
    if (visited[v]) continue;
    int color = graph.color_of_code(v);
    for (long t = 1; t < f.p(); ++t) {
      Code w = f.scalar_mul(t, v);
      visited[w] = true;
      if (graph.color_of_code(w) != color) return {false, v};
    }
  }
  return {true, std::nullopt};
}

std::optional<ColorPermutation> induced_color_perm_matrix(
    const LinearMap& b, const ColoredCayleyGraph& graph, Code* witness) {
  const FieldTable& f = graph.field();
  if (b.p != f.p() || b.r != f.r())
    throw Error(ErrorCode::InvalidArgument, "matrix shape does not match field");
  if (!b.invertible())
    throw Error(ErrorCode::InvalidArgument, "matrix is not invertible");
  int k = graph.k();
  ColorPermutation perm(k, -1);
  for (long e = 0; e < f.q() - 1; ++e) {
    Code v = f.antilog(e);
    int c = graph.color_of_exp(e);
    int img = graph.color_of_code(b.apply(f, v));
    if (perm[c] == -1) perm[c] = img;
    else if (perm[c] != img) {
      if (witness) *witness = v;
      return std::nullopt;
    }
  }
  return perm;
}

namespace {

std::vector<ColorPermutation> perm_closure(const std::vector<ColorPermutation>& gens,
                                           int k) {
  std::set<ColorPermutation> seen;
  ColorPermutation id(k);
  std::iota(id.begin(), id.end(), 0);
  seen.insert(id);
  std::vector<ColorPermutation> frontier{id};
  while (!frontier.empty()) {
    std::vector<ColorPermutation> next;
    for (const auto& a : frontier)
      for (const auto& g : gens) {
        ColorPermutation c(k);
        for (int i = 0; i < k; ++i) c[i] = g[a[i]];
        if (seen.insert(c).second) next.push_back(c);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

ColorGroupSummary color_symmetry_group(const ColoredCayleyGraph& graph,
                                       const std::vector<LinearMap>& witnesses) {
  int k = graph.k();
  ColorGroupSummary summary;
  for (const auto& w : witnesses) {
    Code bad = 0;
    auto perm = induced_color_perm_matrix(w, graph, &bad);
    if (!perm)
      throw Error(ErrorCode::NotColorPermuting,
                  "witness does not permute colors; witness vector code " +
                      std::to_string(bad));
    summary.generators.push_back(*perm);
  }
  summary.elements = perm_closure(summary.generators, k);
  summary.order = static_cast<long>(summary.elements.size());
  summary.is_symmetric = summary.order == factorial(k);
  // cyclic and transitive
  std::vector<bool> hit(k, false);
  for (const auto& g : summary.elements) hit[g[0]] = true;
  bool transitive = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  bool cyclic = false;
  ColorPermutation id(k);
  std::iota(id.begin(), id.end(), 0);
  for (const auto& g : summary.elements) {
    ColorPermutation cur = id;
    long o = 0;
    do {
      ColorPermutation nxt(k);
      for (int i = 0; i < k; ++i) nxt[i] = g[cur[i]];
      cur = std::move(nxt);
      ++o;
    } while (cur != id);
    if (o == summary.order) cyclic = true;
  }
  summary.is_cyclic_transitive = cyclic && transitive;
  return summary;
}

std::vector<LinearMap> linear_stabilizer(const ColoredCayleyGraph& graph,
                                         long max_gl_order) {
  const FieldTable& f = graph.field();
  long q = f.q();
  int r = f.r();
  // |GL_r(p)| = prod (q - p^i)
  long gl_order = 1;
  long pi = 1;
  for (int i = 0; i < r; ++i) {
    gl_order *= (q - pi);
    if (gl_order > max_gl_order || gl_order < 0)
      throw Error(ErrorCode::EnumerationTooLarge,
                  "|GL_r(p)| exceeds the full-enumeration bound");
    pi *= f.p();
  }

  // Walk all column tuples; identity-permutation verification rejects
  // singular matrices via a zero image.
  std::vector<LinearMap> out;
  std::vector<Code> cols(r, 1);
  std::vector<int> color_of_code(q, -1);
  for (long e = 0; e < q - 1; ++e) color_of_code[f.antilog(e)] = graph.color_of_exp(e);
  // scalar multiple table: scal[t][v]
  std::vector<std::vector<Code>> scal(f.p(), std::vector<Code>(q, 0));
  for (long t = 1; t < f.p(); ++t)
    for (Code v = 1; v < q; ++v) scal[t][v] = f.scalar_mul(t, v);

  std::vector<Coeffs> digits(q);
  for (Code v = 0; v < q; ++v) digits[v] = f.decode(v);

  std::function<void(int)> rec = [&](int depth) {
    if (depth == r) {
      // verify identity color action over all nonzero vectors
      for (long e = 0; e < q - 1; ++e) {
        Code v = f.antilog(e);
        Code acc = 0;
        const Coeffs& dg = digits[v];
        for (int j = 0; j < r; ++j)
          if (dg[j]) acc = f.add(acc, scal[dg[j]][cols[j]]);
        if (acc == 0 || color_of_code[acc] != color_of_code[v]) return;
      }
      out.push_back(LinearMap::from_columns(f, cols));
      return;
    }
    for (Code c = 1; c < q; ++c) {
      cols[depth] = c;
      rec(depth + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<Code>> iso_colored(const ColoredCayleyGraph& a,
                                             const ColoredCayleyGraph& b,
                                             const IsoOptions& opts) {
  const FieldTable& fa = a.field();
  const FieldTable& fb = b.field();
  long n = fa.q();
  if (n != fb.q() || a.k() != b.k()) return std::nullopt;
  if (n > opts.max_vertices)
    throw Error(ErrorCode::EnumerationTooLarge,
                "iso backtracking limited to " + std::to_string(opts.max_vertices) +
                    " vertices");
  int k = a.k();

  // Precompute edge color matrices indexed by vertex codes.
  auto color_table = [n](const ColoredCayleyGraph& g) {
    const FieldTable& f = g.field();
    std::vector<int> t(n, -1);
    for (Code v = 1; v < n; ++v) t[v] = g.color_of_code(v);
    return t;
  };
  std::vector<int> ca = color_table(a), cb = color_table(b);

  // Candidate global color relabelings (sigma applied to colors of A).
  std::vector<ColorPermutation> relabelings;
  ColorPermutation sigma(k);
  std::iota(sigma.begin(), sigma.end(), 0);
  if (opts.permute_colors) {
    // All k! permutations, but only those matching class sizes.
    auto sizes_a = a.color_class_sizes();
    auto sizes_b = b.color_class_sizes();
    do {
      bool ok = true;
      for (int c = 0; c < k; ++c)
        if (sizes_a[c] != sizes_b[sigma[c]]) ok = false;
      if (ok) relabelings.push_back(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  } else {
    relabelings.push_back(sigma);
  }

  // Both colorings are translation invariant, so any isomorphism can be
  // normalized to fix 0.
  for (const auto& rl : relabelings) {
    std::vector<Code> map(n, -1);
    std::vector<bool> used(n, false);
    map[0] = 0;
    used[0] = true;
    // assign vertices in code order 1..n-1
    std::vector<Code> order;
    for (Code v = 1; v < n; ++v) order.push_back(v);

    std::function<bool(size_t)> rec = [&](size_t idx) -> bool {
      if (idx == order.size()) return true;
      Code v = order[idx];
      for (Code u = 1; u < n; ++u) {
        if (used[u]) continue;
        // edge to 0 plus all previously assigned vertices
        if (cb[u] != rl[ca[v]]) continue;
        bool ok = true;
        for (size_t j = 0; j < idx; ++j) {
          Code w = order[j];
          int cA = ca[fa.sub(v, w)];
          int cB = cb[fb.sub(u, map[w])];
          if (cB != rl[cA]) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        map[v] = u;
        used[u] = true;
        if (rec(idx + 1)) return true;
        used[u] = false;
        map[v] = -1;
      }
      return false;
    };
    if (rec(0)) return map;
  }
  return std::nullopt;
}

TscReport verify_tsc(const ColoredCayleyGraph& graph, const Stabilizer& stabilizer,
                     const std::vector<LinearMap>& witnesses) {
  TscReport report;
  report.arc = verify_arc_transitive(graph, stabilizer);
  report.colors = color_symmetry_group(graph, witnesses);
  if (graph.k() == 1) {
    report.verdict = "TOTALLY_SYMMETRIC";
  } else if (report.arc.arc_transitive && report.colors.is_symmetric) {
    report.verdict = "TOTALLY_SYMMETRIC";
  } else {
    report.verdict = "UNRESOLVED";
  }
  return report;
}

}  // namespace tsc
