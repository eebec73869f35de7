// Copyright (c) 2026 the tsc-graphs authors
// Licensed under the Apache License, Version 2.0.

#include "tsc/graph.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace tsc {

ColoredCayleyGraph::ColoredCayleyGraph(FieldRef field, int k,
                                       std::vector<int> color_of_exp,
                                       std::string label)
    : field_(std::move(field)), k_(k), color_(std::move(color_of_exp)),
      label_(std::move(label)) {
  long q = field_->q();
  if (k_ < 1 || static_cast<long>(color_.size()) != q - 1)
    throw Error(ErrorCode::InvalidArgument, "color table size != q-1");
  std::vector<long> seen(k_, 0);
  for (int c : color_) {
    if (c < 0 || c >= k_)
      throw Error(ErrorCode::InvalidArgument, "color index out of range");
    ++seen[c];
  }
  for (int c = 0; c < k_; ++c)
    if (seen[c] == 0)
      throw Error(ErrorCode::InvalidArgument, "color " + std::to_string(c) +
                                                  " is not attained");
  // The coloring must descend to edges of K_q: color(x) = color(-x).
  for (long e = 0; e < q - 1; ++e) {
    Code x = field_->antilog(e);
    if (color_[e] != color_[field_->dlog(field_->neg(x))])
      throw Error(ErrorCode::NotEdgeWellDefined,
                  "color(x) != color(-x) at exponent " + std::to_string(e));
  }
}

std::vector<long> ColoredCayleyGraph::color_class_sizes() const {
  std::vector<long> sizes(k_, 0);
  for (int c : color_) ++sizes[c];
  return sizes;
}

ColoredCayleyGraph gp_k(FieldRef field, int k) {
  long q = field->q();
  if (k < 1 || (q - 1) % k != 0)
    throw Error(ErrorCode::NotEdgeWellDefined, "k does not divide q-1");
  if (field->p() != 2 && ((q - 1) / k) % 2 != 0)
    throw Error(ErrorCode::NotEdgeWellDefined,
                "need p = 2 or (q-1)/k even for an edge coloring");
  std::vector<int> color(q - 1);
  for (long j = 0; j < q - 1; ++j) color[j] = static_cast<int>(j % k);
  std::string label = "GP_" + std::to_string(k) + "(" +
                      std::to_string(field->p()) +
                      (field->r() > 1 ? "^" + std::to_string(field->r()) : "") + ")";
  return ColoredCayleyGraph(std::move(field), k, std::move(color), label);
}

ColoredCayleyGraph paley(FieldRef field) {
  long q = field->q();
  if (q % 4 != 1)
    throw Error(ErrorCode::NotEdgeWellDefined, "Paley graph needs q = 1 mod 4");
  std::vector<int> color(q - 1);
  for (long j = 0; j < q - 1; ++j) color[j] = static_cast<int>(j % 2);
  return ColoredCayleyGraph(std::move(field), 2, std::move(color),
                            "PG(" + std::to_string(q) + ")");
}

ColoredCayleyGraph peisert(FieldRef field) {
  if (field->p() % 4 != 3 || field->r() % 2 != 0)
    throw Error(ErrorCode::NotEdgeWellDefined,
                "Peisert graph needs p = 3 mod 4 and r even");
  long q = field->q();
  std::vector<int> color(q - 1);
  for (long j = 0; j < q - 1; ++j) color[j] = (j % 4 <= 1) ? 0 : 1;
  return ColoredCayleyGraph(std::move(field), 2, std::move(color),
                            "PG*(" + std::to_string(q) + ")");
}

namespace {

// Canonical projective representative: scale so the first nonzero component
// is 1.  Components are codes in the base field.
std::vector<Code> canonical_direction(const FieldTable& fq, std::vector<Code> v) {
  for (int t = 0; t < static_cast<int>(v.size()); ++t) {
    if (v[t] != 0) {
      Code s = fq.inv(v[t]);
      for (auto& c : v) c = fq.mul(s, c);
      return v;
    }
  }
  throw Error(ErrorCode::BadPartition, "zero vector has no direction");
}

// Splits an ambient code of GF(p^(r*d)) into d component codes of GF(p^r).
std::vector<Code> split_components(long p, int r, int d, Code a) {
  std::vector<Code> v(d, 0);
  long val = a;
  long pr = 1;
  for (int i = 0; i < r; ++i) pr *= p;
  for (int t = 0; t < d; ++t) {
    v[t] = static_cast<Code>(val % pr);
    val /= pr;
  }
  return v;
}

long flatten_components(long p, int r, const std::vector<Code>& v) {
  long pr = 1;
  for (int i = 0; i < r; ++i) pr *= p;
  long code = 0;
  for (int t = static_cast<int>(v.size()) - 1; t >= 0; --t)
    code = code * pr + v[t];
  return code;
}

ColoredCayleyGraph build_direction_colored(FieldRef field_q, int d,
                                           const std::map<long, int>& color_of_rep,
                                           int k, const std::string& label) {
  long p = field_q->p();
  int r = field_q->r();
  FieldRef ambient = FieldTable::build(p, r * d);
  long n = ambient->q();
  std::vector<int> color(n - 1, -1);
  for (long e = 0; e < n - 1; ++e) {
    Code a = ambient->antilog(e);
    auto rep = canonical_direction(*field_q, split_components(p, r, d, a));
    auto it = color_of_rep.find(flatten_components(p, r, rep));
    if (it == color_of_rep.end())
      throw Error(ErrorCode::BadPartition, "direction not covered by partition");
    color[e] = it->second;
  }
  return ColoredCayleyGraph(std::move(ambient), k, std::move(color), label);
}

}  // namespace

ColoredCayleyGraph direction_graph(FieldRef field_q, int d) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "direction graph needs d > 1");
  long p = field_q->p();
  int r = field_q->r();
  long q = field_q->q();
  long n = 1;
  for (int i = 0; i < r * d; ++i) n *= p;
  // Enumerate canonical representatives in flattened-code order.
  std::map<long, int> color_of_rep;
  for (long a = 1; a < n; ++a) {
    auto rep = canonical_direction(*field_q, split_components(p, r, d, static_cast<Code>(a)));
    long flat = flatten_components(p, r, rep);
    color_of_rep.emplace(flat, 0);
  }
  int k = 0;
  for (auto& [rep, c] : color_of_rep) c = k++;
  if (k != (n - 1) / (q - 1))
    throw Error(ErrorCode::InvalidArgument, "unexpected direction count");
  std::string label = "F_" + std::to_string(k) + "(" + std::to_string(q) + "^" +
                      std::to_string(d) + ")";
  return build_direction_colored(std::move(field_q), d, color_of_rep, k, label);
}

ColoredCayleyGraph partition_direction_graph(FieldRef field_q, int d,
                                             const DirectionPartition& partition,
                                             const std::string& label) {
  if (d < 1 || partition.d != d)
    throw Error(ErrorCode::BadPartition, "partition dimension mismatch");
  long p = field_q->p();
  int r = field_q->r();
  long q = field_q->q();
  long n = 1;
  for (int i = 0; i < r * d; ++i) n *= p;
  long num_directions = (n - 1) / (q - 1);

  std::map<long, int> color_of_rep;
  size_t block_size = partition.blocks.empty() ? 0 : partition.blocks[0].size();
  long covered = 0;
  for (int b = 0; b < static_cast<int>(partition.blocks.size()); ++b) {
    if (partition.blocks[b].size() != block_size)
      throw Error(ErrorCode::BadPartition, "blocks have unequal sizes");
    for (const auto& vec : partition.blocks[b]) {
      if (static_cast<int>(vec.size()) != d)
        throw Error(ErrorCode::BadPartition, "direction vector has wrong dimension");
      std::vector<Code> v(d);
      for (int t = 0; t < d; ++t) {
        long c = vec[t] % q;
        if (c < 0) c += q;
        v[t] = static_cast<Code>(c);
      }
      auto rep = canonical_direction(*field_q, std::move(v));
      long flat = flatten_components(p, r, rep);
      if (!color_of_rep.emplace(flat, b).second)
        throw Error(ErrorCode::BadPartition, "direction listed twice");
      ++covered;
    }
  }
  if (covered != num_directions)
    throw Error(ErrorCode::BadPartition, "blocks do not cover all directions");

  int k = static_cast<int>(partition.blocks.size());
  std::string lbl = label.empty()
                        ? "G_" + std::to_string(k) + "(" + std::to_string(q) + "^" +
                              std::to_string(d) + ")"
                        : label;
  return build_direction_colored(std::move(field_q), d, color_of_rep, k, lbl);
}

ColoredCayleyGraph orbital_graph(FieldRef field,
                                 const std::vector<OrbitalGenerator>& generators) {
  const FieldTable& f = *field;
  long q = f.q();

  // Resolve each generator to a map on nonzero codes.
  std::vector<std::vector<Code>> action;
  for (const auto& g : generators) {
    std::vector<Code> img(q, 0);
    if (std::holds_alternative<GammaElem>(g)) {
      const auto& ge = std::get<GammaElem>(g);
      long ps = 1;
      for (int i = 0; i < ge.s % f.r(); ++i) ps = ps * f.p() % (q - 1);
      for (long e = 0; e < q - 1; ++e)
        img[f.antilog(e)] = f.antilog(f.mod_exp(ps * e + ge.e));
    } else {
      const auto& lm = std::get<LinearMap>(g);
      if (lm.p != f.p() || lm.r != f.r())
        throw Error(ErrorCode::InvalidArgument, "generator matrix shape mismatch");
      if (!lm.invertible())
        throw Error(ErrorCode::SingularGenerator, "generator matrix is singular");
      for (Code v = 1; v < q; ++v) img[v] = lm.apply(f, v);
    }
    action.push_back(std::move(img));
  }

  // Breadth-first orbit closure on nonzero elements.
  std::vector<int> orbit_of(q, -1);
  std::vector<long> orbit_min_dlog;
  for (long e = 0; e < q - 1; ++e) {
    Code start = f.antilog(e);
    if (orbit_of[start] != -1) continue;
    int id = static_cast<int>(orbit_min_dlog.size());
    orbit_min_dlog.push_back(e);
    std::vector<Code> frontier{start};
    orbit_of[start] = id;
    while (!frontier.empty()) {
      Code v = frontier.back();
      frontier.pop_back();
      for (const auto& img : action) {
        Code w = img[v];
        if (orbit_of[w] == -1) {
          orbit_of[w] = id;
          frontier.push_back(w);
        }
      }
    }
  }

  // Orbits must be symmetric (closed under negation) to color edges.
  for (Code v = 1; v < q; ++v)
    if (orbit_of[v] != orbit_of[f.neg(v)])
      throw Error(ErrorCode::NotEdgeWellDefined,
                  "orbit of element with dlog " + std::to_string(f.dlog(v)) +
                      " is not closed under negation");

  // Color indices ordered by minimal dlog (orbit ids already are, since we
  // scan exponents in increasing order).
  int k = static_cast<int>(orbit_min_dlog.size());
  std::vector<int> color(q - 1);
  for (long e = 0; e < q - 1; ++e) color[e] = orbit_of[f.antilog(e)];
  return ColoredCayleyGraph(field, k, std::move(color),
                            "orbital(" + std::to_string(q) + ")");
}

ColoredCayleyGraph merge_colors(const ColoredCayleyGraph& g,
                                const std::vector<int>& surjection) {
  if (static_cast<int>(surjection.size()) != g.k())
    throw Error(ErrorCode::BadRecoloring, "surjection size != k");
  int k2 = 0;
  for (int c : surjection) {
    if (c < 0) throw Error(ErrorCode::BadRecoloring, "negative color");
    k2 = std::max(k2, c + 1);
  }
  std::vector<bool> hit(k2, false);
  for (int c : surjection) hit[c] = true;
  for (int c = 0; c < k2; ++c)
    if (!hit[c]) throw Error(ErrorCode::BadRecoloring, "map is not surjective");
  std::vector<int> color(g.color_of_exp().size());
  for (size_t j = 0; j < color.size(); ++j) color[j] = surjection[g.color_of_exp()[j]];
  return ColoredCayleyGraph(g.field_ref(), k2, std::move(color),
                            g.label() + "/merged");
}

}  // namespace tsc
