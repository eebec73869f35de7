// Copyright (c) 2026 the tsc-graphs authors
// Licensed under the Apache License, Version 2.0.

#include "tsc/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <mutex>
#include <numeric>
#include <thread>

namespace tsc {

namespace {

void validate_target(const ColoredCayleyGraph& graph, const ColorPermutation& target) {
  int k = graph.k();
  if (static_cast<int>(target.size()) != k)
    throw Error(ErrorCode::InvalidArgument, "target permutation size != k");
  std::vector<bool> hit(k, false);
  for (int c : target) {
    if (c < 0 || c >= k || hit[c])
      throw Error(ErrorCode::InvalidArgument, "target is not a permutation");
    hit[c] = true;
  }
}

struct SearchContext {
  const ColoredCayleyGraph& graph;
  const FieldTable& f;
  SearchConfig config;
  bool gf2 = false;

  int r = 0;
  long q = 0;
  std::vector<std::vector<Code>> cand;      // per-column candidates
  std::vector<std::uint64_t> suffix;        // suffix[j] = prod of |cand_i|, i >= j
  std::vector<int> color_of_code;           // -1 for zero
  std::vector<int> required_color_of_exp;   // target(color(omega^e))
  std::vector<std::vector<int>> pair_required;  // [t][i] color required of col_t+col_i
  std::vector<std::vector<Code>> scal;      // scalar multiple table (generic path)
  std::vector<Coeffs> digits;               // code -> base-p digits

  // results
  std::atomic<bool> found{false};
  std::atomic<std::uint64_t> shard_cursor{0};
  std::mutex result_mutex;
  std::optional<std::vector<Code>> best_witness_cols;
  std::uint64_t enumerated = 0;
  std::uint64_t pruned = 0;
  std::uint64_t witnesses = 0;
};

// Per-thread DFS below the shard column.
struct ShardWorker {
  SearchContext& cx;
  std::vector<Code> cols;
  std::uint64_t enumerated = 0;
  std::uint64_t pruned = 0;
  std::uint64_t witnesses = 0;
  std::uint64_t processed_since_report = 0;
  std::optional<std::vector<Code>> witness_cols;

  explicit ShardWorker(SearchContext& c) : cx(c), cols(c.r, 0) {}

  Code add(Code a, Code b) const { return cx.gf2 ? (a ^ b) : cx.f.add(a, b); }

  bool pair_ok(int depth) const {
    if (!cx.config.prune_pair_sums) return true;
    Code w = cols[depth];
    for (int i = 0; i < depth; ++i) {
      Code s = add(w, cols[i]);
      if (s == 0 || cx.color_of_code[s] != cx.pair_required[depth][i]) return false;
    }
    return true;
  }

  bool verify_leaf() const {
    const long m = cx.q - 1;
    if (cx.gf2) {
      for (long e = 0; e < m; ++e) {
        Code v = cx.f.antilog(e);
        Code acc = 0;
        for (int j = 0; j < cx.r; ++j)
          if (v & (1 << j)) acc ^= cols[j];
        if (acc == 0 || cx.color_of_code[acc] != cx.required_color_of_exp[e])
          return false;
      }
    } else {
      for (long e = 0; e < m; ++e) {
        Code v = cx.f.antilog(e);
        Code acc = 0;
        const Coeffs& dg = cx.digits[v];
        for (int j = 0; j < cx.r; ++j)
          if (dg[j]) acc = cx.f.add(acc, cx.scal[dg[j]][cols[j]]);
        if (acc == 0 || cx.color_of_code[acc] != cx.required_color_of_exp[e])
          return false;
      }
    }
    return true;
  }

  void report_progress(std::uint64_t n) {
    processed_since_report += n;
    if (processed_since_report >= cx.config.progress_interval) {
      std::fprintf(stderr, "search: %llu more candidates processed\n",
                   static_cast<unsigned long long>(processed_since_report));
      processed_since_report = 0;
    }
  }

  // Returns false to abort (witness found in non-counting mode).
  bool dfs(int depth) {
    if (!cx.config.count_all && cx.found.load(std::memory_order_relaxed))
      return false;
    if (depth == cx.r) {
      ++enumerated;
      report_progress(1);
      if (verify_leaf()) {
        ++witnesses;
        if (!witness_cols) witness_cols = cols;
        if (!cx.config.count_all) {
          cx.found.store(true, std::memory_order_relaxed);
          return false;
        }
      }
      return true;
    }
    for (Code c : cx.cand[depth]) {
      cols[depth] = c;
      if (!pair_ok(depth)) {
        pruned += cx.suffix[depth + 1];
        report_progress(cx.suffix[depth + 1]);
        continue;
      }
      if (!dfs(depth + 1)) return false;
    }
    return true;
  }

  void run(int shard_depth) {
    // columns above the shard depth are single-candidate (pinned)
    for (int d = 0; d < shard_depth; ++d) cols[d] = cx.cand[d][0];
    for (;;) {
      std::uint64_t idx = cx.shard_cursor.fetch_add(1);
      if (idx >= cx.cand[shard_depth].size()) break;
      if (!cx.config.count_all && cx.found.load(std::memory_order_relaxed)) break;
      cols[shard_depth] = cx.cand[shard_depth][idx];
      if (!pair_ok(shard_depth)) {
        pruned += cx.suffix[shard_depth + 1];
        report_progress(cx.suffix[shard_depth + 1]);
        continue;
      }
      if (!dfs(shard_depth + 1)) break;
    }
  }
};

SearchCertificate run_search(const ColoredCayleyGraph& graph, SearchConfig config,
                             bool gf2) {
  const FieldTable& f = graph.field();
  validate_target(graph, config.target);
  if (gf2) {
    if (f.p() != 2 || f.r() > 8)
      throw Error(ErrorCode::NotBinaryField, "fast path requires GF(2^r), r <= 8");
  }
  if (config.thread_count < 1) config.thread_count = 1;

  SearchContext cx{graph, f, config, gf2};
  cx.r = f.r();
  cx.q = f.q();
  cx.cand = column_candidates(graph, config.target, config.fix_first_column);
  cx.suffix.assign(cx.r + 1, 1);
  for (int j = cx.r - 1; j >= 0; --j)
    cx.suffix[j] = cx.suffix[j + 1] * cx.cand[j].size();

  cx.color_of_code.assign(cx.q, -1);
  cx.required_color_of_exp.assign(cx.q - 1, -1);
  for (long e = 0; e < cx.q - 1; ++e) {
    cx.color_of_code[f.antilog(e)] = graph.color_of_exp(e);
    cx.required_color_of_exp[e] = config.target[graph.color_of_exp(e)];
  }
  cx.pair_required.assign(cx.r, std::vector<int>(cx.r, -1));
  std::vector<Code> basis(cx.r);
  {
    long pw = 1;
    for (int j = 0; j < cx.r; ++j) {
      basis[j] = static_cast<Code>(pw);
      pw *= f.p();
    }
  }
  for (int t = 0; t < cx.r; ++t)
    for (int i = 0; i < t; ++i)
      cx.pair_required[t][i] =
          config.target[cx.color_of_code[f.add(basis[t], basis[i])]];
  if (!gf2) {
    cx.scal.assign(f.p(), std::vector<Code>(cx.q, 0));
    for (long t = 1; t < f.p(); ++t)
      for (Code v = 1; v < cx.q; ++v) cx.scal[t][v] = f.scalar_mul(t, v);
    cx.digits.resize(cx.q);
    for (Code v = 0; v < cx.q; ++v) cx.digits[v] = f.decode(v);
  }

  int shard_depth = config.fix_first_column ? 1 : 0;
  if (cx.r == 1) shard_depth = 0;

  auto t0 = std::chrono::steady_clock::now();
  std::vector<ShardWorker> workers;
  workers.reserve(config.thread_count);
  for (int i = 0; i < config.thread_count; ++i) workers.emplace_back(cx);
  if (config.thread_count == 1) {
    workers[0].run(shard_depth);
  } else {
    std::vector<std::thread> threads;
    for (auto& w : workers)
      threads.emplace_back([&w, shard_depth] { w.run(shard_depth); });
    for (auto& t : threads) t.join();
  }
  auto t1 = std::chrono::steady_clock::now();

  SearchCertificate cert;
  cert.config = config;
  cert.fast_path = gf2;
  cert.search_space = cx.suffix[0];
  cert.wall_time_s = std::chrono::duration<double>(t1 - t0).count();
  std::optional<std::vector<Code>> best;
  for (auto& w : workers) {
    cert.candidates_enumerated += w.enumerated;
    cert.candidates_pruned += w.pruned;
    cert.witness_count += w.witnesses;
    if (w.witness_cols && (!best || *w.witness_cols < *best)) best = w.witness_cols;
  }
  if (best) {
    cert.outcome = SearchCertificate::Outcome::WitnessFound;
    cert.witness = LinearMap::from_columns(f, *best);
  } else {
    cert.outcome = SearchCertificate::Outcome::Exhausted;
  }
  return cert;
}

}  // namespace

std::vector<std::vector<Code>> column_candidates(const ColoredCayleyGraph& graph,
                                                 const ColorPermutation& target,
                                                 bool fix_first_column) {
  const FieldTable& f = graph.field();
  validate_target(graph, target);
  int r = f.r();
  long q = f.q();
  std::vector<std::vector<Code>> cand(r);
  long pw = 1;
  for (int j = 0; j < r; ++j) {
    Code basis = static_cast<Code>(pw);
    pw *= f.p();
    int needed = target[graph.color_of_code(basis)];
    for (long e = 0; e < q - 1; ++e)
      if (graph.color_of_exp(e) == needed) cand[j].push_back(f.antilog(e));
    if (cand[j].empty())
      throw Error(ErrorCode::ImpossibleTarget,
                  "no candidate vectors for column " + std::to_string(j));
  }
  if (fix_first_column) {
    if (target[graph.color_of_code(1)] != graph.color_of_code(1))
      throw Error(ErrorCode::InvalidArgument,
                  "first-column normalization requires the target to fix color 0");
    cand[0] = {cand[0].front()};
  }
  return cand;
}

bool pair_sum_keep(const ColoredCayleyGraph& graph, const ColorPermutation& target,
                   const std::vector<Code>& columns) {
  const FieldTable& f = graph.field();
  long pw = 1;
  std::vector<Code> basis(columns.size());
  for (size_t j = 0; j < columns.size(); ++j) {
    basis[j] = static_cast<Code>(pw);
    pw *= f.p();
  }
  for (size_t t = 1; t < columns.size(); ++t)
    for (size_t i = 0; i < t; ++i) {
      Code s = f.add(columns[t], columns[i]);
      int required = target[graph.color_of_code(f.add(basis[t], basis[i]))];
      if (s == 0 || graph.color_of_code(s) != required) return false;
    }
  return true;
}

SearchCertificate transposition_search(const ColoredCayleyGraph& graph,
                                       const SearchConfig& config) {
  return run_search(graph, config, false);
}

SearchCertificate cyclic_search(const ColoredCayleyGraph& graph,
                                const SearchConfig& config) {
  SearchConfig c = config;
  if (!c.target.empty() && c.target[0] != 0) c.fix_first_column = false;
  return run_search(graph, c, false);
}

SearchCertificate gf2_fast_path(const ColoredCayleyGraph& graph,
                                const SearchConfig& config) {
  return run_search(graph, config, true);
}

std::uint64_t stabilizer_count(const ColoredCayleyGraph& graph, int thread_count) {
  SearchConfig config;
  config.target.resize(graph.k());
  std::iota(config.target.begin(), config.target.end(), 0);
  config.fix_first_column = false;
  config.count_all = true;
  config.thread_count = thread_count;
  auto cand = column_candidates(graph, config.target, false);
  std::uint64_t space = 1;
  for (const auto& c : cand) {
    space *= c.size();
    if (space > 1'000'000'000'000ULL)
      throw Error(ErrorCode::EnumerationTooLarge, "stabilizer space too large");
  }
  auto cert = run_search(graph, config, false);
  return cert.witness_count;
}

}  // namespace tsc
