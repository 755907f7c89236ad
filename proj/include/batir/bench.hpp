#pragma once

// Wall-clock comparison of the naive nested-loop side of an identity against
// its closed form. One kernel cache is shared across all measurements of an
// entry, matching how kernels behave in a production sweep; the naive side
// has no such shortcut, so term count dominates it.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "batir/catalog.hpp"
#include "batir/expr.hpp"
#include "batir/verify.hpp"

namespace batir {

struct BenchRow {
  std::string id;
  std::int64_t n = 0;
  std::int64_t naive_ns = 0;
  std::int64_t closed_ns = 0;
  double speedup = 0.0;
};

namespace detail {

inline std::int64_t median_eval_ns(const Expr& e, const ParamBinding& binding, KernelCache& cache,
                                   int reps) {
  std::vector<std::int64_t> times;
  times.reserve(static_cast<std::size_t>(reps));
  for (int i = 0; i < reps; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Rational v = eval(e, binding, cache);
    auto t1 = std::chrono::steady_clock::now();
    (void)v;
    times.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

// First sample-combo values plus seeded random draws; benchmark entries are
// normally parameter-free, this keeps the others usable too.
inline ParamBinding bench_binding(const IdentityRecord& rec, std::int64_t n, std::uint64_t seed) {
  ParamBinding binding;
  binding.scalars.emplace("n", Rational(static_cast<long>(n)));
  auto combos = enumerate_sample_combos(rec, n);
  if (!combos.empty())
    for (const auto& [name, value] : combos.front().scalars) binding.scalars[name] = value;
  Rng rng(mix_seed(seed, rec.id));
  draw_random_parts(rec, binding, rng);
  return binding;
}

}  // namespace detail

inline std::vector<BenchRow> bench(const std::vector<std::string>& entry_ids,
                                   const std::vector<std::int64_t>& n_points, int reps = 5,
                                   std::uint64_t seed = 42) {
  if (reps < 5) reps = 5;
  std::vector<BenchRow> rows;
  for (const auto& id : entry_ids) {
    const IdentityRecord* rec = find_identity(id);
    if (!rec) throw UnknownIdentity(id);
    KernelCache cache;
    for (std::int64_t n : n_points) {
      ParamBinding binding = detail::bench_binding(*rec, n, seed);
      BenchRow row;
      row.id = id;
      row.n = n;
      row.naive_ns = detail::median_eval_ns(rec->lhs, binding, cache, reps);
      row.closed_ns = detail::median_eval_ns(rec->rhs, binding, cache, reps);
      row.speedup = row.closed_ns > 0
                        ? static_cast<double>(row.naive_ns) / static_cast<double>(row.closed_ns)
                        : 0.0;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

inline std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out = "id,n,naive_ns,closed_ns,speedup\n";
  char buf[64];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%.3f", r.speedup);
    out += r.id + "," + std::to_string(r.n) + "," + std::to_string(r.naive_ns) + "," +
           std::to_string(r.closed_ns) + "," + buf + "\n";
  }
  return out;
}

}  // namespace batir
