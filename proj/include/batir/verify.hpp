#pragma once

// Sweeps identity records over n and their parameter domains, asserting
// exact rational equality of both sides. Random domains are drawn from a
// deterministic generator seeded per record, so a suite run is a pure
// function of (catalog, filter, n_max, seed) regardless of worker count.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <variant>
#include <vector>

#include <json.hpp>

#include "batir/catalog.hpp"
#include "batir/errors.hpp"
#include "batir/expr.hpp"

namespace batir {

// ---------------------------------------------------------------------------
// Deterministic randomness

namespace detail {

inline std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a over the tag
  for (char ch : tag) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ULL;
  }
  h ^= seed + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  return h;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(eng_() % span);
  }

  // numerators in [-99, 99], denominators in [1, 20]
  Rational rational() {
    std::int64_t num = uniform(-99, 99);
    std::int64_t den = uniform(1, 20);
    return Rational(static_cast<long>(num), static_cast<long>(den));
  }

  std::vector<Rational> sequence(std::int64_t count) {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) out.push_back(rational());
    return out;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Binomial transform (self-contained; doubles as the oracle for the pair
// identities, so it deliberately avoids KernelCache binomials)

inline std::vector<Rational> binomial_transform(const std::vector<Rational>& s) {
  std::vector<Rational> out(s.size());
  std::vector<Rational> row;  // Pascal row binom(n, .)
  for (std::size_t n = 0; n < s.size(); ++n) {
    row.push_back(Rational(1));
    for (std::size_t k = n >= 1 ? n - 1 : 0; k >= 1; --k) row[k] += row[k - 1];
    Rational acc(0);
    for (std::size_t k = 0; k <= n; ++k) {
      Rational term = row[k] * s[k];
      if (k % 2 != 0) term = -term;
      acc += term;
    }
    out[n] = acc;
  }
  return out;
}

// The transform is an involution; the inverse is the same map.
inline std::vector<Rational> inverse_binomial_transform(const std::vector<Rational>& s) {
  return binomial_transform(s);
}

// ---------------------------------------------------------------------------
// Brute-force oracle for the two master identities: all three quantities are
// computed by raw nested loops and must agree. Sequences are 1-indexed,
// a[0] holding a_1.

struct DoubleSumTriple {
  Rational shifted_form;  // sum_{p=0..n-1} sum_{k=1..n-p} a_{p+k} b_k
  Rational variant_form;  // sum_{k=1..n} sum_{j=0..k-1} a_{n-j} b_{k-j}
  Rational nested_form;   // sum_{k=1..n} a_k sum_{j=1..k} b_j
};

inline DoubleSumTriple brute_force_double_sum(const std::vector<Rational>& a,
                                              const std::vector<Rational>& b, std::int64_t n) {
  DoubleSumTriple t;
  for (std::int64_t p = 0; p <= n - 1; ++p)
    for (std::int64_t k = 1; k <= n - p; ++k)
      t.shifted_form += a[static_cast<std::size_t>(p + k - 1)] * b[static_cast<std::size_t>(k - 1)];
  for (std::int64_t k = 1; k <= n; ++k)
    for (std::int64_t j = 0; j <= k - 1; ++j)
      t.variant_form += a[static_cast<std::size_t>(n - j - 1)] * b[static_cast<std::size_t>(k - j - 1)];
  for (std::int64_t k = 1; k <= n; ++k) {
    Rational inner(0);
    for (std::int64_t j = 1; j <= k; ++j) inner += b[static_cast<std::size_t>(j - 1)];
    t.nested_form += a[static_cast<std::size_t>(k - 1)] * inner;
  }
  return t;
}

// ---------------------------------------------------------------------------
// Reports

enum class Status { Pass, Fail, Skipped };

struct Counterexample {
  ParamBinding binding;
  std::int64_t n = 0;
  Rational lhs_value;
  Rational rhs_value;
};

struct VerificationReport {
  std::string identity_id;
  std::int64_t bindings_tested = 0;
  std::int64_t n_min = 0;
  std::int64_t n_max = 0;
  Status status = Status::Pass;
  std::string skip_reason;
  std::optional<Counterexample> counterexample;
  std::chrono::nanoseconds wall_time{0};
  std::uint64_t rng_seed = 0;
};

// ---------------------------------------------------------------------------
// Binding enumeration

namespace detail {

struct SampleCombo {
  std::vector<std::pair<std::string, Rational>> scalars;
};

inline std::int64_t eval_count(const std::string& text, const ParamBinding& env) {
  Rational v = eval(parse(text), env);
  if (!v.is_integer() || v.is_negative())
    throw EvalError(EvalErrorKind::NonIntegerIndex, "domain bound '" + text + "' = " + v.str());
  return v.to_int64();
}

inline std::vector<SampleCombo> enumerate_sample_combos(const IdentityRecord& rec, std::int64_t n) {
  std::vector<SampleCombo> combos{SampleCombo{}};
  ParamBinding n_env;
  n_env.scalars.emplace("n", Rational(n));
  for (const auto& dom : rec.params) {
    if (const auto* s = std::get_if<SampleSet>(&dom)) {
      std::vector<SampleCombo> next;
      for (const auto& combo : combos)
        for (const auto& v : s->values) {
          next.push_back(combo);
          next.back().scalars.emplace_back(s->name, v);
        }
      combos = std::move(next);
    } else if (const auto* t = std::get_if<SampleTuples>(&dom)) {
      std::vector<SampleCombo> next;
      for (const auto& combo : combos)
        for (const auto& row : t->rows) {
          next.push_back(combo);
          for (std::size_t i = 0; i < t->names.size(); ++i)
            next.back().scalars.emplace_back(t->names[i], row[i]);
        }
      combos = std::move(next);
    } else if (const auto* r = std::get_if<IntRange>(&dom)) {
      std::int64_t lo = eval_count(r->lo, n_env);
      std::int64_t hi = Rational(eval(parse(r->hi), n_env)).to_int64();
      std::vector<SampleCombo> next;
      for (const auto& combo : combos)
        for (std::int64_t v = lo; v <= hi; ++v) {
          next.push_back(combo);
          next.back().scalars.emplace_back(r->name, Rational(static_cast<long>(v)));
        }
      combos = std::move(next);
    }
  }
  return combos;
}

// Fills the random part of a binding in declaration order.
inline void draw_random_parts(const IdentityRecord& rec, ParamBinding& binding, Rng& rng) {
  for (const auto& dom : rec.params) {
    if (const auto* r = std::get_if<RandomRational>(&dom)) {
      binding.scalars[r->name] = rng.rational();
    } else if (const auto* s = std::get_if<RandomSequence>(&dom)) {
      std::int64_t count = eval_count(s->count, binding);
      binding.sequences[s->name] = SequenceValues{s->start, rng.sequence(count)};
    } else if (const auto* p = std::get_if<TransformPair>(&dom)) {
      std::int64_t count = eval_count(p->count, binding);
      SequenceValues sv{0, rng.sequence(count)};
      SequenceValues sigma{0, binomial_transform(sv.values)};
      binding.sequences[p->seq_name] = std::move(sv);
      binding.sequences[p->sigma_name] = std::move(sigma);
    }
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Checking

// Evaluates both sides of a record under one explicit binding.
inline std::pair<Rational, Rational> eval_identity(const IdentityRecord& rec,
                                                   const ParamBinding& binding, KernelCache& cache) {
  return {eval(rec.lhs, binding, cache), eval(rec.rhs, binding, cache)};
}

inline VerificationReport check_identity(const IdentityRecord& rec, std::int64_t n_max,
                                         std::uint64_t seed) {
  if (n_max < rec.min_n)
    throw std::invalid_argument("check_identity: n_max " + std::to_string(n_max) +
                                " below min_n of " + rec.id);
  auto started = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.identity_id = rec.id;
  rep.n_min = rec.min_n;
  rep.n_max = n_max;
  rep.rng_seed = seed;

  detail::Rng rng(detail::mix_seed(seed, rec.id));
  KernelCache cache;
  try {
    for (std::int64_t n = rec.min_n; n <= n_max && rep.status == Status::Pass; ++n) {
      auto combos = detail::enumerate_sample_combos(rec, n);
      std::int64_t draws = 1;
      if (rec.has_random_component() && !combos.empty())
        draws = std::max<std::int64_t>(
            1, (16 + static_cast<std::int64_t>(combos.size()) - 1) /
                   static_cast<std::int64_t>(combos.size()));
      for (const auto& combo : combos) {
        for (std::int64_t d = 0; d < draws; ++d) {
          ParamBinding binding;
          binding.scalars.emplace("n", Rational(static_cast<long>(n)));
          for (const auto& [name, value] : combo.scalars) binding.scalars[name] = value;
          detail::draw_random_parts(rec, binding, rng);

          auto [lhs, rhs] = eval_identity(rec, binding, cache);
          ++rep.bindings_tested;
          if (lhs != rhs) {
            // confirm with a fresh cache before reporting
            KernelCache fresh;
            auto [lhs2, rhs2] = eval_identity(rec, binding, fresh);
            rep.status = Status::Fail;
            rep.counterexample = Counterexample{binding, n, lhs2, rhs2};
            break;
          }
        }
        if (rep.status != Status::Pass) break;
      }
    }
  } catch (const EvalError& e) {
    // a binding inside the declared domain must evaluate cleanly; anything
    // else is a registry bug worth surfacing, not a verification verdict
    rep.status = Status::Skipped;
    rep.skip_reason = e.what();
  }
  rep.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - started);
  return rep;
}

inline VerificationReport check_identity(const IdentityRecord& rec, std::uint64_t seed) {
  return check_identity(rec, rec.max_n_default, seed);
}

// Returns a copy of the record with the right side perturbed by +1; used to
// confirm that the sweep actually has teeth.
inline IdentityRecord mutated_rhs_plus_one(const IdentityRecord& rec) {
  IdentityRecord m = rec;
  m.rhs_text = rec.rhs_text + " + 1";
  m.rhs = parse(m.rhs_text);
  return m;
}

// ---------------------------------------------------------------------------
// Suite runner

inline bool glob_match(std::string_view pattern, std::string_view text) {
  std::size_t p = 0, t = 0, star = std::string_view::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p, ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string_view::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

inline std::vector<const IdentityRecord*> select_identities(std::string_view filter) {
  std::vector<const IdentityRecord*> out;
  for (const auto& r : builtin_catalog())
    if (glob_match(filter, r.id)) out.push_back(&r);
  if (out.empty()) throw UnknownIdentity(std::string(filter));
  return out;
}

inline std::vector<VerificationReport> run_suite(std::string_view filter,
                                                 std::optional<std::int64_t> n_max_override,
                                                 std::uint64_t seed, unsigned jobs = 0) {
  auto selected = select_identities(filter);
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  std::vector<VerificationReport> reports(selected.size());

  auto run_one = [&](std::size_t i) {
    const IdentityRecord& rec = *selected[i];
    std::int64_t n_max = n_max_override ? std::max(rec.min_n, *n_max_override) : rec.max_n_default;
    reports[i] = check_identity(rec, n_max, seed);
  };

  if (jobs <= 1 || selected.size() <= 1) {
    for (std::size_t i = 0; i < selected.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    unsigned count = std::min<unsigned>(jobs, static_cast<unsigned>(selected.size()));
    workers.reserve(count);
    for (unsigned w = 0; w < count; ++w)
      workers.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < selected.size(); i = next.fetch_add(1))
          run_one(i);
      });
    for (auto& th : workers) th.join();
  }

  // catalog order is id order; selection preserved it, so reports are sorted
  return reports;
}

inline bool all_passed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const VerificationReport& r) { return r.status == Status::Pass; });
}

// ---------------------------------------------------------------------------
// Serialization

namespace detail {

inline nlohmann::ordered_json binding_to_json(const ParamBinding& b) {
  nlohmann::ordered_json scalars = nlohmann::ordered_json::object();
  for (const auto& [name, value] : b.scalars) scalars[name] = value.str_frac();
  nlohmann::ordered_json sequences = nlohmann::ordered_json::object();
  for (const auto& [name, sv] : b.sequences) {
    nlohmann::ordered_json values = nlohmann::ordered_json::array();
    for (const auto& v : sv.values) values.push_back(v.str_frac());
    sequences[name] = {{"start", sv.start}, {"values", std::move(values)}};
  }
  return {{"scalars", std::move(scalars)}, {"sequences", std::move(sequences)}};
}

}  // namespace detail

inline std::string status_string(const VerificationReport& r) {
  switch (r.status) {
    case Status::Pass: return "Pass";
    case Status::Fail: return "Fail";
    case Status::Skipped: return "Skipped(" + r.skip_reason + ")";
  }
  return "?";
}

// `include_wall_time` is off by default so that reports are byte-identical
// across runs and worker counts.
inline nlohmann::ordered_json report_to_json(const VerificationReport& r,
                                             bool include_wall_time = false) {
  nlohmann::ordered_json j;
  j["identity_id"] = r.identity_id;
  j["bindings_tested"] = r.bindings_tested;
  j["n_range"] = {r.n_min, r.n_max};
  j["status"] = status_string(r);
  if (r.counterexample) {
    const auto& ce = *r.counterexample;
    j["counterexample"] = {{"binding", detail::binding_to_json(ce.binding)},
                           {"n", ce.n},
                           {"lhs_value", ce.lhs_value.str_frac()},
                           {"rhs_value", ce.rhs_value.str_frac()}};
  } else {
    j["counterexample"] = nullptr;
  }
  if (include_wall_time) j["wall_time"] = r.wall_time.count();
  j["rng_seed"] = r.rng_seed;
  return j;
}

inline std::string reports_to_json(const std::vector<VerificationReport>& reports,
                                   bool include_wall_time = false) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(report_to_json(r, include_wall_time));
  return arr.dump(2) + "\n";
}

// One line per entry: "<id> <PASS|FAIL|SKIP> (<k> bindings, n in [a,b]) [anchor]"
inline std::string report_line(const VerificationReport& r) {
  const char* verdict = r.status == Status::Pass ? "PASS" : r.status == Status::Fail ? "FAIL" : "SKIP";
  std::string anchor;
  if (const IdentityRecord* rec = find_identity(r.identity_id)) anchor = rec->anchor;
  std::string line = r.identity_id + " " + verdict + " (" + std::to_string(r.bindings_tested) +
                     " bindings, n in [" + std::to_string(r.n_min) + "," + std::to_string(r.n_max) +
                     "]) [" + anchor + "]";
  if (r.status == Status::Fail && r.counterexample) {
    line += "\n  counterexample at n=" + std::to_string(r.counterexample->n) +
            ": lhs=" + r.counterexample->lhs_value.str() + " rhs=" + r.counterexample->rhs_value.str();
  } else if (r.status == Status::Skipped) {
    line += "\n  " + r.skip_reason;
  }
  return line;
}

}  // namespace batir
