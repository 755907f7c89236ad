#pragma once

// Exact kernels for the number sequences used by the identity catalog:
// (odd) harmonic numbers, shifted harmonic differences, Bernoulli numbers,
// Fibonacci/Lucas/gibonacci numbers, Stirling numbers of the second kind,
// Catalan numbers, factorials, falling factorials and binomials.
//
// All kernels are pure; a KernelCache instance memoizes prefix computations
// so that sweeping an index upward costs one new term per step. A cache is
// not internally synchronized: share one per task, or clone per task, when
// evaluating concurrently.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "batir/errors.hpp"
#include "batir/rational.hpp"

namespace batir {

class KernelCache {
 public:
  // H_n^(s) = sum_{k=1..n} 1/k^s
  Rational harmonic(std::int64_t n, std::int64_t s = 1) {
    check_index("H", n);
    if (s < 1) throw EvalError(EvalErrorKind::NonIntegerIndex, "H: order s must be >= 1, got s=" + std::to_string(s));
    auto& pre = harmonic_[s];
    if (pre.empty()) pre.push_back(Rational(0));
    while (static_cast<std::int64_t>(pre.size()) <= n) {
      auto k = static_cast<std::int64_t>(pre.size());
      pre.push_back(pre.back() + Rational(1, k).pow(s));
    }
    return pre[static_cast<std::size_t>(n)];
  }

  // O_n^(s) = sum_{k=1..n} 1/(2k-1)^s
  Rational odd_harmonic(std::int64_t n, std::int64_t s = 1) {
    check_index("O", n);
    if (s < 1) throw EvalError(EvalErrorKind::NonIntegerIndex, "O: order s must be >= 1, got s=" + std::to_string(s));
    auto& pre = odd_harmonic_[s];
    if (pre.empty()) pre.push_back(Rational(0));
    while (static_cast<std::int64_t>(pre.size()) <= n) {
      auto k = static_cast<std::int64_t>(pre.size());
      pre.push_back(pre.back() + Rational(1, 2 * k - 1).pow(s));
    }
    return pre[static_cast<std::size_t>(n)];
  }

  // H_{n+r} - H_r = sum_{k=1..n} 1/(k+r), exact for rational r outside
  // {-1, ..., -n}.
  Rational shifted_harmonic_diff(std::int64_t n, const Rational& r) {
    check_index("Hdiff", n);
    if (r.is_integer() && r.is_negative() && -r <= Rational(n))
      throw EvalError(EvalErrorKind::SingularShift,
                      "Hdiff: r=" + r.str() + " hits a pole within 1..n for n=" + std::to_string(n));
    auto& pre = hdiff_[r];
    if (pre.empty()) pre.push_back(Rational(0));
    while (static_cast<std::int64_t>(pre.size()) <= n) {
      auto k = static_cast<std::int64_t>(pre.size());
      pre.push_back(pre.back() + (Rational(k) + r).inverse());
    }
    return pre[static_cast<std::size_t>(n)];
  }

  // B_n with B_1 = -1/2, via the recurrence sum_{j=0..m} C(m+1,j) B_j = 0.
  Rational bernoulli(std::int64_t n) {
    check_index("B", n);
    if (bernoulli_.empty()) bernoulli_.push_back(Rational(1));
    while (static_cast<std::int64_t>(bernoulli_.size()) <= n) {
      auto m = static_cast<std::int64_t>(bernoulli_.size());
      Rational acc(0);
      for (std::int64_t j = 0; j < m; ++j) acc += binom_int(m + 1, j) * bernoulli_[static_cast<std::size_t>(j)];
      bernoulli_.push_back(-acc / Rational(m + 1));
    }
    return bernoulli_[static_cast<std::size_t>(n)];
  }

  // Independent route to B_n through Stirling numbers:
  // B_n = sum_{k=0..n} (-1)^k k!/(k+1) S(n,k). Used as a cross-check.
  Rational bernoulli_stirling(std::int64_t n) {
    check_index("B", n);
    Rational acc(0);
    for (std::int64_t k = 0; k <= n; ++k) {
      Rational term = factorial(k) / Rational(k + 1) * stirling2(n, k);
      if (k % 2 != 0) term = -term;
      acc += term;
    }
    return acc;
  }

  Rational fibonacci(std::int64_t n) {
    check_index("F", n);
    if (fibonacci_.empty()) { fibonacci_.push_back(Rational(0)); fibonacci_.push_back(Rational(1)); }
    while (static_cast<std::int64_t>(fibonacci_.size()) <= n) {
      auto m = fibonacci_.size();
      fibonacci_.push_back(fibonacci_[m - 1] + fibonacci_[m - 2]);
    }
    return fibonacci_[static_cast<std::size_t>(n)];
  }

  Rational lucas(std::int64_t n) {
    check_index("L", n);
    if (lucas_.empty()) { lucas_.push_back(Rational(2)); lucas_.push_back(Rational(1)); }
    while (static_cast<std::int64_t>(lucas_.size()) <= n) {
      auto m = lucas_.size();
      lucas_.push_back(lucas_[m - 1] + lucas_[m - 2]);
    }
    return lucas_[static_cast<std::size_t>(n)];
  }

  // G_1 = g1, G_2 = g2, G_{n+2} = G_{n+1} + G_n; G_0 = g2 - g1.
  Rational gibonacci(std::int64_t n, const Rational& g1, const Rational& g2) {
    check_index("G", n);
    auto& pre = gibonacci_[{g1, g2}];
    if (pre.empty()) { pre.push_back(g2 - g1); pre.push_back(g1); pre.push_back(g2); }
    while (static_cast<std::int64_t>(pre.size()) <= n) {
      auto m = pre.size();
      pre.push_back(pre[m - 1] + pre[m - 2]);
    }
    return pre[static_cast<std::size_t>(n)];
  }

  // S(n,k), second kind; S(0,0) = 1, S(n,k) = 0 for k > n.
  Rational stirling2(std::int64_t n, std::int64_t k) {
    check_index("S2", n);
    check_index("S2", k);
    if (k > n) return Rational(0);
    while (static_cast<std::int64_t>(stirling2_.size()) <= n) {
      auto m = static_cast<std::int64_t>(stirling2_.size());
      std::vector<Rational> row(static_cast<std::size_t>(m) + 1);
      row[0] = Rational(m == 0 ? 1 : 0);
      for (std::int64_t i = 1; i <= m; ++i) {
        const auto& prev = stirling2_[static_cast<std::size_t>(m - 1)];
        Rational up = (i <= m - 1) ? prev[static_cast<std::size_t>(i)] : Rational(0);
        row[static_cast<std::size_t>(i)] = Rational(i) * up + prev[static_cast<std::size_t>(i - 1)];
      }
      stirling2_.push_back(std::move(row));
    }
    return stirling2_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

  Rational catalan(std::int64_t n) {
    check_index("Cat", n);
    return binom_int(2 * n, n) / Rational(n + 1);
  }

  Rational factorial(std::int64_t n) {
    check_index("fact", n);
    if (factorial_.empty()) factorial_.push_back(Rational(1));
    while (static_cast<std::int64_t>(factorial_.size()) <= n) {
      auto m = static_cast<std::int64_t>(factorial_.size());
      factorial_.push_back(factorial_.back() * Rational(m));
    }
    return factorial_[static_cast<std::size_t>(n)];
  }

  // x(x-1)...(x-k+1) for rational x and integer k >= 0; ff(x,0) = 1.
  Rational falling_factorial(const Rational& x, std::int64_t k) {
    if (k < 0) throw EvalError(EvalErrorKind::NegativeKernelIndex, "ff: negative length k=" + std::to_string(k));
    auto& pre = falling_[x];
    if (pre.empty()) pre.push_back(Rational(1));
    while (static_cast<std::int64_t>(pre.size()) <= k) {
      auto i = static_cast<std::int64_t>(pre.size());
      pre.push_back(pre.back() * (x - Rational(i - 1)));
    }
    return pre[static_cast<std::size_t>(k)];
  }

  // Combinatorial binomial for integer 0 <= k <= n.
  Rational binom_int(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return Rational(0);
    return factorial(n) / (factorial(k) * factorial(n - k));
  }

  // Generalized binomial: ff(x,k)/k! for integer k >= 0, 0 for k < 0.
  // Agrees with binom_int whenever x is an integer with 0 <= k <= x.
  Rational binom_rat(const Rational& x, std::int64_t k) {
    if (k < 0) return Rational(0);
    return falling_factorial(x, k) / factorial(k);
  }

  // Dispatch used by the expression evaluator: fast path for the plain
  // combinatorial case, falling-factorial route everywhere else.
  Rational binom(const Rational& x, std::int64_t k) {
    if (x.is_integer()) {
      std::int64_t n = x.to_int64();
      if (n >= 0) return binom_int(n, k);
    }
    return binom_rat(x, k);
  }

 private:
  static void check_index(const char* kernel, std::int64_t n) {
    if (n < 0)
      throw EvalError(EvalErrorKind::NegativeKernelIndex,
                      std::string(kernel) + ": index must be >= 0, got " + std::to_string(n));
  }

  std::map<std::int64_t, std::vector<Rational>> harmonic_;
  std::map<std::int64_t, std::vector<Rational>> odd_harmonic_;
  std::map<Rational, std::vector<Rational>> hdiff_;
  std::vector<Rational> bernoulli_;
  std::vector<Rational> fibonacci_;
  std::vector<Rational> lucas_;
  std::map<std::pair<Rational, Rational>, std::vector<Rational>> gibonacci_;
  std::vector<std::vector<Rational>> stirling2_;
  std::vector<Rational> factorial_;
  std::map<Rational, std::vector<Rational>> falling_;
};

}  // namespace batir
