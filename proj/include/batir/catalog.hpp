#pragma once

// The built-in catalog of double-sum identities. Every entry is data: two
// parseable expression strings, the domains of the free parameters, the
// smallest n for which the statement is claimed, and a default sweep limit.
//
// Conventions used throughout the encodings:
//  - shifted harmonic values only ever appear as differences, via
//    Hdiff(n,r) = H_{n+r} - H_r, so every value stays rational;
//  - parity-split closed forms are written with the selectors
//    (1+(-1)^n)/2 and (1-(-1)^n)/2 so one expression covers both branches;
//  - generalized binomials with a non-integer lower index are rewritten as
//    binom(a,b) = ff(a, a-b)/fact(a-b), valid whenever a-b is a
//    non-negative integer.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "batir/expr.hpp"
#include "batir/rational.hpp"

namespace batir {

// Finite list of values for one scalar parameter.
struct SampleSet {
  std::string name;
  std::vector<Rational> values;
  friend bool operator==(const SampleSet&, const SampleSet&) = default;
};

// Joint samples for parameters whose admissible values are coupled.
struct SampleTuples {
  std::vector<std::string> names;
  std::vector<std::vector<Rational>> rows;
  friend bool operator==(const SampleTuples&, const SampleTuples&) = default;
};

// A scalar drawn uniformly with numerator in [-99,99], denominator in [1,20].
struct RandomRational {
  std::string name;
  friend bool operator==(const RandomRational&, const RandomRational&) = default;
};

// A named random sequence; `count` is an expression in n (and any sampled
// parameters) giving the number of elements, indexed from `start`.
struct RandomSequence {
  std::string name;
  std::int64_t start = 1;
  std::string count;
  friend bool operator==(const RandomSequence&, const RandomSequence&) = default;
};

// A random sequence plus its binomial transform, bound under two names.
struct TransformPair {
  std::string seq_name;
  std::string sigma_name;
  std::string count;  // elements indexed 0 .. count-1
  friend bool operator==(const TransformPair&, const TransformPair&) = default;
};

// An integer parameter ranging over [lo, hi], bounds given as expressions
// in n and evaluated per sweep step.
struct IntRange {
  std::string name;
  std::string lo;
  std::string hi;
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

using ParamDomain =
    std::variant<SampleSet, SampleTuples, RandomRational, RandomSequence, TransformPair, IntRange>;

struct IdentityRecord {
  std::string id;
  std::string title;
  std::string lhs_text;
  std::string rhs_text;
  Expr lhs;
  Expr rhs;
  std::vector<ParamDomain> params;
  std::int64_t min_n = 0;
  std::int64_t max_n_default = 25;
  std::string anchor;

  bool has_random_component() const {
    for (const auto& p : params)
      if (std::holds_alternative<RandomRational>(p) || std::holds_alternative<RandomSequence>(p) ||
          std::holds_alternative<TransformPair>(p))
        return true;
    return false;
  }
};

namespace detail {

inline std::vector<Rational> rats(std::initializer_list<const char*> vs) {
  std::vector<Rational> out;
  for (const char* v : vs) out.push_back(Rational::parse(v));
  return out;
}

inline ParamDomain samples(std::string name, std::initializer_list<const char*> vs) {
  return SampleSet{std::move(name), rats(vs)};
}

inline ParamDomain tuples(std::vector<std::string> names,
                          std::initializer_list<std::initializer_list<const char*>> rows) {
  SampleTuples t;
  t.names = std::move(names);
  for (auto& row : rows) t.rows.push_back(rats(row));
  return t;
}

inline ParamDomain rand_seq(std::string name, std::int64_t start, std::string count) {
  return RandomSequence{std::move(name), start, std::move(count)};
}

inline ParamDomain pair_seq(std::string s, std::string sigma, std::string count) {
  return TransformPair{std::move(s), std::move(sigma), std::move(count)};
}

inline ParamDomain int_range(std::string name, std::string lo, std::string hi) {
  return IntRange{std::move(name), std::move(lo), std::move(hi)};
}

inline IdentityRecord rec(std::string id, std::string title, std::string lhs, std::string rhs,
                          std::int64_t min_n, std::int64_t max_n, std::string anchor,
                          std::vector<ParamDomain> params = {}) {
  IdentityRecord r;
  r.id = std::move(id);
  r.title = std::move(title);
  r.lhs_text = std::move(lhs);
  r.rhs_text = std::move(rhs);
  r.lhs = parse(r.lhs_text);
  r.rhs = parse(r.rhs_text);
  r.params = std::move(params);
  r.min_n = min_n;
  r.max_n_default = max_n;
  r.anchor = std::move(anchor);
  return r;
}

inline std::vector<IdentityRecord> build_catalog() {
  std::vector<IdentityRecord> c;
  c.reserve(84);

  // -- master identities over arbitrary sequences --------------------------

  c.push_back(rec("I-01", "summation interchange, shifted form",
                  "sum(p,0,n-1, sum(k,1,n-p, a(p+k)*b(k)))",
                  "sum(k,1,n, a(k)*sum(j,1,k, b(j)))",
                  0, 30, "master interchange identity for sequence pairs",
                  {rand_seq("a", 1, "n"), rand_seq("b", 1, "n")}));
  c.push_back(rec("I-02", "summation interchange, variant form",
                  "sum(k,1,n, sum(j,0,k-1, a(n-j)*b(k-j)))",
                  "sum(k,1,n, a(k)*sum(j,1,k, b(j)))",
                  0, 30, "variant of the master interchange identity",
                  {rand_seq("a", 1, "n"), rand_seq("b", 1, "n")}));
  c.push_back(rec("I-03", "weighted double sum collapses to a plain sum",
                  "sum(k,1,n, sum(j,0,k-1, a(n-j)/(n-j)))",
                  "sum(k,1,n, a(k))",
                  0, 30, "variant identity with b_k = 1 and a_k/k in place of a_k",
                  {rand_seq("a", 1, "n")}));
  c.push_back(rec("I-04", "alternating double sum picks odd-indexed terms",
                  "sum(k,1,n, sum(j,0,k-1, (-1)^(k-j+1)*a(n-j)))",
                  "sum(k,0,floor((n-1)/2), a(2*k+1))",
                  0, 30, "variant identity with b_k = (-1)^k",
                  {rand_seq("a", 1, "n")}));

  // -- harmonic, Bernoulli and Stirling specializations --------------------

  c.push_back(rec("I-05", "harmonic number as a double sum",
                  "sum(k,1,n, sum(j,0,k-1, 1/(n-j)^2))",
                  "H(n)",
                  0, 25, "sequence-sum theorem with a_k = 1/k"));
  c.push_back(rec("I-06", "odd harmonic number as a double sum",
                  "sum(k,1,n, sum(j,0,k-1, 1/((n-j)*(2*(n-j)-1))))",
                  "O(n)",
                  0, 25, "sequence-sum theorem with a_k = 1/(2k-1)"));
  c.push_back(rec("I-07", "alternating linear double sum is a perfect square",
                  "sum(k,1,n, sum(j,0,k-1, (-1)^(k-j+1)*(n-j)))",
                  "(floor((n-1)/2)+1)^2",
                  0, 25, "odd-term theorem with a_k = k"));
  // the summed odd reciprocals 1 + 1/3 + ... + 1/(2*floor((n-1)/2)+1) form
  // O at index floor((n-1)/2) + 1
  c.push_back(rec("I-08", "alternating harmonic double sum",
                  "sum(k,1,n, sum(j,0,k-1, (-1)^(k-j+1)/(n-j)))",
                  "O(floor((n-1)/2)+1)",
                  1, 25, "odd-term theorem with a_k = 1/k"));
  c.push_back(rec("I-09", "alternating Fibonacci double sum",
                  "sum(k,1,n, sum(j,0,k-1, (-1)^(k-j+1)*F(n-j)))",
                  "F(2*(floor((n-1)/2)+1))",
                  0, 25, "odd-term theorem with a_k = F_k"));
  c.push_back(rec("I-10", "alternating Lucas double sum",
                  "sum(k,1,n, sum(j,0,k-1, (-1)^(k-j+1)*L(n-j)))",
                  "L(2*(floor((n-1)/2)+1)) - 2",
                  0, 25, "odd-term theorem with a_k = L_k"));

  c.push_back(rec("I-11a", "Bernoulli-weighted alternating sum, f(k) = k",
                  "sum(k,1,n, sum(j,0,k-1, (-1)^(k-j)*(n-j)*B(n-j)))",
                  "1/2",
                  1, 25, "vanishing of odd Bernoulli numbers, f(k) = k"));
  c.push_back(rec("I-11b", "Bernoulli-weighted alternating sum, f(k) = k^2",
                  "sum(k,1,n, sum(j,0,k-1, (-1)^(k-j)*(n-j)^2*B(n-j)))",
                  "1/2",
                  1, 25, "vanishing of odd Bernoulli numbers, f(k) = k^2"));
  c.push_back(rec("I-11c", "Bernoulli-weighted alternating sum, f(k) = 1/(k+1)",
                  "sum(k,1,n, sum(j,0,k-1, (-1)^(k-j)*B(n-j)/(n-j+1)))",
                  "1/4",
                  1, 25, "vanishing of odd Bernoulli numbers, f(k) = 1/(k+1)"));
  c.push_back(rec("I-12", "alternating sum of squared Bernoulli numbers",
                  "sum(k,1,n, sum(j,0,k-1, (-1)^(k-j)*B(n-j)^2))",
                  "-1/4",
                  1, 25, "vanishing of odd Bernoulli numbers, f(k) = B_k"));
  c.push_back(rec("I-13", "Bernoulli number as a Stirling double sum",
                  "sum(k,1,n, sum(j,0,k-1, (-1)^(n-j)*fact(n-j-1)*S2(n,n-j)/(n-j+1)))",
                  "B(n)",
                  1, 25, "Stirling-number expansion of B_n"));

  c.push_back(rec("I-14", "shifted reciprocal weights give harmonic differences",
                  "sum(k,1,n, sum(j,0,k-1, a(n-j)/(k-j+r)))",
                  "sum(k,1,n, a(k)*Hdiff(k,r))",
                  0, 25, "variant identity with b_j = 1/(j+r); rhs in difference form",
                  {samples("r", {"0", "1/2", "-1/2", "1", "3/2", "1/3"}), rand_seq("a", 1, "n")}));
  c.push_back(rec("I-15", "reciprocal weights give harmonic numbers",
                  "sum(k,1,n, sum(j,0,k-1, a(n-j)/(k-j)))",
                  "sum(k,1,n, a(k)*H(k))",
                  0, 25, "r = 0 case of the shifted-weight identity",
                  {rand_seq("a", 1, "n")}));
  c.push_back(rec("I-16", "odd reciprocal weights give odd harmonic numbers",
                  "sum(k,1,n, sum(j,0,k-1, a(n-j)/(2*(k-j)-1)))",
                  "sum(k,1,n, a(k)*O(k))",
                  0, 25, "r = -1/2 case of the shifted-weight identity",
                  {rand_seq("a", 1, "n")}));
  c.push_back(rec("I-17", "Stirling-harmonic double sum",
                  "sum(k,1,n, sum(j,0,k-1, (-1)^(n-j)*fact(n-j)*S2(n,n-j)/((n-j+1)*(k-j))))",
                  "-n*B(n-1)/2",
                  1, 25, "Kellner's Stirling-harmonic sum fed into the r = 0 identity"));

  c.push_back(rec("I-18", "geometric weights against shifted reciprocals",
                  "sum(k,1,n, sum(j,0,k-1, x^(n-j)/(k-j+r)))",
                  "(sum(k,1,n, x^k/(k+r)) - x^(n+1)*Hdiff(n,r))/(1-x)",
                  0, 25, "shifted-weight identity with a_k = x^k, x != 1",
                  {samples("x", {"-1", "2", "1/2", "-3/5"}),
                   samples("r", {"0", "1/2", "-1/2", "1", "3/2", "1/3"})}));
  c.push_back(rec("I-19", "geometric weights against plain reciprocals",
                  "sum(k,1,n, sum(j,0,k-1, x^(n-j)/(k-j)))",
                  "(sum(k,1,n, x^k/k) - x^(n+1)*H(n))/(1-x)",
                  0, 25, "r = 0 case of the geometric-weight identity",
                  {samples("x", {"-1", "2", "1/2", "-3/5"})}));
  c.push_back(rec("I-20", "geometric weights against odd reciprocals",
                  "sum(k,1,n, sum(j,0,k-1, x^(n-j)/(2*(k-j)-1)))",
                  "(sum(k,1,n, x^k/(2*k-1)) - x^(n+1)*O(n))/(1-x)",
                  0, 25, "r = -1/2 case of the geometric-weight identity",
                  {samples("x", {"-1", "2", "1/2", "-3/5"})}));

  c.push_back(rec("I-21a", "gibonacci numbers against shifted reciprocals",
                  "sum(k,1,n, sum(j,0,k-1, G(n-j,g1,g2)/(k-j+r)))",
                  "G(n+2,g1,g2)*Hdiff(n,r) - sum(k,1,n, G(k+1,g1,g2)/(k+r))",
                  0, 25, "Binet combination of the geometric-weight identity",
                  {samples("r", {"0", "1/2", "-1/2", "1", "3/2", "1/3"}),
                   samples("g1", {"1", "2", "3"}), samples("g2", {"1", "-2"})}));
  c.push_back(rec("I-21b", "gibonacci numbers against plain reciprocals",
                  "sum(k,1,n, sum(j,0,k-1, G(n-j,g1,g2)/(k-j)))",
                  "G(n+2,g1,g2)*H(n) - sum(k,1,n, G(k+1,g1,g2)/k)",
                  0, 25, "r = 0 case of the gibonacci identity",
                  {samples("g1", {"1", "2", "3"}), samples("g2", {"1", "-2"})}));
  c.push_back(rec("I-21c", "gibonacci numbers against odd reciprocals",
                  "sum(k,1,n, sum(j,0,k-1, G(n-j,g1,g2)/(2*(k-j)-1)))",
                  "G(n+2,g1,g2)*O(n) - sum(k,1,n, G(k+1,g1,g2)/(2*k-1))",
                  0, 25, "r = -1/2 case of the gibonacci identity",
                  {samples("g1", {"1", "2", "3"}), samples("g2", {"1", "-2"})}));

  c.push_back(rec("I-22", "alternating reciprocal double sum, parity split",
                  "sum(k,1,n, sum(j,0,k-1, (-1)^j/(k-j)))",
                  "(1+(-1)^n)/4*H(floor(n/2)) + (1-(-1)^n)/2*O(floor((n+1)/2))",
                  1, 25, "x = -1 case of the geometric-weight identity"));

  c.push_back(rec("I-23", "two-step reciprocal weights with geometric factor",
                  "sum(k,1,n, sum(j,0,k-1, x^(n-j)/(k-j)*(1/(n+p-j) - x/(n+1+p-j))))",
                  "sum(k,1,n, x^k/(k*(k+p))) - H(n)*x^(n+1)/(n+1+p)",
                  0, 25, "integrated form of the geometric-weight identity",
                  {samples("x", {"-1", "2", "1/2"}), samples("p", {"1", "2", "1/2", "3/2"})}));
  c.push_back(rec("I-24", "triple-product reciprocal double sum",
                  "sum(k,1,n, sum(j,0,k-1, 1/((k-j)*(n+p-j)*(n+1+p-j))))",
                  "(H(n) - Hdiff(n,p))/p - H(n)/(n+1+p)",
                  0, 25, "x = 1 case of the integrated identity; rhs in difference form",
                  {samples("p", {"1", "2", "3", "1/2", "-1/2"})}));
  c.push_back(rec("I-25", "triple-product reciprocal double sum at p = 1",
                  "sum(k,1,n, sum(j,0,k-1, 1/((k-j)*(n+1-j)*(n+2-j))))",
                  "n/(n+1) - H(n)/(n+2)",
                  0, 25, "p = 1 case of the triple-product identity"));
  c.push_back(rec("I-26", "odd triple-product reciprocal double sum",
                  "sum(k,1,n, sum(j,0,k-1, 1/((k-j)*(2*(n-j)-1)*(2*(n-j)+1))))",
                  "O(n) - (n+1)*H(n)/(2*n+1)",
                  0, 25, "p = -1/2 case of the triple-product identity"));

  // summing m - H_m - (H_m^2 - H_m^(2))/2 over m = 1..n turns the linear
  // term into n(n+1)/2
  c.push_back(rec("I-27", "quadruple sum of triple-product reciprocals",
                  "sum(m,1,n, sum(i,1,m-1, sum(k,1,i-1, sum(j,0,k-1, "
                  "1/((k-j)*(i-j)*(i-j+1))))))",
                  "n*(n+1)/2 - H(n) - (n+1)*(H(n)^2 - H(n,2))/2",
                  0, 12, "double summation of the p = 1 triple-product identity"));
  c.push_back(rec("I-27a", "partial sums of harmonic numbers",
                  "sum(m,1,n, H(m))",
                  "(n+1)*H(n) - n",
                  0, 60, "helper sum for the quadruple identity"));
  c.push_back(rec("I-27b", "partial sums of squared harmonic numbers",
                  "sum(m,1,n, H(m)^2)",
                  "(n+1)*H(n)^2 - (2*n+1)*H(n) + 2*n",
                  0, 60, "helper sum for the quadruple identity"));
  c.push_back(rec("I-27c", "partial sums of second-order harmonic numbers",
                  "sum(m,1,n, H(m,2))",
                  "(n+1)*H(n,2) - H(n)",
                  0, 60, "helper sum for the quadruple identity"));

  c.push_back(rec("I-28", "reciprocal weights with integer offset",
                  "sum(k,1,n, sum(j,0,k-1, 1/((k-j)*(n-j+p))))",
                  "(H(n)^2 - H(n,2))/2 - (H(p-1)^2 + H(p-1,2))/2"
                  " + H(p-1)*(H(p+n-1) - H(n)) + H(n)*(H(p+n) - H(n))"
                  " - sum(k,1,p-1, H(k-1)/(n+k))",
                  0, 25, "r = 0 identity with a_k = 1/(k+p), integer p >= 1",
                  {samples("p", {"1", "2", "3", "4"})}));
  c.push_back(rec("I-29", "reciprocal weights with offset one",
                  "sum(k,1,n, sum(j,0,k-1, 1/((k-j)*(n+1-j))))",
                  "(H(n)^2 - H(n,2))/2 + H(n)/(n+1)",
                  0, 25, "p = 1 case of the offset-weight identity"));

  c.push_back(rec("I-30", "harmonic weights against reciprocals",
                  "sum(k,1,n, sum(j,0,k-1, H(n-j)/(k-j)))",
                  "(n+1)*H(n)^2 - (2*n+1)*H(n) + 2*n",
                  0, 25, "r = 0 identity with a_k = H_k"));
  c.push_back(rec("I-31", "squared harmonic weights against reciprocals",
                  "sum(k,1,n, sum(j,0,k-1, H(n-j)^2/(k-j)))",
                  "(n+1)*H(n)^3 - 3*(2*n+1)*H(n)^2/2 + 3*(2*n+1)*H(n) + H(n,2)/2 - 6*n",
                  0, 25, "r = 0 identity with a_k = H_k^2 and the cubic partial-sum formula"));
  c.push_back(rec("I-32", "second-order harmonic weights against reciprocals",
                  "sum(k,1,n, sum(j,0,k-1, H(n-j,2)/(k-j)))",
                  "(n+1)*H(n)*H(n,2) - (2*n+1)*H(n,2)/2 + H(n) - H(n)^2/2",
                  0, 25, "r = 0 identity with a_k = H_k^(2) and the mixed partial-sum formula"));

  // -- binomial-coefficient identities --------------------------------------

  c.push_back(rec("I-33", "Fibonacci numbers from diagonal binomials",
                  "sum(k,1,n, sum(j,floor(n/2),k-1, binom(j,n-j)/(n-j)))",
                  "F(n+1) - 1",
                  0, 25, "sequence-sum theorem with a_k = binom(n-k,k)"));
  c.push_back(rec("I-34", "Spiess-type binomial-harmonic double sum",
                  "sum(k,1,n, sum(j,0,k-1, (-1)^j*binom(p,j)*binom(n-j,m)/(k-j)))",
                  "binom(n-p,m-p)*(H(n-p) - H(m-p) + H(m))",
                  2, 25, "Spiess's alternating binomial-harmonic sum; p <= m keeps all terms finite",
                  {tuples({"m", "p"}, {{"0", "0"}, {"1", "0"}, {"1", "1"},
                                       {"2", "0"}, {"2", "1"}, {"2", "2"}})}));
  c.push_back(rec("I-35", "binomial coefficients with geometric weights",
                  "sum(k,1,n, sum(j,0,k-1, binom(n,j)*x^(n-j)/(k-j)))",
                  "(1+x)^n*H(n) - sum(k,1,n, (1+x)^(n-k)/k)",
                  0, 25, "Knuth-Boyadzhiev identity fed into the r = 0 identity",
                  {samples("x", {"1", "-1", "2", "1/2"})}));
  c.push_back(rec("I-36", "plain binomial double sum",
                  "sum(k,1,n, sum(j,0,k-1, binom(n,j)/(k-j)))",
                  "2^n*(H(n) - sum(k,1,n, 1/(2^k*k)))",
                  0, 25, "x = 1 case of the Knuth-Boyadzhiev specialization"));
  c.push_back(rec("I-37", "Stirling numbers from m-fold differentiation",
                  "sum(k,1,n, sum(j,0,k-1, fact(n-j)*binom(n,j)*S2(m,n-j)/(k-j)))",
                  "n^m*H(n) - sum(k,1,n, (n-k)^m/k)",
                  0, 25, "m-th derivative of the geometric Knuth-Boyadzhiev form at x = 0",
                  {samples("m", {"0", "1", "2", "3", "4"})}));
  c.push_back(rec("I-38", "squared binomial coefficients",
                  "sum(k,1,n, sum(j,0,k-1, binom(n,j)^2/(k-j)))",
                  "binom(2*n,n)*(2*H(n) - H(2*n))",
                  0, 25, "central-binomial evaluation of sum binom(n,k)^2 H_k"));
  c.push_back(rec("I-39", "product of binomial slices",
                  "sum(k,1,n, sum(j,0,k-1, binom(n,j)*binom(2*n,n+j)/(k-j)))",
                  "binom(3*n,n)*H(n) - sum(k,1,n, binom(3*n-k,n-k)/k)",
                  0, 25, "Sofo's evaluation of sum binom(n,k) binom(2n,k) H_k"));
  c.push_back(rec("I-40", "cubed binomial coefficients, parity split",
                  "sum(k,1,n, sum(j,0,k-1, (-1)^j*binom(n,j)^3/(n-j)))",
                  "(1+(-1)^n)/2*((-1)^floor(n/2)*binom(n,floor(n/2))*binom(3*floor(n/2),n) - 1)"
                  " + (1-(-1)^n)/2",
                  1, 25, "Dixon's identity"));
  c.push_back(rec("I-41", "central binomials with power-of-four weights",
                  "sum(k,1,n, sum(j,0,k-1, 2^(2*j)*binom(2*(n-j),n-j)/(k-j)))",
                  "2^(2*n+1) + (H(n)-2)*(2*n+1)*binom(2*n,n)",
                  0, 25, "central-binomial harmonic sum, plain reciprocal weight"));
  c.push_back(rec("I-42", "central binomials against odd reciprocals",
                  "sum(k,1,n, sum(j,0,k-1, 2^(2*j)*binom(2*(n-j),n-j)/(2*(k-j)-1)))",
                  "(O(n+1)-1)*(2*n+1)*binom(2*n,n)",
                  0, 25, "central-binomial odd-harmonic sum"));
  c.push_back(rec("I-43", "two central-binomial double sums agree",
                  "sum(k,1,n, sum(j,0,k-1, 2^(2*j)*binom(2*(n-j),n-j)*O(n-j)/(k-j)))",
                  "sum(k,1,n, sum(j,0,k-1, 2^(2*j)*binom(2*(n-j),n-j)*H(n-j)/(2*(k-j)-1)))",
                  0, 20, "both sides reduce to the same O_k H_k central-binomial sum"));
  c.push_back(rec("I-44", "generalized binomial sum with rational order",
                  "sum(k,1,n, sum(j,0,k-1, (-1)^j*s*binom(s,n-j)/(k-j)))",
                  "s*binom(s-1,n)*H(n) + binom(s-1,n) - (-1)^n",
                  0, 25, "shifted form of the alternating binomial-harmonic sum; s = 0 and"
                         " negative integers excluded",
                  {samples("s", {"1/2", "-1/2", "3/2", "1/3", "2/5"})}));
  c.push_back(rec("I-45", "central binomials over odd denominators",
                  "sum(k,1,n, sum(j,0,k-1, 2^(2*j)*binom(2*(n-j),n-j)/((2*(n-j)-1)*(k-j))))",
                  "2^(2*n+1) - binom(2*n,n)*(H(n)+2)",
                  0, 25, "s = 1/2 case via the half-integer binomial closed form"));
  c.push_back(rec("I-46", "central binomials, power-of-four weights revisited",
                  "sum(k,1,n, sum(j,0,k-1, 2^(2*j)*binom(2*(n-j),n-j)/(k-j)))",
                  "2^(2*n+1) + (2*n+1)*binom(2*n,n)*(H(n)-2)",
                  0, 25, "s = -1/2 case via the half-integer binomial closed form"));
  c.push_back(rec("I-47", "inverse binomial coefficients",
                  "sum(k,1,n, sum(j,0,k-1, (-1)^j/((k-j)*binom(n,j))))",
                  "(n+1)*(H(n+1)/(n+2) - ((-1)^n+1)/(n+2)^2)",
                  0, 25, "alternating inverse-binomial harmonic sum"));

  c.push_back(rec("I-48", "partial sums of shifted binomials",
                  "sum(k,1,n, binom(k+q,p))",
                  "(n+q+1)*binom(n+q,p)/(p+1) - binom(q,p+1) - binom(q,p)",
                  0, 60, "telescoping consequence of Pascal's rule",
                  {samples("p", {"0", "1", "2", "3"}), samples("q", {"0", "1", "2", "3"})}));
  c.push_back(rec("I-49", "partial sums of shifted binomials times harmonics",
                  "sum(k,1,n, binom(k+q,p)*H(k+q))",
                  "binom(n+q,p)*(1/(p+1) + (n+q+1)*(H(n+q) - 1/(p+1))/(p+1))"
                  " - binom(q,p+1)*(H(q) - 1/(p+1)) - binom(q,p)*H(q)",
                  0, 60, "parameter differentiation of the telescoping lemma",
                  {samples("p", {"0", "1", "2", "3"}), samples("q", {"0", "1", "2", "3"})}));
  c.push_back(rec("I-50", "shifted binomials inside the double sum",
                  "sum(k,1,n, sum(j,0,k-1, binom(n-j+q,p)/(n-j)))",
                  "(n+q+1)*binom(n+q,p)/(p+1) - binom(q,p+1) - binom(q,p)",
                  0, 25, "sequence-sum theorem with a_k = binom(k+q,p)",
                  {samples("p", {"0", "1", "2", "3"}), samples("q", {"0", "1", "2", "3"})}));
  c.push_back(rec("I-51a", "shifted binomials against shifted reciprocals",
                  "sum(k,1,n, sum(j,0,k-1, binom(n-j+q,p)/(k-j+q)))",
                  "binom(n+q,p)*(1/(p+1) + (n+q+1)*(Hdiff(n,q) - 1/(p+1))/(p+1))"
                  " + binom(q,p+1)/(p+1)",
                  0, 25, "shifted-weight identity with a_k = binom(k+q,p), r = q",
                  {samples("p", {"0", "1", "2", "3"}), samples("q", {"0", "1", "2", "3"})}));
  c.push_back(rec("I-51b", "half-integer instance of the shifted-binomial sum",
                  "sum(k,1,n, sum(j,0,k-1, ff(n-j-1/2,n-j+r)/(fact(n-j+r)*(k-j-1/2))))",
                  "-2/(2*r-1)*(ff(n-1/2,n+r)/fact(n+r)"
                  "*(1 + (n+1/2)*(Hdiff(n,-1/2) + 2/(2*r-1))) + ff(-1/2,r-1)/fact(r-1))",
                  0, 25, "q = -1/2, p = -r-1/2 instance, rationalized through falling factorials",
                  {samples("r", {"1", "2", "3"})}));
  c.push_back(rec("I-52", "Catalan numbers against odd reciprocals, general order",
                  "sum(k,1,n, sum(j,0,k-1, 2^(2*j)*fact(n-j+1)*Cat(n-j)"
                  "/(ff(n-j+r,n-j+1)*(2*(k-j)-1))))",
                  "2^(2*n+1)/(2*r-1)^2 - fact(n+1)*Cat(n)/(ff(n+r,n+1)*(2*r-1))"
                  "*(1 + (2*n+1)*(O(n) + 1/(2*r-1)))",
                  0, 25, "half-integer shifted-binomial sum expressed through Catalan numbers;"
                         " r = 1/2 excluded",
                  {samples("r", {"1", "2", "3", "3/2"})}));
  c.push_back(rec("I-53", "Catalan numbers against odd reciprocals at r = 1",
                  "sum(k,1,n, sum(j,0,k-1, 2^(2*j)*Cat(n-j)/(2*(k-j)-1)))",
                  "2^(2*n+1) - Cat(n)*(1 + (2*n+1)*(O(n)+1))",
                  0, 25, "r = 1 case of the Catalan odd-harmonic identity"));

  c.push_back(rec("I-54", "vanishing alternating binomial lemma",
                  "sum(k,0,n, (-1)^k*binom(n,k)*binom(k,k+r))",
                  "0",
                  1, 40, "sine-factor lemma at integer r, where the closed form vanishes",
                  {samples("r", {"0", "1", "2", "3"})}));
  c.push_back(rec("I-55", "vanishing alternating binomial-harmonic lemma",
                  "sum(k,0,n, (-1)^k*binom(n,k)*binom(k,k+r)*H(k+r))",
                  "0",
                  0, 40, "harmonic sine-factor lemma at integer r >= 1",
                  {samples("r", {"1", "2", "3"})}));
  c.push_back(rec("I-56", "alternating binomial reciprocal double sum",
                  "sum(k,1,n, sum(j,0,k-1, (-1)^j*binom(n,j)/(k-j)))",
                  "(-1)^(n+1)/n",
                  1, 25, "r = 0 branch of the sine-factor proposition"));
  c.push_back(rec("I-57", "half-integer case in rationalized form",
                  "sum(k,1,n, sum(j,0,k-1, (-1)^j*binom(2*n+1,2*j)*binom(2*j,j)"
                  "/(binom(n,j)*2^(2*j)*(2*(k-j)+1))))",
                  "(-1)^(n+1)*n*(n+1)*binom(2*(n+1),n+1)/((2*n+1)^2*2^(2*n))",
                  0, 25, "r = 1/2 case of the sine-factor proposition, fully rationalized"));

  // -- binomial transform identities ----------------------------------------

  // binom(n-j, k-j) makes the inner sum over k-j the transform of s at
  // order n-j, which is what the right side needs
  c.push_back(rec("I-58", "double sum over a binomial transform pair",
                  "sum(k,1,n, sum(j,0,k-1, (-1)^(k-j)*binom(n-j,k-j)*a(n-j)*s(k-j)))",
                  "sum(k,1,n, a(k)*sig(k)) - s(0)*sum(k,1,n, a(k))",
                  0, 25, "interchange identity summed against transform weights",
                  {rand_seq("a", 1, "n"), pair_seq("s", "sig", "n+1")}));
  c.push_back(rec("I-59", "Fibonacci transform pair",
                  "sum(k,1,n, sum(j,0,k-1, binom(n-j,k-j)*a(n-j)*F(k-j)))",
                  "sum(k,1,n, a(k)*F(2*k))",
                  0, 25, "transform pair ((-1)^k F_k, F_2k)",
                  {rand_seq("a", 1, "n")}));
  c.push_back(rec("I-60", "Lucas transform pair",
                  "sum(k,1,n, sum(j,0,k-1, binom(n-j,k-j)*a(n-j)*L(k-j)))",
                  "sum(k,1,n, a(k)*(L(2*k)-2))",
                  0, 25, "transform pair ((-1)^k L_k, L_2k)",
                  {rand_seq("a", 1, "n")}));
  c.push_back(rec("I-61", "Bernoulli self-transform pair",
                  "sum(k,1,n, sum(j,0,k-1, binom(n-j,k-j)*a(n-j)*B(k-j)))",
                  "sum(k,1,n, a(k)*((-1)^k*B(k)-1))",
                  0, 25, "self-dual pair ((-1)^k B_k, (-1)^k B_k); needs B_1 = -1/2",
                  {rand_seq("a", 1, "n")}));

  c.push_back(rec("I-62", "two-parameter transform double sum",
                  "sum(k,1,n, sum(j,0,k-1, (-1)^j*binom(n,j)/(n-j+1)"
                  "*sum(p,0,r, (-1)^p*binom(r,p)*s(k+p+m-j))))",
                  "(-1)^n/(n+1)*sum(p,0,m, (-1)^p*binom(m,p)*(sig(n+p+r) - sig(p+r)))",
                  0, 25, "iterated-difference transform theorem",
                  {samples("m", {"0", "1", "2"}), samples("r", {"0", "1", "2"}),
                   pair_seq("s", "sig", "n+m+r+1")}));
  c.push_back(rec("I-63", "transform double sum, m = 0 reduction",
                  "sum(k,1,n, sum(j,0,k-1, (-1)^j*binom(n,j)/(n-j+1)"
                  "*sum(p,0,r, (-1)^p*binom(r,p)*s(k+p-j))))",
                  "(-1)^n/(n+1)*(sig(n+r) - sig(r))",
                  0, 25, "m = 0 case of the two-parameter transform theorem",
                  {samples("r", {"0", "1", "2"}), pair_seq("s", "sig", "n+r+1")}));
  c.push_back(rec("I-64", "transform double sum, r = 0 reduction",
                  "sum(k,1,n, sum(j,0,k-1, (-1)^j*binom(n,j)*s(k+m-j)/(n-j+1)))",
                  "(-1)^n/(n+1)*sum(p,0,m, (-1)^p*binom(m,p)*(sig(n+p) - sig(p)))",
                  0, 25, "r = 0 case of the two-parameter transform theorem",
                  {samples("m", {"0", "1", "2"}), pair_seq("s", "sig", "n+m+1")}));
  c.push_back(rec("I-65", "plain transform double sum",
                  "sum(k,1,n, sum(j,0,k-1, (-1)^j*binom(n,j)*s(k-j)/(n-j+1)))",
                  "(-1)^n*(sig(n) - sig(0))/(n+1)",
                  0, 25, "m = r = 0 case of the transform theorem",
                  {pair_seq("s", "sig", "n+1")}));

  c.push_back(rec("I-66", "geometric-harmonic transform double sum",
                  "sum(k,1,n, sum(j,0,k-1, (-1)^j*binom(n,j)*x^(k-j)*H(k-j)/(n-j+1)))",
                  "(-1)^n/(n+1)*((1-x)^n*H(n) - sum(k,1,n, (1-x)^(n-k)/k))",
                  0, 25, "transform pair (x^k H_k, (1-x)^k H_k - ...) from Knuth-Boyadzhiev",
                  {samples("x", {"0", "1", "-1", "2", "1/2"})}));
  c.push_back(rec("I-67", "harmonic transform double sum at x = 1",
                  "sum(k,1,n, sum(j,0,k-1, (-1)^j*binom(n,j)*H(k-j)/(n-j+1)))",
                  "(-1)^(n+1)/(n*(n+1))",
                  1, 25, "x = 1 case of the geometric-harmonic transform identity"));
  c.push_back(rec("I-68", "power-weighted harmonic transform double sum",
                  "sum(k,1,n, sum(j,0,k, (-1)^j*binom(n,j)*(k-j)^r*H(k-j)/(n-j+1)))",
                  "(-1)^(n+1)/(n+1)*sum(k,0,r, (-1)^k*fact(k)*S2(r,k)/(n-k))",
                  1, 25, "r-th derivative of the geometric-harmonic identity; inner sum"
                         " runs to j = k",
                  {int_range("r", "0", "n-1")}));
  c.push_back(rec("I-69", "Catalan H-O transform double sum",
                  "sum(k,1,n, sum(j,0,k-1, (-1)^j*2^(2*j-2*k)*(2*(k-j)+1)*binom(n,j)"
                  "*Cat(k-j)*(H(k-j+1) - O(k-j+1))/((n-j+1)*(k-j+1))))",
                  "(-1)^(n+1)*(2*n+1)*Cat(n)*(H(n+1) - O(n+1))/(2^(2*n)*(n+1)^2)",
                  0, 25, "self-dual Catalan (H - O) transform pair"));
  c.push_back(rec("I-70", "Bernoulli ratio transform double sum",
                  "sum(k,1,n, (-1)^k*sum(j,0,k-1, B(k-j+1)*binom(n,j)/((k-j+1)*(n-j+1))))",
                  "(-1)^n/(n+1)^2*((-1)^(n+1)*B(n+1) + (n-1)/2)",
                  0, 25, "transform of the sequence B_{k+1}/(k+1)"));
  c.push_back(rec("I-71", "central-binomial transform double sum",
                  "sum(k,1,n, sum(j,0,k-1, (-1)^j*binom(n,j)*binom(2*(k-j),k-j)/(n-j+1)))",
                  "(sum(k,0,floor(n/2), binom(n,k)*binom(n-k,k)) - (-1)^n)/(n+1)",
                  0, 25, "transform of the central binomial coefficients",
                  {}));
  c.push_back(rec("I-72", "shifted Catalan transform double sum",
                  "sum(k,1,n, sum(j,0,k-1, (-1)^j*binom(n,j)*Cat(k-j+1)/(n-j+1)))",
                  "(sum(k,0,floor(n/2), binom(n,2*k)*Cat(k)) - (-1)^n)/(n+1)",
                  0, 25, "transform of the shifted Catalan numbers",
                  {}));

  return c;
}

}  // namespace detail

inline const std::vector<IdentityRecord>& builtin_catalog() {
  static const std::vector<IdentityRecord> catalog = detail::build_catalog();
  return catalog;
}

inline const IdentityRecord* find_identity(std::string_view id) {
  for (const auto& r : builtin_catalog())
    if (r.id == id) return &r;
  return nullptr;
}

}  // namespace batir
