#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "batir/bench.hpp"
#include "batir/verify.hpp"

using namespace batir;

namespace {

ParamBinding n_binding(long n) {
  ParamBinding b;
  b.scalars["n"] = Rational(n);
  return b;
}

std::vector<Rational> random_seq(std::mt19937_64& rng, std::size_t len) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < len; ++i)
    out.push_back(Rational(static_cast<long>(rng() % 199) - 99, static_cast<long>(rng() % 20) + 1));
  return out;
}

}  // namespace

TEST_CASE("check_identity point values") {
  KernelCache cache;

  SECTION("I-25 at n = 1 gives 1/6 on both sides") {
    const IdentityRecord* rec = find_identity("I-25");
    REQUIRE(rec);
    auto [lhs, rhs] = eval_identity(*rec, n_binding(1), cache);
    CHECK(lhs == Rational(1, 6));
    CHECK(rhs == Rational(1, 6));
    auto rep = check_identity(*rec, 1, 42);
    CHECK(rep.status == Status::Pass);
    CHECK(rep.bindings_tested == 2);  // n = 0 and n = 1
  }

  SECTION("I-40 at n = 2 gives -7 on both sides") {
    const IdentityRecord* rec = find_identity("I-40");
    REQUIRE(rec);
    auto [lhs, rhs] = eval_identity(*rec, n_binding(2), cache);
    CHECK(lhs == Rational(-7));
    CHECK(rhs == Rational(-7));
    CHECK(check_identity(*rec, 2, 42).status == Status::Pass);
  }

  SECTION("I-36 at n = 2 gives 7/2 on both sides") {
    const IdentityRecord* rec = find_identity("I-36");
    REQUIRE(rec);
    auto [lhs, rhs] = eval_identity(*rec, n_binding(2), cache);
    CHECK(lhs == Rational(7, 2));
    CHECK(rhs == Rational(7, 2));
  }
}

TEST_CASE("a mutated right side is caught with a reproducible counterexample") {
  const IdentityRecord* rec = find_identity("I-05");
  REQUIRE(rec);
  IdentityRecord broken = mutated_rhs_plus_one(*rec);
  auto rep = check_identity(broken, 3, 42);
  REQUIRE(rep.status == Status::Fail);
  REQUIRE(rep.counterexample.has_value());
  const auto& ce = *rep.counterexample;
  CHECK(ce.lhs_value != ce.rhs_value);
  // re-evaluating the stored binding reproduces the mismatch
  KernelCache fresh;
  auto [lhs, rhs] = eval_identity(broken, ce.binding, fresh);
  CHECK(lhs == ce.lhs_value);
  CHECK(rhs == ce.rhs_value);
}

TEST_CASE("every catalog entry is mutation-sensitive") {
  for (const auto& rec : builtin_catalog()) {
    INFO(rec.id);
    auto rep = check_identity(mutated_rhs_plus_one(rec), rec.max_n_default, 42);
    CHECK(rep.status == Status::Fail);
    CHECK(rep.counterexample.has_value());
  }
}

TEST_CASE("a registry bug surfaces as Skipped, not Pass or Fail") {
  IdentityRecord bad;
  bad.id = "U-BAD";
  bad.title = "domain violates a kernel precondition";
  bad.lhs_text = "Hdiff(n, r)";
  bad.rhs_text = "Hdiff(n, r)";
  bad.lhs = parse(bad.lhs_text);
  bad.rhs = parse(bad.rhs_text);
  bad.params = {SampleSet{"r", {Rational(-1)}}};  // singular inside the sweep
  bad.min_n = 1;
  bad.max_n_default = 3;
  auto rep = check_identity(bad, 3, 42);
  CHECK(rep.status == Status::Skipped);
  CHECK(rep.skip_reason.find("SingularShift") != std::string::npos);
}

TEST_CASE("run_suite filtering and aggregation") {
  CHECK_THROWS_AS(run_suite("I-99", std::nullopt, 42), UnknownIdentity);
  CHECK_THROWS_AS(select_identities("NOPE"), UnknownIdentity);

  auto one = run_suite("I-27", 10, 42);
  REQUIRE(one.size() == 1);
  CHECK(one[0].status == Status::Pass);
  CHECK(one[0].n_max == 10);

  auto some = run_suite("I-2?", std::nullopt, 42);
  CHECK(some.size() == 9);  // I-20, I-22 .. I-29; suffixed ids do not match
  CHECK(all_passed(some));
  for (std::size_t i = 1; i < some.size(); ++i) CHECK(some[i - 1].identity_id < some[i].identity_id);
}

TEST_CASE("glob matching") {
  CHECK(glob_match("*", "I-05"));
  CHECK(glob_match("I-*", "I-05"));
  CHECK(glob_match("I-0?", "I-05"));
  CHECK(glob_match("I-05", "I-05"));
  CHECK_FALSE(glob_match("I-05", "I-050"));
  CHECK_FALSE(glob_match("I-0?", "I-051"));
  CHECK(glob_match("*5*", "I-51a"));
  CHECK_FALSE(glob_match("", "x"));
  CHECK(glob_match("**", "anything"));
}

TEST_CASE("suite runs are deterministic and job-count independent") {
  auto serial = run_suite("I-1*", std::nullopt, 42, 1);
  auto parallel = run_suite("I-1*", std::nullopt, 42, 4);
  auto again = run_suite("I-1*", std::nullopt, 42, 2);
  CHECK(reports_to_json(serial) == reports_to_json(parallel));
  CHECK(reports_to_json(serial) == reports_to_json(again));
  // a different seed draws different random bindings but still passes
  auto other_seed = run_suite("I-1*", std::nullopt, 43, 1);
  CHECK(all_passed(other_seed));
}

TEST_CASE("report JSON carries the contract fields") {
  auto reports = run_suite("I-05", std::nullopt, 42);
  auto j = nlohmann::json::parse(reports_to_json(reports));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 1);
  const auto& r = j[0];
  CHECK(r.at("identity_id") == "I-05");
  CHECK(r.at("bindings_tested").get<std::int64_t>() == 26);
  CHECK(r.at("n_range")[0].get<std::int64_t>() == 0);
  CHECK(r.at("n_range")[1].get<std::int64_t>() == 25);
  CHECK(r.at("status") == "Pass");
  CHECK(r.at("counterexample").is_null());
  CHECK(r.at("rng_seed").get<std::uint64_t>() == 42);
  CHECK_FALSE(r.contains("wall_time"));  // only present with timings enabled

  auto timed = nlohmann::json::parse(reports_to_json(reports, true));
  CHECK(timed[0].contains("wall_time"));

  // counterexample values are serialized as num/den strings
  auto broken = check_identity(mutated_rhs_plus_one(*find_identity("I-05")), 3, 42);
  auto jb = report_to_json(broken);
  CHECK(jb.at("status") == "Fail");
  std::string lhs = jb.at("counterexample").at("lhs_value").get<std::string>();
  CHECK(lhs.find('/') != std::string::npos);
}

TEST_CASE("brute-force double-sum oracle") {
  SECTION("constant sequences give n(n+1)/2") {
    for (std::int64_t n : {0, 1, 2, 5, 12}) {
      std::vector<Rational> ones(static_cast<std::size_t>(n), Rational(1));
      auto t = brute_force_double_sum(ones, ones, n);
      Rational expect(static_cast<long>(n * (n + 1) / 2));
      CHECK(t.shifted_form == expect);
      CHECK(t.variant_form == expect);
      CHECK(t.nested_form == expect);
    }
  }

  SECTION("random sequences agree across all three forms") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
      std::int64_t n = 25;
      auto a = random_seq(rng, 25);
      auto b = random_seq(rng, 25);
      auto t = brute_force_double_sum(a, b, n);
      CHECK(t.shifted_form == t.nested_form);
      CHECK(t.variant_form == t.nested_form);
    }
  }

  SECTION("the catalog master entries match the oracle") {
    std::mt19937_64 rng(7);
    const IdentityRecord* i01 = find_identity("I-01");
    const IdentityRecord* i02 = find_identity("I-02");
    REQUIRE(i01);
    REQUIRE(i02);
    KernelCache cache;
    for (int trial = 0; trial < 10; ++trial) {
      std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 20);
      ParamBinding binding = n_binding(static_cast<long>(n));
      binding.sequences["a"] = SequenceValues{1, random_seq(rng, static_cast<std::size_t>(n))};
      binding.sequences["b"] = SequenceValues{1, random_seq(rng, static_cast<std::size_t>(n))};
      auto oracle = brute_force_double_sum(binding.sequences["a"].values,
                                           binding.sequences["b"].values, n);
      auto [lhs1, rhs1] = eval_identity(*i01, binding, cache);
      auto [lhs2, rhs2] = eval_identity(*i02, binding, cache);
      CHECK(lhs1 == oracle.shifted_form);
      CHECK(rhs1 == oracle.nested_form);
      CHECK(lhs2 == oracle.variant_form);
      CHECK(rhs2 == oracle.nested_form);
    }
  }
}

TEST_CASE("binomial transform basics") {
  // transform of (1,1,1,...) is (1,0,0,...)
  std::vector<Rational> ones(8, Rational(1));
  auto sigma = binomial_transform(ones);
  CHECK(sigma[0] == Rational(1));
  for (std::size_t i = 1; i < sigma.size(); ++i) CHECK(sigma[i] == Rational(0));

  SECTION("involution on random sequences") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
      auto s = random_seq(rng, 1 + rng() % 64);
      CHECK(inverse_binomial_transform(binomial_transform(s)) == s);
    }
  }

  SECTION("named pairs") {
    KernelCache c;
    std::vector<Rational> fib, lucas, bern;
    for (std::int64_t k = 0; k <= 20; ++k) {
      Rational sign = Rational(-1).pow(k);
      fib.push_back(sign * c.fibonacci(k));
      lucas.push_back(sign * c.lucas(k));
      bern.push_back(sign * c.bernoulli(k));
    }
    auto fib_t = binomial_transform(fib);
    auto lucas_t = binomial_transform(lucas);
    auto bern_t = binomial_transform(bern);
    for (std::int64_t k = 0; k <= 20; ++k) {
      CHECK(fib_t[static_cast<std::size_t>(k)] == c.fibonacci(2 * k));
      CHECK(lucas_t[static_cast<std::size_t>(k)] == c.lucas(2 * k));
      CHECK(bern_t[static_cast<std::size_t>(k)] == bern[static_cast<std::size_t>(k)]);
    }
  }
}

TEST_CASE("I-43: both central-binomial double sums via independent raw loops") {
  KernelCache c;
  for (std::int64_t n = 0; n <= 20; ++n) {
    Rational lhs(0), rhs(0);
    for (std::int64_t k = 1; k <= n; ++k)
      for (std::int64_t j = 0; j <= k - 1; ++j) {
        Rational central = c.binom_int(2 * (n - j), n - j);
        Rational weight = Rational(2).pow(2 * j);
        lhs += weight * central * c.odd_harmonic(n - j, 1) / Rational(k - j);
        rhs += weight * central * c.harmonic(n - j, 1) / Rational(2 * (k - j) - 1);
      }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("cubic and mixed harmonic partial sums match their closed forms") {
  // oracle-side identities behind the I-31 and I-32 right sides
  KernelCache c;
  Rational sum_h3(0), sum_h_h2(0);
  for (std::int64_t n = 1; n <= 40; ++n) {
    Rational hn = c.harmonic(n, 1);
    Rational hn2 = c.harmonic(n, 2);
    sum_h3 += hn.pow(3);
    sum_h_h2 += hn * hn2;
    Rational np1(static_cast<long>(n + 1));
    Rational two_np1(static_cast<long>(2 * n + 1));
    Rational closed_h3 = np1 * hn.pow(3) - Rational(3, 2) * two_np1 * hn.pow(2) +
                         Rational(3) * two_np1 * hn + hn2 / Rational(2) -
                         Rational(static_cast<long>(6 * n));
    Rational closed_h_h2 = np1 * hn * hn2 - two_np1 * hn2 / Rational(2) + hn - hn.pow(2) / Rational(2);
    CHECK(sum_h3 == closed_h3);
    CHECK(sum_h_h2 == closed_h_h2);
  }
}

TEST_CASE("counterexamples with sequence bindings serialize fully") {
  const IdentityRecord* rec = find_identity("I-01");
  REQUIRE(rec);
  IdentityRecord broken = mutated_rhs_plus_one(*rec);
  broken.min_n = 1;  // so the first counterexample carries non-empty sequences
  auto rep = check_identity(broken, 5, 42);
  REQUIRE(rep.status == Status::Fail);
  REQUIRE_FALSE(rep.counterexample->binding.sequences.at("a").values.empty());
  auto j = report_to_json(rep);
  const auto& binding = j.at("counterexample").at("binding");
  REQUIRE(binding.at("sequences").contains("a"));
  REQUIRE(binding.at("sequences").contains("b"));
  const auto& a = binding.at("sequences").at("a");
  CHECK(a.at("start").get<std::int64_t>() == 1);
  for (const auto& v : a.at("values"))
    CHECK(v.get<std::string>().find('/') != std::string::npos);
  CHECK(binding.at("scalars").at("n").get<std::string>().find('/') != std::string::npos);
}

TEST_CASE("bench rows and CSV") {
  CHECK(bench({"I-05"}, {}).empty());
  CHECK(bench_csv({}) == "id,n,naive_ns,closed_ns,speedup\n");
  auto rows = bench({"I-05"}, {10, 20}, 5);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].id == "I-05");
  CHECK(rows[0].n == 10);
  CHECK(rows[1].n == 20);
  CHECK(rows[0].naive_ns >= 0);
  auto csv = bench_csv(rows);
  CHECK(csv.rfind("id,n,naive_ns,closed_ns,speedup\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  CHECK_THROWS_AS(bench({"I-XX"}, {5}), UnknownIdentity);
}

TEST_CASE("random-domain draw counts meet the floor of 16 per n") {
  const IdentityRecord* i14 = find_identity("I-14");  // 6 sample values x random sequence
  REQUIRE(i14);
  auto rep = check_identity(*i14, 3, 42);
  CHECK(rep.status == Status::Pass);
  // 6 samples x ceil(16/6)=3 draws = 18 bindings per n, 4 values of n
  CHECK(rep.bindings_tested == 18 * 4);
}
