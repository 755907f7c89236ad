#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <set>
#include <sstream>

#include "batir/catalog.hpp"
#include "batir/catalog_io.hpp"
#include "batir/verify.hpp"

using namespace batir;

TEST_CASE("catalog size and id discipline") {
  const auto& cat = builtin_catalog();
  CHECK(cat.size() >= 60);

  std::set<std::string> ids;
  for (const auto& r : cat) {
    CHECK(ids.insert(r.id).second);  // no duplicate ids
    CHECK(r.id.rfind("I-", 0) == 0);
  }

  // ids are emitted in sorted order, which keeps suite reports sorted
  for (std::size_t i = 1; i < cat.size(); ++i) CHECK(cat[i - 1].id < cat[i].id);
}

TEST_CASE("named entries are present with the expected shape") {
  const IdentityRecord* dixon = find_identity("I-40");
  REQUIRE(dixon != nullptr);
  CHECK(dixon->min_n == 1);

  const IdentityRecord* master = find_identity("I-01");
  REQUIRE(master != nullptr);
  int random_seqs = 0;
  for (const auto& p : master->params)
    if (std::holds_alternative<RandomSequence>(p)) ++random_seqs;
  CHECK(random_seqs == 2);

  CHECK(find_identity("I-58") != nullptr);
  CHECK(find_identity("I-72") != nullptr);
  CHECK(find_identity("I-XX") == nullptr);
}

TEST_CASE("free variables of each entry are exactly {n} plus its parameters") {
  for (const auto& r : builtin_catalog()) {
    INFO(r.id);
    std::set<std::string> declared_scalars{"n"};
    std::set<std::string> declared_seqs;
    for (const auto& p : r.params) {
      if (const auto* s = std::get_if<SampleSet>(&p)) declared_scalars.insert(s->name);
      if (const auto* t = std::get_if<SampleTuples>(&p))
        declared_scalars.insert(t->names.begin(), t->names.end());
      if (const auto* rr = std::get_if<RandomRational>(&p)) declared_scalars.insert(rr->name);
      if (const auto* ir = std::get_if<IntRange>(&p)) declared_scalars.insert(ir->name);
      if (const auto* rs = std::get_if<RandomSequence>(&p)) declared_seqs.insert(rs->name);
      if (const auto* tp = std::get_if<TransformPair>(&p)) {
        declared_seqs.insert(tp->seq_name);
        declared_seqs.insert(tp->sigma_name);
      }
    }
    FreeVars used = free_variables(r.lhs);
    used.merge(free_variables(r.rhs));
    CHECK(used.scalars == declared_scalars);
    CHECK(used.sequences == declared_seqs);
  }
}

TEST_CASE("every catalog expression round-trips through the printer") {
  for (const auto& r : builtin_catalog()) {
    INFO(r.id);
    CHECK(parse(print(r.lhs)) == r.lhs);
    CHECK(parse(print(r.rhs)) == r.rhs);
  }
}

TEST_CASE("smoke sweep: every entry evaluates cleanly at n = min_n") {
  for (const auto& r : builtin_catalog()) {
    INFO(r.id);
    auto rep = check_identity(r, r.min_n, 42);
    CHECK(rep.status == Status::Pass);
    CHECK(rep.bindings_tested >= 1);
  }
}

TEST_CASE("catalog export round-trips losslessly") {
  const auto& cat = builtin_catalog();
  std::string dump = export_catalog(cat);
  auto imported = import_catalog(dump);
  REQUIRE(imported.size() == cat.size());
  for (std::size_t i = 0; i < cat.size(); ++i) {
    INFO(cat[i].id);
    CHECK(imported[i].id == cat[i].id);
    CHECK(imported[i].title == cat[i].title);
    CHECK(imported[i].lhs_text == cat[i].lhs_text);
    CHECK(imported[i].rhs_text == cat[i].rhs_text);
    CHECK(imported[i].lhs == cat[i].lhs);
    CHECK(imported[i].rhs == cat[i].rhs);
    CHECK(imported[i].params == cat[i].params);
    CHECK(imported[i].min_n == cat[i].min_n);
    CHECK(imported[i].max_n_default == cat[i].max_n_default);
    CHECK(imported[i].anchor == cat[i].anchor);
  }
  // and the dump itself is stable
  CHECK(export_catalog(imported) == dump);
}

TEST_CASE("checked-in catalog dump matches the builtin catalog") {
  std::ifstream in(CATALOG_DOC_PATH, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == export_catalog(builtin_catalog()));
}

TEST_CASE("user-supplied records can use the random domains") {
  IdentityRecord custom;
  custom.id = "U-01";
  custom.title = "distributivity probe";
  custom.lhs_text = "c*sum(k,1,n, a(k))";
  custom.rhs_text = "sum(k,1,n, c*a(k))";
  custom.lhs = parse(custom.lhs_text);
  custom.rhs = parse(custom.rhs_text);
  custom.params = {RandomRational{"c"}, RandomSequence{"a", 1, "n"}};
  custom.min_n = 0;
  custom.max_n_default = 10;
  custom.anchor = "test only";
  auto rep = check_identity(custom, 10, 7);
  CHECK(rep.status == Status::Pass);
  CHECK(rep.bindings_tested >= 16 * 11);
}
