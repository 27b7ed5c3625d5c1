#include <doctest.h>

#include <set>

#include "lefschetz/error.hpp"
#include "lefschetz/suite.hpp"

using namespace lefschetz;

TEST_CASE("every corpus algebra is Artinian with degree-one generators") {
  auto corpus = cross_check_corpus();
  CHECK(corpus.size() >= 10);
  std::set<std::string> names;
  for (const auto& c : corpus) {
    names.insert(c.name);
    CHECK(c.algebra.dim() > 0);
    CHECK(c.algebra.module.linear_count() > 0);
    CHECK(c.algebra.module.actions_commute());
  }
  CHECK(names.size() == corpus.size());
}

TEST_CASE("corpus order and identifiers") {
  auto ids = suite_theorems();
  CHECK(ids == std::vector<std::string>{check_id::kThickening, check_id::kTensor, check_id::kAssociatedGraded,
                                        check_id::kCentralSimple, check_id::kGorensteinCentralSimple,
                                        check_id::kFreeExtension, check_id::kPowerSum,
                                        check_id::kEmbeddingDimension, check_id::kMonomialXY});
  auto corpus = verification_corpus();
  std::size_t pos = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    while (pos < ids.size() && ids[pos] != corpus[i].theorem) ++pos;
    REQUIRE(pos < ids.size());
    if (i > 0 && corpus[i - 1].theorem == corpus[i].theorem) CHECK(corpus[i].ordinal == corpus[i - 1].ordinal + 1);
    else CHECK(corpus[i].ordinal == 1);
  }
  for (const auto& id : ids) {
    auto n = std::count_if(corpus.begin(), corpus.end(), [&](const SuiteEntry& e) { return e.theorem == id; });
    CHECK_MESSAGE(n > 0, id);
  }
}

TEST_CASE("the full corpus is consistent") {
  auto results = run_suite("");
  CHECK(results.size() == verification_corpus().size());
  for (const auto& r : results) {
    CHECK_MESSAGE(r.consistent, r.theorem << " #" << r.ordinal << " " << r.instance);
    CHECK_FALSE(r.error);
    CHECK(to_json(r)["theorem"] == r.theorem);
  }
}

TEST_CASE("filtering") {
  auto results = run_suite(check_id::kMonomialXY);
  CHECK(results.size() == 36);
  for (const auto& r : results) CHECK(r.theorem == check_id::kMonomialXY);
  try {
    run_suite("2.1");
    FAIL("expected OutOfRange");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OutOfRange);
  }
}

TEST_CASE("suite output does not depend on the run") {
  auto a = run_suite(check_id::kTensor), b = run_suite(check_id::kTensor);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(to_json(a[i]).dump() == to_json(b[i]).dump());
}
