#include <doctest.h>

#include "golden.hpp"

TEST_CASE("CLI output matches the golden files") {
  const auto cases = lozenge::test::golden_cases(LOZENGE_GOLDEN_DIR);
  REQUIRE(cases.size() >= 10);
  for (const auto& c : cases) {
    const auto r = lozenge::test::run_golden(LOZENGE_GOLDEN_DIR, c);
    INFO(r.name << ": " << r.detail);
    CHECK(r.passed);
  }
}
