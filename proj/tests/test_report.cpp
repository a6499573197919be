#include <doctest.h>

#include "symiso/report.hpp"
#include "symiso/suites.hpp"

using namespace symiso;

TEST_CASE("verification report bookkeeping")
{
  VerificationReport rep("demo");
  CheckRecord ok;
  ok.check_id = "a";
  ok.holds = true;
  rep.add(ok);
  CheckRecord open;
  open.check_id = "b";
  open.holds = false;
  open.asserted = false;
  rep.add(open);
  CHECK(rep.passed());
  CheckRecord bad;
  bad.check_id = "c";
  bad.lhs = exact_json(factorial(30));
  rep.add(bad);
  CHECK(rep.failures() == 1);
  CHECK_FALSE(rep.passed());

  const auto j = rep.records()[2].to_json();
  CHECK(j["lhs"] == "265252859812191058636308480000000");
  CHECK(j.begin().key() == "check_id");
  const auto s = rep.summary();
  CHECK(s["records"] == 3);
  CHECK(s["failures"] == 1);
  CHECK(s["passed"] == false);
}

TEST_CASE("every suite passes at small sizes")
{
  SuiteOptions o;
  o.max_n = 5;
  o.workers = 2;
  for (const auto &name : suite_names()) {
    const auto rep = run_suite(name, o);
    CAPTURE(name);
    CHECK(rep.records().size() > 0);
    for (const auto &r : rep.records())
      if (r.asserted && !r.holds)
        FAIL_CHECK(r.to_json().dump());
  }
  CHECK_THROWS_AS(run_suite("nope", o), std::invalid_argument);
}

TEST_CASE("suite output is deterministic")
{
  SuiteOptions a;
  a.max_n = 7;
  a.workers = 1;
  SuiteOptions b = a;
  b.workers = 4;
  for (const char *name : {"spectral", "conjectures"}) {
    const auto ra = run_suite(name, a), rb = run_suite(name, b);
    REQUIRE(ra.records().size() == rb.records().size());
    for (std::size_t i = 0; i < ra.records().size(); ++i)
      CHECK(ra.records()[i].to_json().dump() == rb.records()[i].to_json().dump());
  }
}
