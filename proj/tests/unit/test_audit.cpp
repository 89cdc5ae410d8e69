#include <doctest.h>

#include <sstream>

#include "qsep/audit.hpp"

using namespace qsep;

TEST_SUITE("audit") {
  TEST_CASE("sample seeds are distinct and stable") {
    CHECK(sample_seed(42, 0) == sample_seed(42, 0));
    CHECK(sample_seed(42, 0) != sample_seed(42, 1));
    CHECK(sample_seed(42, 0) != sample_seed(43, 0));
  }

  TEST_CASE("small audit passes and is reproducible") {
    AuditOptions o;
    o.n = 25;
    o.seed = 3;
    const AuditSummary a = run_audit(o);
    CHECK(a.ok());
    o.jobs = 4;
    const AuditSummary b = run_audit(o);
    std::ostringstream ta, tb;
    a.print(ta);
    b.print(tb);
    CHECK(ta.str() == tb.str());
    for (const auto& p : a.properties) CHECK(p.total > 0);
  }
}
