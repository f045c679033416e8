#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "sccheck/wz.hpp"

using namespace sccheck;

TEST_CASE("WZ pair certificate on a compact grid") {
  WzOutcome o = verify_wz_pair(16);
  CHECK(o.pass);
  CHECK_FALSE(o.where.empty());
}

TEST_CASE("telescoped identity at the fixed primes") {
  for (uint32_t p : {5u, 7u, 11u, 13u, 17u, 19u}) {
    WzOutcome o = verify_telescoping(p);
    CHECK(o.pass);
    if (!o.pass)
      MESSAGE("p=", p, " first offending point ", o.where, " lhs=",
              o.lhs.get_str(), " rhs=", o.rhs.get_str());
  }
}

TEST_CASE("half-integer Pochhammer identities") {
  WzOutcome o = verify_pochhammer_identities(12, 12);
  CHECK(o.pass);
}

TEST_CASE("closed rewrite of G") {
  WzOutcome o = verify_g_rewrite(12, 12);
  CHECK(o.pass);
  // pinned values the rewrite must reproduce
  CHECK(G_eval({1, 1}) == 1);
  CHECK(G_eval({2, 1}) == BigRational(9, 32));
}

TEST_CASE("degenerate grids still decide") {
  CHECK(verify_wz_pair(1).pass);
  CHECK(verify_pochhammer_identities(1, 1).pass);
  CHECK(verify_g_rewrite(1, 1).pass);
}
