#include <gtest/gtest.h>

#include "dcs/atlas.hpp"
#include "dcs/verify.hpp"

using namespace dcs;

namespace {

Claim claim(const std::string& id) {
  for (const auto& c : Atlas::instance().claims()) {
    if (c.id == id) return c;
  }
  ADD_FAILURE() << "no claim " << id;
  return {};
}

const std::vector<std::int64_t>* ints(const ClaimReport& r, const std::string& name) {
  for (const auto& [k, v] : r.integers) {
    if (k == name) return &v;
  }
  return nullptr;
}

VerifyOptions quick() {
  VerifyOptions o;
  o.stability = false;
  return o;
}

}  // namespace

TEST(Verdict, DistanceThresholds) {
  EXPECT_EQ(distance_verdict(1e-10, 1e-9, 1e-13), Verdict::Pass);
  EXPECT_EQ(distance_verdict(1e-9, 1e-9, 1e-13), Verdict::Pass);
  EXPECT_EQ(distance_verdict(1e-8, 1e-9, 1e-13), Verdict::Fail);
  // tolerance below the rounding floor: small distances cannot be judged
  EXPECT_EQ(distance_verdict(1e-15, 1e-30, 1e-13), Verdict::Inconclusive);
  EXPECT_EQ(distance_verdict(1e-12, 1e-30, 1e-13), Verdict::Fail);
  EXPECT_EQ(distance_verdict(0.0, 1e-30, 1e-13), Verdict::Pass);
}

TEST(Verdict, DowngradeIsWorstOf) {
  ClaimReport r;
  r.downgrade(Verdict::Pass);
  EXPECT_EQ(r.verdict, Verdict::Pass);
  r.downgrade(Verdict::Inconclusive);
  EXPECT_EQ(r.verdict, Verdict::Inconclusive);
  r.downgrade(Verdict::Pass);
  EXPECT_EQ(r.verdict, Verdict::Inconclusive);
  r.downgrade(Verdict::Fail);
  EXPECT_EQ(r.verdict, Verdict::Fail);
  r.downgrade(Verdict::Inconclusive);
  EXPECT_EQ(r.verdict, Verdict::Fail);
  EXPECT_STREQ(to_string(Verdict::Inconclusive), "inconclusive");
}

TEST(Verdict, ToleranceScales) {
  VerifyOptions o;
  EXPECT_DOUBLE_EQ(o.scaled(1e-9), 1e-9);
  o.tol.proj_eq_tol = 1e-12;
  EXPECT_DOUBLE_EQ(o.scaled(1e-9), 1e-12);
}

TEST(Claims, MembershipAndIdentityPass) {
  for (const char* id : {"C3.alpha", "C6.2", "C6.3", "C6.4", "C6.5", "C14.1", "C14.2"}) {
    const ClaimReport r = verify_claim(claim(id), quick());
    EXPECT_EQ(r.verdict, Verdict::Pass) << id << " " << r.error;
    EXPECT_TRUE(r.error.empty());
    EXPECT_EQ(r.claim_id, id);
  }
}

TEST(Claims, FiberVector) {
  const ClaimReport r = verify_claim(claim("C13.4"), quick());
  EXPECT_EQ(r.verdict, Verdict::Pass);
  ASSERT_NE(ints(r, "fiber-windings"), nullptr);
  EXPECT_EQ(*ints(r, "fiber-windings"), (std::vector<std::int64_t>{1, 1, 2}));

  Claim off = claim("C13.4");
  off.expected = {1, 1, 3};
  EXPECT_EQ(verify_claim(off, quick()).verdict, Verdict::Fail);
}

TEST(Claims, BraidRelations) {
  EXPECT_EQ(verify_claim(claim("YB3"), quick()).verdict, Verdict::Pass);
  EXPECT_EQ(verify_claim(claim("YB4"), quick()).verdict, Verdict::Pass);
}

TEST(Claims, StabilityRerunsOnce) {
  VerifyOptions o;
  const ClaimReport r = verify_claim(claim("C3.alpha"), o);
  EXPECT_EQ(r.verdict, Verdict::Pass);
  EXPECT_EQ(r.refinements, 1);
  EXPECT_EQ(verify_claim(claim("C3.alpha"), quick()).refinements, 0);
}

TEST(Claims, TinyToleranceIsInconclusiveNotFail) {
  VerifyOptions o = quick();
  o.tol.proj_eq_tol = 1e-30;
  for (const char* id : {"C6.2", "C3.alpha"}) {
    const ClaimReport r = verify_claim(claim(id), o);
    EXPECT_EQ(r.verdict, Verdict::Inconclusive) << id << " " << r.error;
  }
}

TEST(Claims, ErrorsBecomeFailures) {
  Claim c = claim("C6.2");
  c.lhs = "no_such_loop";
  const ClaimReport r = verify_claim(c, quick());
  EXPECT_EQ(r.verdict, Verdict::Fail);
  EXPECT_FALSE(r.error.empty());
}

TEST(Claims, Deterministic) {
  const ClaimReport a = verify_claim(claim("C13.4"), quick());
  const ClaimReport b = verify_claim(claim("C13.4"), quick());
  EXPECT_EQ(a.margins, b.margins);
  EXPECT_EQ(a.integers, b.integers);
}
