#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twistkit/verify.hpp"

using namespace twistkit;

TEST_CASE("claim names") {
  for (Claim c : all_claims()) CHECK(parse_claim(claim_name(c)) == c);
  CHECK(parse_claim("MCG-W") == Claim::McgW);
  CHECK_FALSE(parse_claim("mcg-w").has_value());
  CHECK(claim_min_genus(Claim::T3) == 0);
  CHECK(claim_min_genus(Claim::Chain) == 2);
}

TEST_CASE("every claim verifies at small genus") {
  for (Claim c : all_claims())
    for (int g = std::max(2, claim_min_genus(c)); g <= 4; ++g) {
      const VerificationReport r = verify_claim(c, g);
      CHECK_MESSAGE(r.status == Status::Verified, r.to_text());
      CHECK(r.witness.empty());
    }
  CHECK(verify_claim(Claim::T3, 0).status == Status::Verified);
  CHECK_THROWS_AS(verify_claim(Claim::McgW, 1), std::invalid_argument);
}

TEST_CASE("image ceiling turns into an error report") {
  VerifyOptions tight;
  tight.image_ceiling = 4;
  const VerificationReport r = verify_claim(Claim::T3, 3, tight);
  CHECK(r.status == Status::Error);
  CHECK_FALSE(r.witness.empty());
}

TEST_CASE("jobs come back in order") {
  std::vector<VerifyJob> jobs;
  for (int g = 4; g >= 0; --g) jobs.push_back({Claim::L1a, g});
  jobs.push_back({Claim::JAct, 2});
  const auto reports = verify_jobs(jobs, {}, 4);
  REQUIRE(reports.size() == jobs.size());
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    CHECK(reports[i].claim == claim_name(jobs[i].claim));
    CHECK(reports[i].genus == jobs[i].genus);
  }
}

TEST_CASE("json is deterministic") {
  const auto a = verify_claim(Claim::McgW, 3).to_json();
  const auto b = verify_claim(Claim::McgW, 3).to_json();
  CHECK(a == b);
  CHECK(a == R"({"claim":"MCG-W","genus":3,"parameters":"16 twists","status":"verified"})");
}
