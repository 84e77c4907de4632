#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twistkit/artin.hpp"

namespace twistkit {

/// Verifiable claims. The braid claims are certified by the Artin oracle; the
/// mapping-class claims by the symplectic (homology) representation.
enum class Claim { L1a, L1b, L1c, L1d, L2a, L2b, L3, T3, McgW, Chain, JAct };

enum class ClaimFamily { Braid, Symplectic };

std::string_view claim_name(Claim c);
std::optional<Claim> parse_claim(std::string_view name);
std::vector<Claim> all_claims();
ClaimFamily claim_family(Claim c);
/// Smallest genus the claim is defined for (0 for braid claims, 2 otherwise).
int claim_min_genus(Claim c);

/// Default genus caps, overridable per invocation.
inline constexpr int kOracleGenusCap = 6;
inline constexpr int kSymplecticGenusCap = 10;
inline constexpr int kInvariantsGenusCap = 20;

enum class Status { Verified, Falsified, Error };
std::string_view status_name(Status s);

struct VerificationReport {
  std::string claim;
  int genus = 0;
  std::string parameters;  ///< what was enumerated, e.g. "40 instances"
  Status status = Status::Error;
  std::string witness;  ///< set whenever status != Verified
  double elapsed_ms = 0.0;

  std::string to_text() const;
  /// Deterministic: no timing information.
  std::string to_json() const;
};

struct VerifyOptions {
  std::size_t image_ceiling = kDefaultImageCeiling;
};

VerificationReport verify_claim(Claim c, int g, const VerifyOptions& opts = {});

struct VerifyJob {
  Claim claim;
  int genus;
};

/// Runs the jobs on up to `threads` workers; results come back in job order.
std::vector<VerificationReport> verify_jobs(const std::vector<VerifyJob>& jobs, const VerifyOptions& opts,
                                            unsigned threads);

}  // namespace twistkit
