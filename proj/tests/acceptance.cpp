// Acceptance run: one PASS/FAIL line per criterion. Usage:
//   twistkit_acceptance [path-to-twistkit_properties]
// Exit status is nonzero if any criterion fails, except a documented
// deviation whose observed result matches the recorded one exactly.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "twistkit/braid.hpp"
#include "twistkit/fp_group.hpp"
#include "twistkit/homology.hpp"
#include "twistkit/invariants.hpp"
#include "twistkit/verify.hpp"

using namespace twistkit;

namespace {

// Runtime limits in seconds. All numeric checks are exact (zero tolerance).
constexpr double kLimitTheorem3 = 60.0;
constexpr double kLimitLemmas = 60.0;
constexpr double kLimitHomology = 5.0;
constexpr double kLimitFiberSum = 30.0;

struct Outcome {
  bool pass = true;
  bool documented_deviation = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << " s";
  return os.str();
}

Outcome fail(std::string why) { return {false, false, std::move(why)}; }

Outcome verify_range(const std::vector<Claim>& claims, int lo, int hi, double limit) {
  const auto t0 = Clock::now();
  std::vector<VerifyJob> jobs;
  for (Claim c : claims)
    for (int g = lo; g <= hi; ++g) jobs.push_back({c, g});
  const auto reports = verify_jobs(jobs, {}, 1);
  const double dt = seconds_since(t0);
  for (const auto& r : reports)
    if (r.status != Status::Verified) return fail(r.to_text());
  if (dt >= limit) return fail("took " + fmt_seconds(dt));
  return {true, false, std::to_string(reports.size()) + " (claim, genus) pairs verified in " + fmt_seconds(dt)};
}

Outcome criterion1() {
  // g = 0 is the base case beta_0 beta^2 = Delta_1 = sigma_1.
  const auto base = theorem3_sides(0);
  if (!(base.lhs == base.rhs) || base.rhs.word().size() != 1) return fail("g=0 base case is not sigma_1");
  return verify_range({Claim::T3}, 0, 5, kLimitTheorem3);
}

Outcome criterion2() {
  return verify_range({Claim::L1a, Claim::L1b, Claim::L1c, Claim::L1d, Claim::L2a, Claim::L2b, Claim::L3}, 1, 5,
                      kLimitLemmas);
}

Outcome criterion3() {
  const auto t0 = Clock::now();
  for (int g = 2; g <= 8; ++g) {
    if (!evaluate_twistword(relation_word(g)).is_identity()) return fail("W is not I at g=" + std::to_string(g));
    if (hyperelliptic_matrix(g).is_identity()) return fail("-I equals I at g=" + std::to_string(g));
  }
  const double dt = seconds_since(t0);
  if (dt >= kLimitHomology) return fail("took " + fmt_seconds(dt));
  return {true, false, "W -> I and -I != I for g=2..8 in " + fmt_seconds(dt)};
}

Outcome criterion4() {
  for (int g = 2; g <= 8; g += 2)
    if (!evaluate_twistword(chain_power_word(g, 2 * (g + 1))).is_identity())
      return fail("(t_g...t_1)^{2(g+1)} != I at g=" + std::to_string(g));
  std::string pairs;
  for (int g = 3; g <= 7; g += 2) {
    try {
      const ChainBoundary cb = chain_boundary_classes(g);
      if (!(transvection(cb.alpha, 1) * transvection(cb.beta, 1) == cb.monodromy) ||
          intersection(cb.alpha, cb.beta) != 0)
        return fail("reconstruction failed at g=" + std::to_string(g));
      pairs += " g=" + std::to_string(g) + ":(" + cb.alpha.to_string() + ", " + cb.beta.to_string() + ")";
    } catch (const std::exception& e) {
      return fail(e.what());
    }
  }
  return {true, false, "even g=2,4,6,8 identity; odd boundary pairs" + pairs};
}

Outcome criterion5() {
  const auto t0 = Clock::now();
  int matched = 0, odd_mismatch = 0, odd_as_recorded = 0;
  std::string first_bad;
  for (int g = 2; g <= 6; ++g)
    for (long n = 1; n <= 10; ++n) {
      const auto classes = vanishing_cycle_classes(g, Monodromy::wn(n));
      const std::size_t expected_count = static_cast<std::size_t>(g * (g % 2 == 0 ? 2 * g + 4 : 2 * g + 10));
      if (classes.size() != expected_count) return fail("cycle count mismatch at g=" + std::to_string(g));
      const AbelianGroup h = abelianization(classes);
      if (h == AbelianGroup::z_plus_zn(n)) {
        ++matched;
        continue;
      }
      if (g % 2 == 0) return fail("g=" + std::to_string(g) + " n=" + std::to_string(n) + ": " + h.to_string());
      ++odd_mismatch;
      // Recorded deviation: odd g gives exactly Z_n (trivial for n = 1).
      const AbelianGroup recorded{0, n == 1 ? std::vector<BigInt>{} : std::vector<BigInt>{n}};
      if (h == recorded) ++odd_as_recorded;
      if (first_bad.empty())
        first_bad = "g=" + std::to_string(g) + " n=" + std::to_string(n) + " gives " + h.to_string();
    }
  const double dt = seconds_since(t0);
  if (dt >= kLimitFiberSum) return fail("took " + fmt_seconds(dt));
  if (odd_mismatch == 0) return {true, false, "50/50 pairs give Z + Z_n in " + fmt_seconds(dt)};
  Outcome o = fail(std::to_string(matched) + "/50 pairs give Z + Z_n (all even g); odd g gives Z_n, e.g. " +
                   first_bad + "; see README");
  o.documented_deviation = odd_as_recorded == odd_mismatch;
  return o;
}

Outcome criterion6() {
  for (int g = 2; g <= 8; g += 2) {
    const InvariantReport r = even_genus_report(g);
    const AbelianGroup h1 = abelianization(vanishing_cycle_classes(g, Monodromy::w()));
    const FibrationData d = even_relation_fibration(g);
    const bool ok = h1 == AbelianGroup{static_cast<std::size_t>(g), {}} && r.chi == 8 - 2 * g && r.sigma == -4 &&
                    r.b2_plus == 1 && d.nonseparating == 2 * g + 2 && d.separating.size() == 1 &&
                    d.separating.at(g / 2) == 2 && r.consistent();
    if (!ok) return fail("g=" + std::to_string(g) + ": " + r.to_json());
  }
  return {true, false, "H_1 = Z^g, chi = 8-2g, sigma = -4, b2+ = 1 for g=2,4,6,8"};
}

Outcome criterion7() {
  const DefinitenessCertificate cert = is_positive_definite(matrix_A());
  if (!cert.positive_definite || cert.leading_minors.size() != 7) return fail("matrix A is not positive definite");
  for (int g = 3; g <= 9; g += 2) {
    const OddDeduction d = odd_g_deduction(g);
    const InvariantReport& r = d.report;
    const AbelianGroup h1 = abelianization(vanishing_cycle_classes(g, Monodromy::w()));
    int premises = 0;
    for (const auto& s : d.steps) premises += s.kind == StepKind::Premise;
    const bool ok = h1 == AbelianGroup{static_cast<std::size_t>(g - 1), {}} && r.chi == 14 - 2 * g && r.b2 == 10 &&
                    r.sigma == -8 && r.b2_minus == 9 && r.b2_plus == 1 && premises == 2 &&
                    r.premises.size() == 2 && !d.steps.empty() && d.steps.back().kind == StepKind::Computed;
    if (!ok) return fail("g=" + std::to_string(g) + ": " + r.to_json());
  }
  return {true, false, "H_1 = Z^{g-1}, chi = 14-2g, b2 = 10, sigma = -8, b2- = 9 for g=3,5,7,9; 2 premises"};
}

Outcome criterion8(const char* properties) {
  if (properties == nullptr) return fail("path to the property binary not given");
  std::string cmd = std::string("\"") + properties + "\" --minimal";
  const int rc = std::system(cmd.c_str());
  if (rc != 0) return fail("property binary exited with status " + std::to_string(rc));
  return {true, false, "word_core, artin, symplectic, chain, smith (1000 matrices), fp_group suites pass"};
}

}  // namespace

int main(int argc, char** argv) {
  const char* properties = argc > 1 ? argv[1] : nullptr;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 T3 braid identity, g=0..5", criterion1},
      {"2 Lemma suite, g=1..5", criterion2},
      {"3 homology shadow of W, g=2..8", criterion3},
      {"4 chain relation shadows", criterion4},
      {"5 H_1 of X_n = Z + Z_n, g=2..6, n=1..10", criterion5},
      {"6 even genus invariants", criterion6},
      {"7 odd genus invariants", criterion7},
      {"8 property suites", [&] { return criterion8(properties); }},
  };
  bool unexpected_failure = false;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail
              << (o.documented_deviation ? " [documented deviation]" : "") << std::endl;
    unexpected_failure = unexpected_failure || (!o.pass && !o.documented_deviation);
  }
  return unexpected_failure ? 1 : 0;
}
