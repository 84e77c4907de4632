#include "twistkit/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "twistkit/braid.hpp"
#include "twistkit/homology.hpp"

namespace twistkit {

namespace {

constexpr std::array<std::pair<Claim, std::string_view>, 11> kNames{{
    {Claim::L1a, "L1a"},
    {Claim::L1b, "L1b"},
    {Claim::L1c, "L1c"},
    {Claim::L1d, "L1d"},
    {Claim::L2a, "L2a"},
    {Claim::L2b, "L2b"},
    {Claim::L3, "L3"},
    {Claim::T3, "T3"},
    {Claim::McgW, "MCG-W"},
    {Claim::Chain, "CHAIN"},
    {Claim::JAct, "JACT"},
}};

LemmaId lemma_of(Claim c) {
  switch (c) {
    case Claim::L1a: return LemmaId::L1a;
    case Claim::L1b: return LemmaId::L1b;
    case Claim::L1c: return LemmaId::L1c;
    case Claim::L1d: return LemmaId::L1d;
    case Claim::L2a: return LemmaId::L2a;
    case Claim::L2b: return LemmaId::L2b;
    case Claim::L3: return LemmaId::L3;
    case Claim::T3: return LemmaId::T3;
    default: throw std::logic_error("not a braid claim");
  }
}

// First entry where m differs from the target, as "M(r,c) = v, expected e".
std::string matrix_witness(const SpMatrix& m, const SpMatrix& target) {
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c)
      if (m(r, c) != target(r, c)) {
        std::ostringstream os;
        os << "M(" << r + 1 << "," << c + 1 << ") = " << m(r, c) << ", expected " << target(r, c);
        return os.str();
      }
  return {};
}

void verify_braid(VerificationReport& rep, Claim c, int g, const VerifyOptions& opts) {
  const LemmaId id = lemma_of(c);
  const auto instances = lemma_instances(id, g);
  rep.parameters = std::to_string(instances.size()) + (instances.size() == 1 ? " instance" : " instances");
  for (const auto& p : instances) {
    const IdentitySides s = lemma_identity_sides(id, g, p);
    const FreeAuto lhs = evaluate(s.lhs, opts.image_ceiling);
    const FreeAuto rhs = evaluate(s.rhs, opts.image_ceiling);
    if (auto j = first_difference(lhs, rhs)) {
      rep.status = Status::Falsified;
      rep.witness = describe(id, p) + ": images of x" + std::to_string(*j) + " differ";
      return;
    }
    // Equal braids must induce equal permutations; a mismatch is an internal fault.
    if (to_permutation(s.lhs) != to_permutation(s.rhs)) {
      rep.status = Status::Error;
      rep.witness = describe(id, p) + ": Artin images agree but permutations differ";
      return;
    }
  }
  rep.status = Status::Verified;
}

void verify_mcg_w(VerificationReport& rep, int g) {
  const TwistWord w = relation_word(g);
  rep.parameters = std::to_string(w.twist_count()) + " twists";
  const CurveTable table(g);
  SpMatrix m = SpMatrix::identity(g);
  for (const auto& letter : w.letters) {
    m.right_multiply_transvection(table.at(letter.label), letter.exponent);
    if (!m.is_symplectic()) {
      rep.status = Status::Falsified;
      rep.witness = "partial product through t_" + letter.label + " is not symplectic";
      return;
    }
  }
  if (!m.is_identity()) {
    rep.status = Status::Falsified;
    rep.witness = matrix_witness(m, SpMatrix::identity(g));
    return;
  }
  rep.status = Status::Verified;
}

void verify_chain(VerificationReport& rep, int g) {
  if (g % 2 == 0) {
    const SpMatrix m = evaluate_twistword(chain_power_word(g, 2 * (g + 1)));
    rep.parameters = "(t_g...t_1)^" + std::to_string(2 * (g + 1));
    if (!m.is_identity()) {
      rep.status = Status::Falsified;
      rep.witness = matrix_witness(m, SpMatrix::identity(g));
      return;
    }
    const HClass c = curve_class("c", g);
    if (!c.is_zero()) {
      rep.status = Status::Falsified;
      rep.witness = "[c] = " + c.to_string();
      return;
    }
    rep.status = Status::Verified;
    return;
  }
  rep.parameters = "(t_g...t_1)^" + std::to_string(g + 1);
  try {
    const ChainBoundary cb = chain_boundary_classes(g);
    rep.parameters += ", alpha = " + cb.alpha.to_string() + ", beta = " + cb.beta.to_string();
    rep.status = Status::Verified;
  } catch (const ChainExtractionError& e) {
    rep.status = Status::Falsified;
    rep.witness = e.what();
  }
}

void verify_jact(VerificationReport& rep, int g) {
  rep.parameters = "chain words on " + std::to_string(strands_for_genus(g)) + " strands";
  const SpMatrix j = hyperelliptic_matrix(g);
  if (j.is_identity()) {
    rep.status = Status::Falsified;
    rep.witness = "hyperelliptic matrix equals I";
    return;
  }
  // The involution as a chain word: t_1 ... t_{2g+1} t_{2g+1} ... t_1.
  const SpMatrix palindrome = evaluate_chain_word(delta(g, 2 * g + 1) * bar_delta(g, 2 * g + 1), g);
  if (palindrome != j) {
    rep.status = Status::Falsified;
    rep.witness = "t_1...t_{2g+1}t_{2g+1}...t_1: " + matrix_witness(palindrome, j);
    return;
  }
  const BraidWord half = half_twist(g);
  const SpMatrix full = evaluate_chain_word(half * half, g);
  if (!full.is_identity()) {
    rep.status = Status::Falsified;
    rep.witness = "full twist: " + matrix_witness(full, SpMatrix::identity(g));
    return;
  }
  rep.status = Status::Verified;
}

}  // namespace

std::string_view claim_name(Claim c) {
  for (const auto& [k, name] : kNames)
    if (k == c) return name;
  return "?";
}

std::optional<Claim> parse_claim(std::string_view name) {
  for (const auto& [k, n] : kNames)
    if (n == name) return k;
  return std::nullopt;
}

std::vector<Claim> all_claims() {
  std::vector<Claim> out;
  for (const auto& [k, n] : kNames) out.push_back(k);
  return out;
}

ClaimFamily claim_family(Claim c) {
  switch (c) {
    case Claim::McgW:
    case Claim::Chain:
    case Claim::JAct: return ClaimFamily::Symplectic;
    default: return ClaimFamily::Braid;
  }
}

int claim_min_genus(Claim c) { return claim_family(c) == ClaimFamily::Braid ? 0 : 2; }

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Verified: return "verified";
    case Status::Falsified: return "falsified";
    case Status::Error: return "error";
  }
  return "error";
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << claim << " g=" << genus << ": " << status_name(status) << " (" << parameters;
  os << ", " << static_cast<long long>(elapsed_ms) << " ms)";
  if (!witness.empty()) os << "\n  witness: " << witness;
  return os.str();
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["claim"] = claim;
  j["genus"] = genus;
  j["parameters"] = parameters;
  j["status"] = status_name(status);
  if (!witness.empty()) j["witness"] = witness;
  return j.dump();
}

VerificationReport verify_claim(Claim c, int g, const VerifyOptions& opts) {
  if (g < claim_min_genus(c))
    throw std::invalid_argument(std::string(claim_name(c)) + " needs genus >= " +
                                std::to_string(claim_min_genus(c)));
  VerificationReport rep;
  rep.claim = claim_name(c);
  rep.genus = g;
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (c) {
      case Claim::McgW: verify_mcg_w(rep, g); break;
      case Claim::Chain: verify_chain(rep, g); break;
      case Claim::JAct: verify_jact(rep, g); break;
      default: verify_braid(rep, c, g, opts); break;
    }
  } catch (const std::exception& e) {
    rep.status = Status::Error;
    rep.witness = e.what();
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::vector<VerificationReport> verify_jobs(const std::vector<VerifyJob>& jobs, const VerifyOptions& opts,
                                            unsigned threads) {
  std::vector<VerificationReport> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) out[i] = verify_claim(jobs[i].claim, jobs[i].genus, opts);
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace twistkit
