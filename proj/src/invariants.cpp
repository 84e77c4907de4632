#include "twistkit/invariants.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace twistkit {

using Rational = boost::multiprecision::cpp_rational;

long FibrationData::separating_total() const {
  long s = 0;
  for (const auto& [h, count] : separating) s += count;
  return s;
}

bool InvariantReport::consistent() const {
  return chi == 2 - 2 * b1 + b2 && b2 == b2_plus + b2_minus && sigma == b2_plus - b2_minus;
}

std::string InvariantReport::to_json() const {
  nlohmann::ordered_json j;
  j["genus"] = genus;
  j["chi"] = chi;
  j["sigma"] = sigma;
  j["b1"] = b1;
  j["b2"] = b2;
  j["b2plus"] = b2_plus;
  j["b2minus"] = b2_minus;
  j["premises"] = premises;
  return j.dump();
}

long euler_characteristic(int g, long total_cycles) {
  if (total_cycles < 0) throw std::invalid_argument("cycle count must be >= 0");
  return 2L * (2 - 2L * g) + total_cycles;
}

long endo_signature(const FibrationData& d) {
  if (!d.hyperelliptic) throw InvariantError("the signature formula needs a hyperelliptic fibration");
  const int g = d.genus;
  if (g < 1) throw std::invalid_argument("genus must be >= 1");
  if (d.nonseparating < 0) throw std::invalid_argument("m must be >= 0");
  for (const auto& [h, s] : d.separating) {
    if (h < 1 || h > g / 2) throw std::invalid_argument("separating type h must be in 1..g/2");
    if (s < 0) throw std::invalid_argument("s_h must be >= 0");
  }
  if (d.total_cycles() < 1) throw InvariantError("monodromy has no vanishing cycles");

  const Rational denom(2 * g + 1);
  Rational sigma = -Rational(g + 1) / denom * d.nonseparating;
  for (const auto& [h, s] : d.separating)
    sigma += (Rational(4L * h * (g - h)) / denom - 1) * s;
  if (denominator(sigma) != 1)
    throw InvariantError("signature formula gives a non-integral value " + sigma.str());
  return static_cast<long>(numerator(sigma));
}

InvariantReport betti_report(long chi, long sigma, long b1) {
  InvariantReport r;
  r.chi = chi;
  r.sigma = sigma;
  r.b1 = b1;
  if (b1 < 0) throw InvariantError("b1 must be >= 0");
  r.b2 = chi - 2 + 2 * b1;
  if (r.b2 < 0) throw InvariantError("derived b2 = " + std::to_string(r.b2) + " is negative");
  if ((r.b2 + sigma) % 2 != 0) throw InvariantError("b2 and sigma have different parity");
  r.b2_plus = (r.b2 + sigma) / 2;
  r.b2_minus = (r.b2 - sigma) / 2;
  if (r.b2_plus < 0 || r.b2_minus < 0) throw InvariantError("|sigma| exceeds b2");
  return r;
}

IntMatrix matrix_A() {
  return IntMatrix{{2, 1, 0, 0, 0, 0, 1},  //
                   {1, 2, 1, 0, 0, 0, 0},  //
                   {0, 1, 2, 0, 0, 0, 0},  //
                   {0, 0, 0, 2, 1, 0, 1},  //
                   {0, 0, 0, 1, 2, 1, 0},  //
                   {0, 0, 0, 0, 1, 2, 0},  //
                   {1, 0, 0, 1, 0, 0, 2}};
}

DefinitenessCertificate is_positive_definite(const IntMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("definiteness test needs a symmetric matrix");
  DefinitenessCertificate cert;
  cert.positive_definite = m.rows() > 0;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    IntMatrix lead(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead(i, j) = m(i, j);
    cert.leading_minors.push_back(determinant(lead));
    if (cert.leading_minors.back() <= 0) cert.positive_definite = false;
  }
  return cert;
}

FibrationData even_relation_fibration(int g) {
  if (g < 2 || g % 2 != 0) throw std::invalid_argument("even_relation_fibration needs even g >= 2");
  FibrationData d;
  d.genus = g;
  long zero = 0;
  for (const auto& c : vanishing_cycle_classes(g, Monodromy::w())) {
    if (c.is_zero())
      ++zero;
    else
      ++d.nonseparating;
  }
  // Null-homologous vanishing cycles are the two copies of c; their type is g/2.
  if (zero > 0) d.separating[g / 2] = zero;
  d.hyperelliptic = true;
  return d;
}

InvariantReport even_genus_report(int g) {
  const FibrationData d = even_relation_fibration(g);
  const AbelianGroup h1 = abelianization(vanishing_cycle_classes(g, Monodromy::w()));
  if (!h1.torsion.empty()) throw InvariantError("H_1(X) has torsion " + h1.to_string());
  const long chi = euler_characteristic(g, d.total_cycles());
  const long sigma = endo_signature(d);
  InvariantReport r = betti_report(chi, sigma, static_cast<long>(h1.free_rank));
  r.genus = g;
  r.premises = {
      "fibration is hyperelliptic: every vanishing cycle of W is invariant under the involution J",
      "both separating vanishing cycles bound a genus g/2 subsurface on each side (s_{g/2} = 2)",
  };
  return r;
}

OddDeduction odd_g_deduction(int g) {
  if (g < 3 || g % 2 == 0) throw std::invalid_argument("odd_g_deduction needs odd g >= 3");
  OddDeduction out;
  auto computed = [&](std::string s, bool ok) {
    out.steps.push_back({StepKind::Computed, std::move(s), ok});
    if (!ok) throw InvariantError("deduction step failed: " + out.steps.back().statement);
  };
  auto premise = [&](std::string s) {
    out.steps.push_back({StepKind::Premise, s, true});
    out.report.premises.push_back(std::move(s));
  };

  const long cycles = relation_word(g).twist_count();
  computed("W has 2g+10 = " + std::to_string(2 * g + 10) + " vanishing cycles", cycles == 2L * g + 10);

  const long chi = euler_characteristic(g, cycles);
  computed("chi = 2(2-2g) + 2g+10 = 14-2g = " + std::to_string(chi), chi == 14 - 2L * g);

  const AbelianGroup h1 = abelianization(vanishing_cycle_classes(g, Monodromy::w()));
  const long b1 = static_cast<long>(h1.free_rank);
  computed("H_1(X) = " + h1.to_string() + " = Z^{g-1}", h1.torsion.empty() && b1 == g - 1);

  const long b2 = chi - 2 + 2 * b1;
  computed("b2 = chi - 2 + 2 b1 = " + std::to_string(b2), b2 == 10);

  premise("X is symplectic, so 1 - b1 + b2+ is even and b2+ >= 1");
  std::vector<long> candidates;
  for (long p = 1; p <= b2; ++p)
    if ((1 - b1 + p) % 2 == 0) candidates.push_back(p);
  const bool all_odd = !candidates.empty() &&
                       std::all_of(candidates.begin(), candidates.end(), [&](long p) { return p % 2 == 1 && (b2 - p) % 2 == 1; });
  computed("b2+ and b2- are odd and lie in 1..9", all_odd && candidates.front() == 1 && candidates.back() == 9);

  const DefinitenessCertificate cert = is_positive_definite(matrix_A());
  std::ostringstream minors;
  for (std::size_t i = 0; i < cert.leading_minors.size(); ++i) minors << (i ? "," : "") << cert.leading_minors[i];
  computed("matrix A is positive definite (leading minors " + minors.str() +
               "), so the form is negative definite on the 7-dimensional span V",
           cert.positive_definite);

  premise("there is a class [S_8] in the orthogonal complement of V with [S_8]^2 < 0");
  const long b2_minus_floor = 8;

  std::vector<long> remaining;
  for (long p : candidates)
    if (b2 - p >= b2_minus_floor) remaining.push_back(p);
  computed("b2- >= 8 and odd leaves only b2- = 9", remaining.size() == 1 && b2 - remaining.front() == 9);

  const long b2_plus = remaining.front();
  InvariantReport r = betti_report(chi, b2_plus - (b2 - b2_plus), b1);
  r.genus = g;
  r.premises = std::move(out.report.premises);
  out.report = std::move(r);
  computed("sigma = b2+ - b2- = " + std::to_string(out.report.sigma), out.report.sigma == -8 && out.report.consistent());
  return out;
}

std::string FiberSumReport::to_json() const {
  nlohmann::ordered_json j;
  j["genus"] = genus;
  j["n"] = n;
  j["singular_fibers"] = singular_fibers;
  j["chi"] = chi;
  nlohmann::ordered_json t = nlohmann::ordered_json::array();
  for (const auto& d : h1.torsion) t.push_back(static_cast<long long>(d));
  j["h1"] = {{"free_rank", h1.free_rank}, {"torsion", t}};
  return j.dump();
}

FiberSumReport fiber_sum_report(int g, long n) {
  FiberSumReport r;
  r.genus = g;
  r.n = n;
  const auto classes = vanishing_cycle_classes(g, Monodromy::wn(n));
  r.singular_fibers = static_cast<long>(classes.size());
  r.chi = euler_characteristic(g, r.singular_fibers);
  r.h1 = abelianization(classes);
  return r;
}

}  // namespace twistkit
