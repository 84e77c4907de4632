#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "twistkit/fp_group.hpp"
#include "twistkit/smith.hpp"

namespace twistkit {

/// Raised when invariant inputs are mutually inconsistent (parity, sign,
/// non-integral signature, empty monodromy).
class InvariantError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct FibrationData {
  int genus = 2;
  long nonseparating = 0;                ///< m
  std::map<int, long> separating;       ///< h -> s_h, 1 <= h <= g/2
  bool hyperelliptic = true;

  long separating_total() const;
  long total_cycles() const { return nonseparating + separating_total(); }
};

struct InvariantReport {
  int genus = 0;
  long chi = 0;
  long sigma = 0;
  long b1 = 0;
  long b2 = 0;
  long b2_plus = 0;
  long b2_minus = 0;
  std::vector<std::string> premises;

  /// chi = 2 - 2 b1 + b2, b2 = b2+ + b2-, sigma = b2+ - b2-.
  bool consistent() const;
  std::string to_json() const;
};

/// 2(2 - 2g) + total_cycles.
long euler_characteristic(int g, long total_cycles);

/// Hyperelliptic signature formula
///   sigma = -(g+1)/(2g+1) m + sum_h (4h(g-h)/(2g+1) - 1) s_h
/// evaluated in exact rationals; a non-integral value is an InvariantError.
long endo_signature(const FibrationData& d);

/// b2 = chi - 2 + 2 b1, b2+- = (b2 +- sigma) / 2.
InvariantReport betti_report(long chi, long sigma, long b1);

/// The 7 x 7 matrix whose negative is the intersection form on the span of
/// the spheres S_1..S_6 and the surface S_7 in the odd-genus total space.
IntMatrix matrix_A();

struct DefinitenessCertificate {
  bool positive_definite = false;
  std::vector<BigInt> leading_minors;
};

/// Sylvester's criterion with exact determinants. Throws std::invalid_argument
/// for non-symmetric input.
DefinitenessCertificate is_positive_definite(const IntMatrix& m);

/// Fibration data of W for even g: m = 2g+2 nonseparating cycles (counted from
/// nonzero homology classes) and two separating cycles of type g/2.
FibrationData even_relation_fibration(int g);

/// Invariants of the total space of W for even g >= 2.
InvariantReport even_genus_report(int g);

enum class StepKind { Computed, Premise };

struct DeductionStep {
  StepKind kind;
  std::string statement;
  bool holds = true;
};

struct OddDeduction {
  InvariantReport report;
  std::vector<DeductionStep> steps;
};

/// Replays the signature deduction for odd g >= 3. Computed steps are checked;
/// cited premises are recorded in report.premises. Throws InvariantError if a
/// computed step fails and std::invalid_argument for even or small g.
OddDeduction odd_g_deduction(int g);

/// H_1 of the fiber sum X_n together with its singular fiber count.
struct FiberSumReport {
  int genus = 0;
  long n = 1;
  long singular_fibers = 0;
  long chi = 0;
  AbelianGroup h1;

  std::string to_json() const;
};

FiberSumReport fiber_sum_report(int g, long n);

}  // namespace twistkit
