// twistkit command-line front end: verify, invariants, word.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "twistkit/artin.hpp"
#include "twistkit/braid.hpp"
#include "twistkit/fp_group.hpp"
#include "twistkit/homology.hpp"
#include "twistkit/invariants.hpp"
#include "twistkit/verify.hpp"
#include "twistkit/word.hpp"

namespace {

using namespace twistkit;

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<int> env_genus_cap() {
  const char* v = std::getenv("TWISTKIT_MAX_GENUS");
  if (v == nullptr || *v == '\0') return std::nullopt;
  try {
    std::size_t pos = 0;
    const int cap = std::stoi(v, &pos);
    if (pos != std::string(v).size()) throw std::invalid_argument(v);
    return cap;
  } catch (const std::exception&) {
    throw UsageError(std::string("TWISTKIT_MAX_GENUS is not an integer: ") + v);
  }
}

// --max-genus beats TWISTKIT_MAX_GENUS beats the per-family default.
int genus_cap(std::optional<int> flag, int fallback) {
  if (flag) return *flag;
  if (auto env = env_genus_cap()) return *env;
  return fallback;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("genus range must look like a..b, got '" + text + "'");
  try {
    std::size_t p1 = 0, p2 = 0;
    const std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
    const int a = std::stoi(lo, &p1);
    const int b = std::stoi(hi, &p2);
    if (p1 != lo.size() || p2 != hi.size()) throw std::invalid_argument(text);
    if (a > b) throw UsageError("empty genus range " + text);
    return {a, b};
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("genus range must look like a..b, got '" + text + "'");
  }
}

struct VerifyArgs {
  std::vector<std::string> claims;
  std::optional<int> genus;
  std::string range;
  std::optional<int> max_genus;
  bool json = false;
  unsigned threads = 0;
};

int run_verify(const VerifyArgs& args) {
  int lo = 0, hi = 0;
  if (args.genus) {
    lo = hi = *args.genus;
  } else if (!args.range.empty()) {
    std::tie(lo, hi) = parse_range(args.range);
  } else {
    throw UsageError("verify needs --genus or --genus-range");
  }

  std::vector<VerifyJob> jobs;
  for (const auto& name : args.claims) {
    const auto claim = parse_claim(name);
    if (!claim) throw UsageError("unknown claim '" + name + "'");
    const int floor = claim_min_genus(*claim);
    const int cap = genus_cap(args.max_genus, claim_family(*claim) == ClaimFamily::Braid ? kOracleGenusCap
                                                                                          : kSymplecticGenusCap);
    if (lo < floor) throw UsageError(name + " needs genus >= " + std::to_string(floor));
    if (hi > cap)
      throw UsageError(name + " is capped at genus " + std::to_string(cap) + "; raise it with --max-genus");
    for (int g = lo; g <= hi; ++g) jobs.push_back({*claim, g});
  }

  const unsigned threads = args.threads ? args.threads : std::max(1u, std::thread::hardware_concurrency());
  const auto reports = verify_jobs(jobs, VerifyOptions{}, threads);

  // An error status (for example an image-ceiling overflow) fails the run like a falsification.
  bool all_verified = true;
  for (const auto& r : reports) {
    std::cout << (args.json ? r.to_json() : r.to_text()) << '\n';
    all_verified = all_verified && r.status == Status::Verified;
  }
  return all_verified ? kExitOk : kExitFalsified;
}

struct InvariantsArgs {
  int genus = 0;
  std::optional<long> n;
  bool json = false;
  std::optional<int> max_genus;
};

int run_invariants(const InvariantsArgs& args) {
  const int g = args.genus;
  if (g < 2) throw UsageError("invariants needs --genus >= 2");
  const int cap = genus_cap(args.max_genus, kInvariantsGenusCap);
  if (g > cap) throw UsageError("invariants is capped at genus " + std::to_string(cap));

  if (args.n) {
    if (*args.n < 1) throw UsageError("--n must be >= 1");
    const FiberSumReport r = fiber_sum_report(g, *args.n);
    if (args.json) {
      std::cout << r.to_json() << '\n';
    } else {
      std::cout << "X_" << r.n << " (genus " << g << ")\n"
                << "  singular fibers: " << r.singular_fibers << '\n'
                << "  chi:             " << r.chi << '\n'
                << "  H_1:             " << r.h1.to_string() << '\n';
    }
    return kExitOk;
  }

  InvariantReport report;
  std::vector<DeductionStep> steps;
  if (g % 2 == 0) {
    report = even_genus_report(g);
  } else {
    OddDeduction d = odd_g_deduction(g);
    report = std::move(d.report);
    steps = std::move(d.steps);
  }
  if (args.json) {
    std::cout << report.to_json() << '\n';
    return kExitOk;
  }
  std::cout << "X (genus " << g << ")\n"
            << "  chi = " << report.chi << ", sigma = " << report.sigma << ", b1 = " << report.b1
            << ", b2 = " << report.b2 << ", b2+ = " << report.b2_plus << ", b2- = " << report.b2_minus << '\n';
  if (!steps.empty()) {
    std::cout << "deduction:\n";
    for (const auto& s : steps)
      std::cout << "  [" << (s.kind == StepKind::Computed ? "computed" : "premise ") << "] " << s.statement << '\n';
  }
  std::cout << "premises:\n";
  for (const auto& p : report.premises) std::cout << "  - " << p << '\n';
  return kExitOk;
}

struct WordArgs {
  std::string expr;
  std::string file;
  std::string action = "reduce";
  std::optional<int> strands;
  std::optional<int> genus;
};

int run_word(const WordArgs& args, bool expr_given) {
  std::string text = args.expr;
  if (!expr_given) {
    std::ifstream in(args.file);
    if (!in) throw UsageError("cannot read " + args.file);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
    for (char& ch : text)
      if (ch == '\n' || ch == '\r' || ch == '\t') ch = ' ';
  }
  Word w;
  try {
    w = parse_word(text);
  } catch (const WordParseError& e) {
    std::cerr << "parse error at position " << e.position() << ": " << e.what() << '\n';
    std::cerr << "  " << text << "\n  " << std::string(e.position(), ' ') << "^\n";
    return kExitUsage;
  }

  if (args.action == "reduce") {
    std::cout << (w.empty() ? std::string("identity") : format_word(w)) << '\n';
    return kExitOk;
  }

  if (args.action == "symplectic") {
    if (!args.genus) throw UsageError("--action symplectic needs --genus");
    const int g = *args.genus;
    if (g < 1) throw UsageError("--genus must be >= 1");
    const int n = strands_for_genus(g);
    if (w.max_index() >= n) throw UsageError("word uses s" + std::to_string(w.max_index()) + " but genus " +
                                             std::to_string(g) + " has only " + std::to_string(n) + " strands");
    std::cout << evaluate_chain_word(BraidWord(n, w), g).to_string() << '\n';
    return kExitOk;
  }

  const int n = args.strands.value_or(std::max(2, w.max_index() + 1));
  if (n < 2) throw UsageError("--strands must be >= 2");
  if (w.max_index() >= n)
    throw UsageError("word uses s" + std::to_string(w.max_index()) + " but only " + std::to_string(n) +
                     " strands were given");
  const BraidWord b(n, w);

  if (args.action == "permutation") {
    std::cout << to_permutation(b).cycles() << '\n';
    return kExitOk;
  }
  if (args.action == "artin") {
    const FreeAuto f = evaluate(b);
    if (f.is_identity()) {
      std::cout << "identity\n";
      return kExitOk;
    }
    for (int j = 1; j <= f.rank(); ++j) {
      const std::string img = format_word(f.image(j), "x");
      std::cout << "x" << j << " -> " << (img.empty() ? "1" : img) << '\n';
    }
    return kExitOk;
  }
  throw UsageError("unknown action '" + args.action + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twistkit: braid, mapping class and Lefschetz fibration checks"};
  app.require_subcommand(1);

  VerifyArgs vargs;
  auto* verify = app.add_subcommand("verify", "verify claims over a genus or genus range");
  verify->add_option("claims", vargs.claims, "L1a L1b L1c L1d L2a L2b L3 T3 MCG-W CHAIN JACT")->required();
  auto* genus_opt = verify->add_option("--genus", vargs.genus, "single genus");
  auto* range_opt = verify->add_option("--genus-range", vargs.range, "inclusive range a..b");
  genus_opt->excludes(range_opt);
  verify->add_option("--max-genus", vargs.max_genus, "override the genus cap");
  verify->add_option("--threads", vargs.threads, "worker threads (default: hardware)");
  verify->add_flag("--json", vargs.json, "one JSON object per line");

  InvariantsArgs iargs;
  auto* inv = app.add_subcommand("invariants", "invariants of X, or H_1 of X_n with --n");
  inv->add_option("--genus", iargs.genus, "fiber genus (>= 2)")->required();
  inv->add_option("--n", iargs.n, "fiber-sum parameter n >= 1");
  inv->add_option("--max-genus", iargs.max_genus, "override the genus cap");
  inv->add_flag("--json", iargs.json, "emit JSON");

  WordArgs wargs;
  auto* word = app.add_subcommand("word", "inspect a braid word");
  auto* expr_opt = word->add_option("--expr", wargs.expr, "word such as \"s1 s2^-1\"");
  auto* file_opt = word->add_option("--parse", wargs.file, "read the word from a file");
  expr_opt->excludes(file_opt);
  word->add_option("--action", wargs.action, "reduce | permutation | artin | symplectic")
      ->check(CLI::IsMember({"reduce", "permutation", "artin", "symplectic"}));
  word->add_option("--strands", wargs.strands, "number of strands");
  word->add_option("--genus", wargs.genus, "genus for --action symplectic");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) return run_verify(vargs);
    if (*inv) return run_invariants(iargs);
    if (*word) {
      if (expr_opt->count() == 0 && file_opt->count() == 0) throw UsageError("word needs --expr or --parse");
      return run_word(wargs, expr_opt->count() > 0);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFalsified;
  }
  return kExitUsage;
}
