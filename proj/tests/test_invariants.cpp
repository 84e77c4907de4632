#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twistkit/invariants.hpp"

using namespace twistkit;

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic(2, 8) == 4);
  CHECK(euler_characteristic(4, 12) == 0);
  CHECK(euler_characteristic(3, 16) == 8);
  CHECK_THROWS(euler_characteristic(2, -1));
}

TEST_CASE("signature formula") {
  CHECK(endo_signature({2, 6, {{1, 2}}, true}) == -4);
  CHECK(endo_signature({4, 10, {{2, 2}}, true}) == -4);
  // 7 nonseparating and 1 separating cycle give -22/5.
  CHECK_THROWS_AS(endo_signature({2, 7, {{1, 1}}, true}), InvariantError);
  CHECK_THROWS_AS(endo_signature({2, 0, {}, true}), InvariantError);
  CHECK_THROWS_AS(endo_signature({2, 6, {{1, 2}}, false}), InvariantError);
  CHECK_THROWS_AS(endo_signature({2, 6, {{2, 2}}, true}), std::invalid_argument);
  // Lefschetz pencil on CP^2 blown up: g = 1, m = 12 gives sigma = -8.
  CHECK(endo_signature({1, 12, {}, true}) == -8);
}

TEST_CASE("betti report") {
  const InvariantReport a = betti_report(4, -4, 2);
  CHECK(a.b2 == 6);
  CHECK(a.b2_plus == 1);
  CHECK(a.b2_minus == 5);
  CHECK(a.consistent());
  const InvariantReport b = betti_report(8, -8, 2);
  CHECK(b.b2 == 10);
  CHECK(b.b2_plus == 1);
  CHECK(b.b2_minus == 9);
  const InvariantReport c = betti_report(2, 0, 0);
  CHECK(c.b2 == 0);
  CHECK(c.b2_plus == 0);
  CHECK(c.b2_minus == 0);
  CHECK_THROWS_AS(betti_report(4, -3, 2), InvariantError);
  CHECK_THROWS_AS(betti_report(4, -8, 2), InvariantError);
  CHECK_THROWS_AS(betti_report(0, 0, 0), InvariantError);
}

TEST_CASE("matrix A") {
  const IntMatrix a = matrix_A();
  CHECK(a(0, 0) == 2);
  CHECK(a(0, 6) == 1);
  CHECK(a(3, 6) == 1);
  CHECK(a.is_symmetric());
  BigInt trace = 0;
  for (std::size_t i = 0; i < 7; ++i) trace += a(i, i);
  CHECK(trace == 14);
  const auto cert = is_positive_definite(a);
  CHECK(cert.positive_definite);
  CHECK(cert.leading_minors.size() == 7);
}

TEST_CASE("positive definiteness") {
  const auto id = is_positive_definite(IntMatrix::identity(3));
  CHECK(id.positive_definite);
  CHECK(id.leading_minors == std::vector<BigInt>{1, 1, 1});
  CHECK_FALSE(is_positive_definite(IntMatrix{{0}}).positive_definite);
  CHECK_FALSE(is_positive_definite(IntMatrix{{1, 2}, {2, 1}}).positive_definite);
  CHECK_THROWS_AS(is_positive_definite(IntMatrix{{1, 2}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("even genus reports") {
  for (int g = 2; g <= 8; g += 2) {
    const FibrationData d = even_relation_fibration(g);
    CHECK(d.nonseparating == 2 * g + 2);
    CHECK(d.separating.at(g / 2) == 2);
    const InvariantReport r = even_genus_report(g);
    CHECK(r.chi == 8 - 2 * g);
    CHECK(r.sigma == -4);
    CHECK(r.b1 == g);
    CHECK(r.b2_plus == 1);
    CHECK(r.consistent());
    CHECK(r.premises.size() == 2);
  }
  CHECK_THROWS(even_genus_report(3));
}

TEST_CASE("odd genus deduction") {
  const OddDeduction d3 = odd_g_deduction(3);
  CHECK(d3.report.chi == 8);
  CHECK(d3.report.sigma == -8);
  CHECK(d3.report.b1 == 2);
  CHECK(d3.report.b2 == 10);
  CHECK(d3.report.b2_plus == 1);
  CHECK(d3.report.b2_minus == 9);
  CHECK(d3.report.premises.size() == 2);

  const OddDeduction d5 = odd_g_deduction(5);
  CHECK(d5.report.chi == 4);
  CHECK(d5.report.sigma == -8);
  CHECK(d5.report.b1 == 4);
  CHECK(d5.report.b2 == 10);

  int premises = 0;
  for (const auto& s : d5.steps) {
    CHECK(s.holds);
    premises += s.kind == StepKind::Premise;
  }
  CHECK(premises == 2);
  CHECK_THROWS_AS(odd_g_deduction(4), std::invalid_argument);
}

TEST_CASE("json") {
  const std::string j = even_genus_report(2).to_json();
  CHECK(j.rfind(R"({"genus":2,"chi":4,"sigma":-4,"b1":2,"b2":6,"b2plus":1,"b2minus":5,"premises":[)", 0) == 0);
  CHECK(fiber_sum_report(2, 5).to_json() ==
        R"({"genus":2,"n":5,"singular_fibers":16,"chi":12,"h1":{"free_rank":1,"torsion":[5]}})");
}
