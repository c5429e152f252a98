#include <doctest.h>

#include <cmath>

#include "indel/analysis.hpp"

using namespace indel;

TEST_CASE("two-deletion formulas") {
  const auto f = two_del_formulas(2, 0.02, 150);
  CHECK(f.p_run == doctest::Approx(3 * 4e-4));
  CHECK(f.p_alt == doctest::Approx(2 * 4e-4));
  CHECK(f.p_err_approx == doctest::Approx(5 * 4e-4));
  CHECK(f.p_err_approx == doctest::Approx(f.p_run + f.p_alt));
  CHECK(f.p_fail_bound == doctest::Approx(std::exp(-5 * 4e-4 * 150)));

  const auto g = two_del_formulas(4, 0.02, 150);
  CHECK(g.p_run == doctest::Approx(5.0 / 3 * 4e-4));
  CHECK(g.p_err_approx == doctest::Approx(11.0 / 3 * 4e-4));

  CHECK_THROWS_AS(two_del_formulas(1, 0.1, 10), std::domain_error);
  CHECK_THROWS_AS(two_del_formulas(2, 1.5, 10), std::domain_error);
  CHECK(two_del_formulas(2, 0.0, 10).p_err_approx == 0.0);
}

TEST_CASE("two-insertion formulas are the deletion ones over q") {
  for (unsigned q = 2; q <= 10; ++q)
    for (double p : {0.005, 0.01, 0.05}) {
      const auto d = two_del_formulas(q, p, 100), i = two_ins_formulas(q, p, 100);
      CHECK(d.p_run == doctest::Approx(q * i.p_run));
      CHECK(d.p_alt == doctest::Approx(q * i.p_alt));
      CHECK(d.p_err_approx == doctest::Approx(q * i.p_err_approx));
      CHECK(i.p_fail_bound == 0.0);
    }
  CHECK(two_ins_formulas(2, 0.02, 1).p_err_approx == doctest::Approx(1e-3));
}

TEST_CASE("formulas increase in p and decrease in q") {
  double prev = -1;
  for (int i = 0; i <= 20; ++i) {
    const double v = two_del_formulas(2, 0.005 * i, 10).p_err_approx;
    CHECK(v > prev);
    prev = v;
  }
  for (unsigned q = 2; q < 10; ++q)
    CHECK(two_del_formulas(q + 1, 0.03, 10).p_run < two_del_formulas(q, 0.03, 10).p_run);
}

TEST_CASE("coded success bounds") {
  CHECK(coded_success_bound(2, 0.0, 150, CodeKind::All) == 1.0);
  CHECK(coded_success_bound(2, 0.0, 150, CodeKind::Vt) == 1.0);
  for (double p : {0.01, 0.02, 0.03, 0.05}) {
    const double all = coded_success_bound(2, p, 150, CodeKind::All);
    const double svt = coded_success_bound(2, p, 150, CodeKind::Svt);
    const double vt = coded_success_bound(2, p, 150, CodeKind::Vt);
    CHECK(all < svt);
    CHECK(svt < vt);
    CHECK(vt <= 1.0);
    // the uncoded product is close to the exponential for small rates
    const auto f = two_del_formulas(2, p, 150);
    if (p <= 0.02) CHECK(std::abs(all / f.p_fail_bound - 1) < 0.01);
  }
}

TEST_CASE("lazy and EN single-deletion analysis") {
  const auto a = lazy_and_en_1del_analysis(10);
  CHECK(a.lazy_err == Rational(1, 10));
  const auto b = lazy_and_en_1del_analysis(3);
  // tau(3) = 2
  CHECK(b.en_lower_bound == Rational(2, 9));
  for (std::size_t n = 17; n <= 40; ++n) {
    const auto r = lazy_and_en_1del_analysis(n);
    CHECK(r.en_lower_bound > r.lazy_err);
  }
  CHECK_THROWS_AS(lazy_and_en_1del_analysis(1), std::domain_error);
}
