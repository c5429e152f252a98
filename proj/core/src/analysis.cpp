#include "indel/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "indel/combinatorics.hpp"

namespace indel {

namespace {

void check(unsigned q, double p) {
  if (q < 2) throw std::domain_error("alphabet size must be at least 2");
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("probability must lie in [0, 1]");
}

}  // namespace

TwoChannelFormulas two_del_formulas(unsigned q, double p, std::size_t n) {
  check(q, p);
  const double qd = q, p2 = p * p;
  TwoChannelFormulas f{q, p, n};
  f.p_run = (qd + 1) / (qd - 1) * p2;
  f.p_alt = 2 * p2;
  f.p_err_approx = (3 * qd - 1) / (qd - 1) * p2;
  f.p_fail_bound = std::exp(-f.p_err_approx * double(n));
  return f;
}

TwoChannelFormulas two_ins_formulas(unsigned q, double p, std::size_t n) {
  check(q, p);
  const double qd = q, p2 = p * p;
  TwoChannelFormulas f{q, p, n};
  f.p_run = (qd + 1) / (qd * (qd - 1)) * p2;
  f.p_alt = 2 / qd * p2;
  f.p_err_approx = (3 * qd - 1) / (qd * (qd - 1)) * p2;
  return f;
}

double coded_success_bound(unsigned q, double p, std::size_t n, CodeKind code) {
  const TwoChannelFormulas f = two_del_formulas(q, p, n);
  const double nd = double(n);
  const double run_ok = std::pow(1 - f.p_run, nd), alt_ok = std::pow(1 - f.p_alt, nd);
  const double clean = run_ok * alt_ok;
  if (code == CodeKind::All) return clean;
  const double one_alt = run_ok * nd * f.p_alt * std::pow(1 - f.p_alt, nd - 1);
  if (code == CodeKind::Svt) return clean + one_alt;
  const double one_run = nd * f.p_run * std::pow(1 - f.p_run, nd - 1) * alt_ok;
  return clean + one_alt + one_run;
}

OneDelAnalysis lazy_and_en_1del_analysis(std::size_t n) {
  if (n < 2) throw std::domain_error("lazy_and_en_1del_analysis: n must be at least 2");
  const Rational nn(static_cast<long long>(n));
  const Rational tau = tau_of_space(n);
  return {Rational(1) / nn, Rational(2) / nn * (Rational(1) - tau / nn)};
}

}  // namespace indel
