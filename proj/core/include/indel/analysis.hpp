#pragma once

#include <cstddef>

#include "indel/exact.hpp"
#include "indel/vt_codes.hpp"

namespace indel {

/// Second-order approximations of the two-trace ML^D error rate.
struct TwoChannelFormulas {
  unsigned q = 2;
  double p = 0.0;
  std::size_t n = 0;
  double p_run = 0.0;
  double p_alt = 0.0;
  double p_err_approx = 0.0;  ///< p_run + p_alt
  double p_fail_bound = 0.0;  ///< deletion case only; 0 for insertions
};

/// Throws std::domain_error if q < 2 or p is outside [0, 1].
TwoChannelFormulas two_del_formulas(unsigned q, double p, std::size_t n);
TwoChannelFormulas two_ins_formulas(unsigned q, double p, std::size_t n);

/// Lower bound on the probability that the two-trace decoder returns the
/// transmitted VT / SVT codeword, in terms of the deletion-case p_run and
/// p_alt. CodeKind::All gives the uncoded product (1-P_run)^n (1-P_alt)^n.
double coded_success_bound(unsigned q, double p, std::size_t n, CodeKind code);

struct OneDelAnalysis {
  Rational lazy_err;        ///< 1/n
  Rational en_lower_bound;  ///< (2/n)(1 - tau/n)
};

/// Throws std::domain_error for n < 2.
OneDelAnalysis lazy_and_en_1del_analysis(std::size_t n);

}  // namespace indel
