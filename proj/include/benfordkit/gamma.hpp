// gamma.hpp - regularized incomplete gamma functions and the chi-squared tail.
#pragma once

namespace benfordkit {

/// P(a, x) = gamma(a, x) / Gamma(a), the regularized lower incomplete gamma function.
double regularized_gamma_p(double a, double x);
/// Q(a, x) = 1 - P(a, x), evaluated directly so tails keep full relative precision.
double regularized_gamma_q(double a, double x);

/// Upper-tail probability of the chi-squared distribution: Pr[X > x], X ~ chi2(df).
double chi_square_survival(double x, int df);

}  // namespace benfordkit
