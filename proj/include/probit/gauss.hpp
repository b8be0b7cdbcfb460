/*
   Copyright 2026 The probit authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PROBIT_GAUSS_HPP
#define PROBIT_GAUSS_HPP

namespace probit {

/*
 * Standard normal density, CDF and the reference inverse CDF.  Nothing here
 * leans on libm's erf: the error function is built from the positive-term
 * central series and a Lentz continued fraction for the complement, so the
 * CDF keeps ~1e-15 relative accuracy on the small of N, 1-N through the far
 * tail.  The inverse is a bracketed Newton iteration and serves as the
 * in-house oracle for every approximation in this library.
 */

/* central series for |x| < 1, continued fraction beyond */
double erf(double x);
double erfc(double x);

double normal_pdf(double x);
double normal_cdf(double x);

namespace detail {

/* exp(-x^2/2) with fma-compensated squaring, so the relative error stays a
   few ulp instead of growing like x^2 * eps */
double exp_neg_half_sq(double x);
double exp_half_sq(double x);

} /* namespace detail */

struct ProbitResult {
    double value = 0.0;
    double residual = 0.0; /* normal_cdf(value) - p, signed */
    int iterations = 0;
};

/* inverse CDF S(p); bracketed Newton with the analytic derivative, seeded by
   the Lambert-W endpoint approximation, at most 100 iterations.  The solver
   always works on q = min(p, 1-p) and mirrors the sign, so the exact tail
   survives for p > 1/2 where 1-p is exact.  Throws std::domain_error unless
   0 < p < 1. */
ProbitResult probit_reference(double p);

/* n-th derivative of S at p: S' = sqrt(2 pi) exp(S^2/2) and
       S^(n) = P_{n-1}(S) * (S')^n,  n >= 2,
   with the exact generator polynomials; n = 0 returns S itself.  Overflow
   to +-infinity near the endpoints is permitted.  Throws std::domain_error
   unless 0 < p < 1, std::invalid_argument for n < 0. */
double s_derivative_n(double p, int n);

} /* namespace probit */

#endif
