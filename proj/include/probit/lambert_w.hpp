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

#ifndef PROBIT_LAMBERT_W_HPP
#define PROBIT_LAMBERT_W_HPP

namespace probit {

/*
 * Principal branch W0 of the Lambert W function, W e^W = x, on [-1/e, inf).
 * Halley iteration from a regime-dependent initial guess; the iteration
 * stops when the step drops to 2 ulp or after 50 iterations.
 */

struct WResult {
    double value = 0.0;
    int iterations = 0;
    double residual = 0.0; /* value * exp(value) - x, signed */
};

/* throws std::domain_error for x below -1/e - 1e-15 or non-finite x;
   sub-ulp undershoot of the branch point clamps to -1/e.  A result whose
   iteration count saturates the 50-step cap did not meet the step
   criterion; its residual field carries the achieved defect. */
WResult lambert_w0(double x);

/* W0 for an argument given by its natural logarithm; covers arguments whose
   direct binary64 representation would overflow or underflow (log_x may be
   anything finite).  Solves w + log w = log_x for log_x > 3, otherwise
   delegates to lambert_w0(exp(log_x)). */
WResult lambert_w0_from_log(double log_x);

/* partial sum of the first `terms` terms of
       W0(x) = sum_{n>=1} (-n)^{n-1}/n! x^n,   |x| < 1/e;
   throws std::domain_error outside the open disc of convergence and
   std::invalid_argument for terms < 1 */
double lambert_w0_series(double x, int terms);

/* d/dx W0 = W0 / (x (1 + W0)); the formula is singular at x = 0 and at the
   branch point x = -1/e, both rejected with std::domain_error */
double lambert_w0_derivative(double x);

} /* namespace probit */

#endif
