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

#ifndef PROBIT_CALCULUS_HPP
#define PROBIT_CALCULUS_HPP

namespace probit {

/* First and second antiderivatives of the quantile function, in closed
   form through the forward function:
     order 1: -(1/sqrt(2 pi)) e^(-S(x)^2/2)
     order 2: -(1/(2 sqrt(pi))) N(sqrt(2) S(x))
   Requires 0 < x < 1. */
double s_antiderivative(int order, double x);

/* Closed forms for the negative-index members of the polynomial family:
     n = -1: x
     n = -2: -1
     n = -3: -sqrt(pi) e^(x^2) N(sqrt(2) x)
   For n = -3 the argument is capped at |x| <= 25 to guard e^(x^2). */
double p_negative_eval(int n, double x);

/* Residual of the derivative relation S^(n) = P_(n-1)(S) (S')^n extended
   downward, for n in {0, -1, -2}: the left side comes from the closed-form
   antiderivatives, the right side from p_negative_eval and the reference
   derivative.  Returns |lhs - rhs|. */
double negative_derivative_relation_check(int n, double x);

/* Residual |S(-2 sqrt(pi) A2(x)) - sqrt(2) S(x)| where A2 is the second
   antiderivative.  The inner argument must land in (0,1). */
double corollary_identity_check(double x);

struct MomentResult {
    int n = 0;
    double closed_form = 0.0;   /* Gaussian moment: (n-1)!! even, 0 odd */
    double quadrature = 0.0;    /* Simpson on z^n phi(z) over [-12, 12] */
    double paper_formula = 0.0; /* printed product: (n+1)!! even, 0 odd */
};

/* Moments of the quantile function over (0,1), equal to Gaussian moments
   by the substitution x = N(z).  Requires 0 <= n <= 20. */
MomentResult moment(int n);

struct GenFuncCheck {
    double partial = 0.0;   /* sum of P_k(x) t^k / k! for k = 0..k_max */
    double reference = 0.0; /* exp(S(N(x) + t phi(x))^2/2 - x^2/2) */
};

/* Exponential generating function of the polynomial family versus its
   closed form.  Requires |x| <= 2, |t| <= 0.5, k_max >= 1, and the inner
   argument N(x) + t phi(x) inside (0,1). */
GenFuncCheck generating_function_check(double x, double t, int k_max);

} /* namespace probit */

#endif
