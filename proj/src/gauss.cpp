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

#include "probit/gauss.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "probit/approx.hpp"
#include "probit/int_polynomial.hpp"

namespace probit {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kSqrt2Pi = 2.5066282746310002;
constexpr double kInvSqrtPi = 0.5641895835477563;
constexpr double kInvSqrt2Pi = 0.3989422804014327;

/* erf(y) for |y| < 1 from the cancellation-free form
       erf(y) = 2/sqrt(pi) * y * e^{-y^2} * sum_n (2 y^2)^n / (2n+1)!! */
double erf_series(double y)
{
    double y2 = y * y;
    double term = 1.0;
    double sum = 1.0;
    for (int n = 0; n < 80; ++n) {
        term *= 2.0 * y2 / (2 * n + 3);
        sum += term;
        if (term < 0x1p-54 * sum)
            break;
    }
    return 2.0 * kInvSqrtPi * y * std::exp(-y2) * sum;
}

/* erfc(y) for y >= 1 by the modified Lentz continued fraction
       erfc(y) = e^{-y^2}/sqrt(pi) / (y + (1/2)/(y + 1/(y + (3/2)/(y + ...)))),
   with the exponential factor supplied by the caller so tail users can
   compensate the squaring of the original argument */
double erfc_cf(double y, double exp_factor)
{
    constexpr double tiny = 1e-300;
    double f = y;
    double c = y;
    double d = 0.0;
    for (int k = 1; k <= 400; ++k) {
        double a = 0.5 * k;
        d = y + a * d;
        if (d == 0.0)
            d = tiny;
        c = y + a / c;
        if (c == 0.0)
            c = tiny;
        d = 1.0 / d;
        double delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < 0x1p-54)
            break;
    }
    return exp_factor * kInvSqrtPi / f;
}

/* exp(-t) where t = hi + lo splits x^2 (or x^2/2) exactly via fma */
double exp_compensated(double hi, double lo)
{
    return std::exp(-hi) * (1.0 - lo);
}

/* 0.5 * erfc(x / sqrt 2) for x <= 0, the relative-accurate tail side */
double cdf_lower(double x)
{
    double y = -x / kSqrt2;
    if (y < 1.0)
        return 0.5 * (1.0 - erf_series(y));
    return 0.5 * erfc_cf(y, detail::exp_neg_half_sq(x));
}

} /* namespace */

namespace detail {

double exp_neg_half_sq(double x)
{
    double hi = x * x;
    double lo = std::fma(x, x, -hi);
    return exp_compensated(0.5 * hi, 0.5 * lo);
}

double exp_half_sq(double x)
{
    double hi = x * x;
    double lo = std::fma(x, x, -hi);
    return std::exp(0.5 * hi) * (1.0 + 0.5 * lo);
}

} /* namespace detail */

double erf(double x)
{
    if (std::isnan(x))
        return x;
    double a = std::abs(x);
    double v;
    if (a < 1.0)
        v = erf_series(a);
    else {
        double hi = a * a;
        double lo = std::fma(a, a, -hi);
        v = 1.0 - erfc_cf(a, exp_compensated(hi, lo));
    }
    return std::copysign(v, x);
}

double erfc(double x)
{
    if (std::isnan(x))
        return x;
    if (x < 0.0)
        return 2.0 - erfc(-x);
    if (x < 1.0)
        return 1.0 - erf_series(x);
    double hi = x * x;
    double lo = std::fma(x, x, -hi);
    return erfc_cf(x, exp_compensated(hi, lo));
}

double normal_pdf(double x)
{
    return kInvSqrt2Pi * detail::exp_neg_half_sq(x);
}

double normal_cdf(double x)
{
    if (std::isnan(x))
        return x;
    if (x <= 0.0)
        return cdf_lower(x);
    return 1.0 - cdf_lower(-x);
}

ProbitResult probit_reference(double p)
{
    if (!(p > 0.0) || !(p < 1.0))
        throw std::domain_error("probit_reference: p must lie strictly in (0,1), got " +
                                std::to_string(p));
    if (p == 0.5)
        return {0.0, 0.0, 0};

    /* solve on the lower tail; 1-p is exact for p > 1/2 */
    const bool mirrored = p > 0.5;
    const double q = mirrored ? 1.0 - p : p;

    double s = approx_eval(ApproxKind::g2, q);
    /* the Lambert-W seed is never off by more than ~0.12 */
    double lo = s - 0.25;
    double hi = std::fmin(s + 0.25, 0.0);
    while (normal_cdf(lo) > q)
        lo -= 0.5;
    while (normal_cdf(hi) < q)
        hi += 0.5;

    /* Iterate to the fixed point in s rather than to a residual tolerance:
       an early p-space stop would leave deep-tail values short of full
       precision (a residual of 1e-16 at p = 1e-10 still allows ~3e-7 of
       slack in s).  Newton either lands on itself, enters a two-cycle
       between neighboring doubles, or the bisection safeguard exhausts the
       bracket; the best iterate seen is returned. */
    ProbitResult r;
    double prev = std::numeric_limits<double>::quiet_NaN();
    double best = s;
    double best_f = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= 100; ++k) {
        double f = normal_cdf(s) - q;
        r.iterations = k;
        if (std::abs(f) < best_f) {
            best_f = std::abs(f);
            best = s;
        }
        if (f == 0.0)
            break;
        if (f > 0.0)
            hi = s;
        else
            lo = s;
        double cand = s - f / normal_pdf(s);
        if (!(cand > lo) || !(cand < hi))
            cand = 0.5 * (lo + hi);
        if (cand == s || cand == prev)
            break;
        prev = s;
        s = cand;
    }

    r.value = mirrored ? -best : best;
    r.residual = normal_cdf(r.value) - p;
    return r;
}

double s_derivative_n(double p, int n)
{
    if (n < 0)
        throw std::invalid_argument("s_derivative_n: n must be >= 0, got " +
                                    std::to_string(n));
    const double s = probit_reference(p).value;
    if (n == 0)
        return s;
    const double sprime = kSqrt2Pi * detail::exp_half_sq(s);
    if (n == 1)
        return sprime;
    const IntPolynomial pn = poly_sequence(n - 1).back();
    return poly_eval(pn, s) * std::pow(sprime, n);
}

} /* namespace probit */
