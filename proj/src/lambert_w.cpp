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

#include "probit/lambert_w.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace probit {

namespace {

constexpr double kInvE = 0.36787944117144233;   /* nearest double >= 1/e */
constexpr double kOmega = 0.5671432904097838;   /* W(1) */
constexpr double kE = 2.718281828459045;
constexpr int kMaxIter = 50;

double initial_guess(double x)
{
    if (x < -0.32) {
        /* branch-point expansion in p = sqrt(2(1 + e x)) */
        double p = std::sqrt(std::fmax(2.0 * (1.0 + kE * x), 0.0));
        double w = -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)));
        return std::fmax(w, -1.0 + 1e-12);
    }
    if (x < 1.0) {
        double w = x * (1.0 + x * (-1.0 + x * (1.5 - x * (8.0 / 3.0))));
        return std::fmax(w, -1.0 + 1e-12);
    }
    if (x < kE)
        return kOmega + (x - 1.0) * (1.0 - kOmega) / (kE - 1.0);
    double l1 = std::log(x);
    double l2 = std::log(l1);
    return l1 - l2 + l2 / l1;
}

/* one Halley update for f(w) = w e^w - x */
double halley_step(double w, double x)
{
    double ew = std::exp(w);
    double f = w * ew - x;
    double w1 = w + 1.0;
    return f / (ew * w1 - (w + 2.0) * f / (2.0 * w1));
}

WResult halley_from(double w0, double x)
{
    WResult r;
    double w = w0;
    for (int k = 1; k <= kMaxIter; ++k) {
        double step = halley_step(w, x);
        w -= step;
        r.iterations = k;
        if (std::abs(step) <= 2.0 * std::abs(w) * 0x1p-52)
            break;
    }
    r.value = w;
    r.residual = w * std::exp(w) - x;
    return r;
}

/* Newton on f(w) = w + log w - L, the large-argument form of W */
WResult log_space_newton(double lx)
{
    WResult r;
    double w = std::fmax(lx - std::log(std::fmax(lx, 2.0)), 1.0);
    for (int k = 1; k <= kMaxIter; ++k) {
        double f = w + std::log(w) - lx;
        double step = f * w / (w + 1.0);
        w -= step;
        r.iterations = k;
        if (std::abs(step) <= 2.0 * std::abs(w) * 0x1p-52)
            break;
    }
    r.value = w;
    /* in this regime x = e^lx is not representable in general; report the
       residual scaled back, w e^w - x = x (e^{w + ln w - lx} - 1) */
    r.residual = std::exp(lx) * std::expm1(w + std::log(w) - lx);
    return r;
}

} /* namespace */

WResult lambert_w0(double x)
{
    if (!std::isfinite(x) || x < -kInvE - 1e-15)
        throw std::domain_error("lambert_w0: argument " + std::to_string(x) +
                                " outside [-1/e, inf)");
    if (x < -kInvE)
        x = -kInvE; /* tolerate sub-ulp undershoot of the branch point */
    if (x == 0.0)
        return {0.0, 0, 0.0};
    if (x > 1e280)
        return log_space_newton(std::log(x));
    return halley_from(initial_guess(x), x);
}

WResult lambert_w0_from_log(double log_x)
{
    if (!std::isfinite(log_x))
        throw std::domain_error("lambert_w0_from_log: non-finite argument");
    if (log_x <= 3.0)
        return lambert_w0(std::exp(log_x));
    return log_space_newton(log_x);
}

double lambert_w0_series(double x, int terms)
{
    if (terms < 1)
        throw std::invalid_argument("lambert_w0_series: terms must be >= 1, got " +
                                    std::to_string(terms));
    if (!std::isfinite(x) || std::abs(x) >= kInvE)
        throw std::domain_error("lambert_w0_series: |x| must be < 1/e, got " +
                                std::to_string(x));
    /* term_1 = x, term_{n+1} = term_n * (-x) * ((n+1)/n)^{n-1} */
    double sum = 0.0;
    double term = x;
    for (int n = 1; n <= terms; ++n) {
        sum += term;
        term *= -x * std::pow((n + 1.0) / n, n - 1);
    }
    return sum;
}

double lambert_w0_derivative(double x)
{
    if (x == 0.0)
        throw std::domain_error("lambert_w0_derivative: singular at x = 0");
    double w = lambert_w0(x).value;
    double denom = x * (1.0 + w);
    if (denom == 0.0 || !std::isfinite(1.0 / denom))
        throw std::domain_error("lambert_w0_derivative: singular at the branch point");
    return w / denom;
}

} /* namespace probit */
