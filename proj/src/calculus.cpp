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

#include "probit/calculus.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "probit/gauss.hpp"
#include "probit/int_polynomial.hpp"

namespace probit {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kSqrtPi = 1.7724538509055160;
constexpr double kOneOverTwoSqrtPi = 0.28209479177387814;

void require_interior(double x, const char* what)
{
    if (!(x > 0.0) || !(x < 1.0))
        throw std::domain_error(std::string(what) + ": x must lie strictly in (0,1), got " +
                                std::to_string(x));
}

} /* namespace */

double s_antiderivative(int order, double x)
{
    require_interior(x, "s_antiderivative");
    double s = probit_reference(x).value;
    switch (order) {
    case 1:
        return -normal_pdf(s);
    case 2:
        return -kOneOverTwoSqrtPi * normal_cdf(kSqrt2 * s);
    }
    throw std::invalid_argument("s_antiderivative: order must be 1 or 2, got " +
                                std::to_string(order));
}

double p_negative_eval(int n, double x)
{
    if (!std::isfinite(x))
        throw std::domain_error("p_negative_eval: x must be finite");
    switch (n) {
    case -1:
        return x;
    case -2:
        return -1.0;
    case -3: {
        if (std::abs(x) > 25.0)
            throw std::out_of_range("p_negative_eval: |x| <= 25 required for n = -3, got " +
                                    std::to_string(x));
        /* e^(x^2) as the square of the compensated e^(x^2/2) keeps the
           error at a couple of ulp instead of the ~|x^2| ulp of exp(x*x) */
        double half = detail::exp_half_sq(x);
        return -(kSqrtPi / 2.0) * (half * half) * erfc(-x);
    }
    }
    throw std::invalid_argument("p_negative_eval: n must be -1, -2 or -3, got " +
                                std::to_string(n));
}

double negative_derivative_relation_check(int n, double x)
{
    require_interior(x, "negative_derivative_relation_check");
    double s = probit_reference(x).value;
    double lhs = 0.0;
    double rhs = 0.0;
    switch (n) {
    case 0:
        lhs = s;
        rhs = p_negative_eval(-1, s);
        break;
    case -1: {
        lhs = s_antiderivative(1, x);
        rhs = p_negative_eval(-2, s) / s_derivative_n(x, 1);
        break;
    }
    case -2: {
        double sp = s_derivative_n(x, 1);
        lhs = s_antiderivative(2, x);
        rhs = p_negative_eval(-3, s) / (sp * sp);
        break;
    }
    default:
        throw std::invalid_argument(
            "negative_derivative_relation_check: n must be 0, -1 or -2, got " +
            std::to_string(n));
    }
    return std::abs(lhs - rhs);
}

double corollary_identity_check(double x)
{
    require_interior(x, "corollary_identity_check");
    double inner = -2.0 * kSqrtPi * s_antiderivative(2, x);
    if (!(inner > 0.0) || !(inner < 1.0))
        throw std::domain_error("corollary_identity_check: inner argument left (0,1)");
    double lhs = probit_reference(inner).value;
    double rhs = kSqrt2 * probit_reference(x).value;
    return std::abs(lhs - rhs);
}

MomentResult moment(int n)
{
    if (n < 0 || n > 20)
        throw std::invalid_argument("moment: n must lie in [0, 20], got " + std::to_string(n));

    MomentResult m;
    m.n = n;
    if (n % 2 == 1) {
        m.closed_form = 0.0;
        m.paper_formula = 0.0;
    } else {
        double closed = 1.0;
        for (int i = 1; i < n; i += 2)
            closed *= static_cast<double>(i);
        double printed = 1.0;
        for (int i = 3; i <= n + 1; i += 2)
            printed *= static_cast<double>(i);
        m.closed_form = closed;
        m.paper_formula = printed;
    }

    /* Composite Simpson on z^n phi(z) over [-12, 12]; the Gaussian tail
       beyond 12 is below 1e-30 for n <= 20.  A million summands of one
       sign need compensated accumulation to stay under the 1e-9 contract.
       Nodes are generated in exact +/- mirror pairs: a left-anchored grid
       is not bitwise antisymmetric, and for odd n the surviving rounding
       residue of the near-cancelling pairs would swamp the zero result. */
    constexpr int intervals = 1000000;
    constexpr double b = 12.0;
    const double h = 2.0 * b / intervals;
    double sum = 0.0;
    double carry = 0.0;
    auto add = [&sum, &carry](double term) {
        double y = term - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    };
    auto f = [n](double z) { return std::pow(z, n) * normal_pdf(z); };
    add(f(-b));
    add(f(b));
    for (int i = 1; i < intervals / 2; ++i) {
        double z = b - h * i;
        double w = i % 2 == 1 ? 4.0 : 2.0;
        add(w * f(-z));
        add(w * f(z));
    }
    add((intervals / 2 % 2 == 1 ? 4.0 : 2.0) * f(0.0));
    m.quadrature = sum * (h / 3.0);
    return m;
}

GenFuncCheck generating_function_check(double x, double t, int k_max)
{
    if (!std::isfinite(x) || std::abs(x) > 2.0)
        throw std::domain_error("generating_function_check: |x| <= 2 required");
    if (!std::isfinite(t) || std::abs(t) > 0.5)
        throw std::domain_error("generating_function_check: |t| <= 0.5 required");
    if (k_max < 1)
        throw std::invalid_argument("generating_function_check: k_max must be positive");

    double arg = normal_cdf(x) + t * normal_pdf(x);
    if (!(arg > 0.0) || !(arg < 1.0))
        throw std::domain_error("generating_function_check: inner argument left (0,1)");

    std::vector<IntPolynomial> seq = poly_sequence(k_max);
    double partial = 1.0; /* P_0 = 1 */
    double weight = 1.0;  /* t^k / k! */
    for (int k = 1; k <= k_max; ++k) {
        weight *= t / k;
        partial += poly_eval(seq[static_cast<std::size_t>(k)], x) * weight;
    }

    double s = probit_reference(arg).value;
    GenFuncCheck out;
    out.partial = partial;
    out.reference = std::exp(0.5 * s * s - 0.5 * x * x);
    return out;
}

} /* namespace probit */
