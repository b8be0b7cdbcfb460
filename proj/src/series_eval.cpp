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

#include "probit/series_eval.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "probit/approx.hpp"
#include "probit/gauss.hpp"
#include "probit/int_polynomial.hpp"

namespace probit {

namespace {

using bf50 = boost::multiprecision::cpp_bin_float_50;

constexpr int kMaxFactor = 60;

/* Factors are exact rationals C_(2k+1)/(2k+1)! scaled by (2 pi)^(k + 1/2);
   everything is carried in 50-digit floats and rounded to double once. */
std::vector<double> compute_factors()
{
    CoeffTable table = series_coeff_c(2 * kMaxFactor + 1);

    const bf50 two_pi = 2 * acos(bf50(-1));
    const bf50 sqrt_two_pi = sqrt(two_pi);

    std::vector<double> out;
    out.reserve(kMaxFactor + 1);
    bf50 power = sqrt_two_pi; /* (2 pi)^(k + 1/2) */
    bf50 factorial = 1;       /* (2k+1)! */
    for (int k = 0; k <= kMaxFactor; ++k) {
        int n = 2 * k + 1;
        if (k > 0) {
            power *= two_pi;
            factorial *= bf50(n - 1) * bf50(n);
        }
        bf50 c(table.at(n).str());
        out.push_back(static_cast<double>(power * c / factorial));
    }
    return out;
}

const std::vector<double>& shared_factors()
{
    static const std::vector<double> factors = compute_factors();
    return factors;
}

} /* namespace */

SeriesTerms taylor_terms(int k_max)
{
    if (k_max < 0 || k_max > kMaxFactor)
        throw std::invalid_argument("taylor_terms: k_max must lie in [0, " +
                                    std::to_string(kMaxFactor) + "], got " +
                                    std::to_string(k_max));
    const std::vector<double>& all = shared_factors();
    SeriesTerms t;
    t.terms.assign(all.begin(), all.begin() + k_max + 1);
    t.generated_from = k_max + 1;
    return t;
}

SeriesValue s_series(double x, const EvalConfig& cfg)
{
    /* Canonicalize to the lower half: 1 - x is exact for x >= 1/2, so the
       pair (x, 1 - x) runs the identical summation and the results negate
       bit for bit. */
    if (x > 0.5) {
        SeriesValue sv = s_series(1.0 - x, cfg);
        sv.value = -sv.value;
        return sv;
    }
    double u = x - 0.5;
    if (!(std::abs(u) <= cfg.switch_radius))
        throw std::domain_error("s_series: |x - 1/2| exceeds the switch radius");

    const std::vector<double>& f = shared_factors();
    const double u2 = u * u;

    SeriesValue sv;
    double sum = f[0] * u;
    double upow = u;
    sv.terms_used = 1;
    sv.last_term = std::abs(sum);
    for (std::size_t k = 1; k < f.size() && sv.terms_used < cfg.term_cap; ++k) {
        upow *= u2;
        double term = f[k] * upow;
        sum += term;
        ++sv.terms_used;
        sv.last_term = std::abs(term);
        if (sv.last_term <= cfg.term_tolerance * std::abs(sum))
            break;
    }
    sv.value = sum;
    return sv;
}

namespace {

/* Tail evaluation for p in (0, 1/2 - radius): closed-form seed plus Newton
   on N(s) = p.  The CDF derivative is the normal density. */
HybridValue tail_eval(double p, const EvalConfig& cfg)
{
    HybridValue hv;
    double s = approx_eval(ApproxKind::g2, p);
    int steps = 0;
    while (steps < cfg.newton_cap) {
        double f = normal_cdf(s) - p;
        if (std::abs(f) <= cfg.newton_tolerance * p)
            break;
        double d = normal_pdf(s);
        if (d == 0.0)
            break;
        double step = f / d;
        s -= step;
        ++steps;
        if (std::abs(step) <= 4.0 * std::abs(s) * 0x1p-52)
            break;
    }
    hv.value = s;
    hv.newton_steps = steps;
    return hv;
}

} /* namespace */

HybridValue probit_hybrid(double p, const EvalConfig& cfg)
{
    if (!(p > 0.0) || !(p < 1.0))
        throw std::domain_error("probit_hybrid: p must lie strictly in (0,1), got " +
                                std::to_string(p));

    if (std::abs(p - 0.5) <= cfg.switch_radius) {
        SeriesValue sv = s_series(p, cfg);
        HybridValue hv;
        hv.value = sv.value;
        hv.series_path = true;
        return hv;
    }
    if (p > 0.5) {
        /* Mirror through the upper tail so both tails share one code path.
           1 - p is exact here because p >= 1/2. */
        HybridValue hv = tail_eval(1.0 - p, cfg);
        hv.value = -hv.value;
        return hv;
    }
    return tail_eval(p, cfg);
}

} /* namespace probit */
