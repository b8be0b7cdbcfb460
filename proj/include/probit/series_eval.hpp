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

#ifndef PROBIT_SERIES_EVAL_HPP
#define PROBIT_SERIES_EVAL_HPP

#include <cstddef>
#include <vector>

namespace probit {

/* Tuning knobs for the series / hybrid evaluators.  Defaults are the values
   the unit tests pin down; callers may loosen them for experiments. */
struct EvalConfig {
    double term_tolerance = 1e-17;  /* stop when |term| <= tolerance * |sum| */
    int term_cap = 120;             /* hard cap on series terms */
    double newton_tolerance = 1e-15; /* stop when |N(s) - p| <= tolerance */
    int newton_cap = 8;             /* hard cap on Newton steps */
    double switch_radius = 0.3;     /* series used when |p - 1/2| <= radius */
};

/* Precomputed odd-power term factors t_k so that around the center
   S(1/2 + u) = sum_k t_k * u^(2k+1).  Each factor is the correctly rounded
   double of an exact rational scaled by a half-integer power of 2*pi;
   the scaling is carried out in 50-digit arithmetic and rounded once. */
struct SeriesTerms {
    std::vector<double> terms;  /* terms[k] multiplies u^(2k+1); all positive */
    int generated_from = 0;     /* count of exact integer coefficients used */
};

/* Factors for k = 0..k_max.  k_max <= 60. */
SeriesTerms taylor_terms(int k_max);

struct SeriesValue {
    double value = 0.0;
    int terms_used = 0;     /* number of odd powers actually summed */
    double last_term = 0.0; /* magnitude of the final increment */
};

/* Central series evaluation; requires |x - 1/2| <= cfg.switch_radius. */
SeriesValue s_series(double x, const EvalConfig& cfg = {});

struct HybridValue {
    double value = 0.0;
    bool series_path = false; /* true when the central series was used */
    int newton_steps = 0;     /* 0 on the series path */
};

/* Full-range evaluator: central series inside the switch radius, otherwise
   a closed-form seed polished by Newton iteration on the CDF. */
HybridValue probit_hybrid(double p, const EvalConfig& cfg = {});

} /* namespace probit */

#endif
