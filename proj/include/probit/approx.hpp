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

#ifndef PROBIT_APPROX_HPP
#define PROBIT_APPROX_HPP

#include <iosfwd>
#include <vector>

namespace probit {

/*
 * Closed-form Lambert-W approximations to the inverse normal CDF S:
 *
 *     g0(x) = -sqrt(W(1/(2 pi x^2)))                  left tail
 *     g1(x) = +sqrt(W(1/(2 pi (x-1)^2)))              right tail
 *     g2(x) = (2x-1) sqrt(W(1/(2 pi x^2 (x-1)^2)))    whole interval
 *     g3(x) = Q(x)   sqrt(W(1/(2 pi x^2 (x-1)^2)))    cubic-corrected
 *
 * with the correction cubic Q(x) = -1 + (6-2s)x + (-12+6s)x^2 + (8-4s)x^3,
 * s = sqrt(2 pi).  Q is exactly odd about (1/2, 0); g3 evaluates it in the
 * centered form s*v + (8-4s)*v^3, v = x - 1/2, so the antisymmetry of g2/g3
 * survives in floating point to the last ulp.
 */

enum class ApproxKind { g0, g1, g2, g3 };

/* throws std::domain_error unless 0 < x < 1 */
double approx_eval(ApproxKind kind, double x);

/* the four real coefficients of Q, constant term first */
struct QPoly {
    double c0, c1, c2, c3;
};

QPoly q_coefficients();

/* Horner evaluation of the raw cubic */
double q_eval(const QPoly& q, double x);

struct ErrorScanRow {
    double x, s_ref, g0, g1, g2, g3, e0, e1, e2, e3;
};

struct ErrorScan {
    std::vector<ErrorScanRow> rows;
    double max_e0 = 0.0, max_e1 = 0.0, max_e2 = 0.0, max_e3 = 0.0;
};

/* uniform grid of grid_points >= 2 over [x_min, x_max], endpoints included;
   e_i = |g_i - s_ref| with s_ref from probit_reference; throws
   std::domain_error unless 0 < x_min < x_max < 1, std::invalid_argument for
   grid_points < 2 */
ErrorScan error_scan(int grid_points, double x_min, double x_max);

/* header x,s_ref,g0,g1,g2,g3,e0,e1,e2,e3; one row per grid point, fields in
   shortest round-trip decimal, LF line endings */
void write_error_scan_csv(std::ostream& out, const ErrorScan& scan);

/* relative residual of the corrected tail ODE
       g'' = g (g')^2 (1 + 2 / (g^2 (1 + g^2)))
   with g' and g'' from central differences (h = 1e-6), normalized by |g''|;
   kind must be g0 (use x <= 0.3) or g1 (use x >= 0.7); throws
   std::invalid_argument for g2/g3 and std::domain_error unless
   h < x < 1 - h */
double g_ode_residual(ApproxKind kind, double x);

} /* namespace probit */

#endif
