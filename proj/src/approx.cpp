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

#include "probit/approx.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "probit/format.hpp"
#include "probit/gauss.hpp"
#include "probit/lambert_w.hpp"

namespace probit {

namespace {

constexpr double kTwoPi = 6.283185307179586;
constexpr double kLogTwoPi = 1.8378770664093455;
constexpr double kSqrt2Pi = 2.5066282746310002;

void require_interior(double x, const char* what)
{
    if (!(x > 0.0) || !(x < 1.0))
        throw std::domain_error(std::string(what) + ": x must lie strictly in (0,1), got " +
                                std::to_string(x));
}

/* sqrt(W(1/(2 pi t^2))) for t != 0; |t| may be so small that 2 pi t^2
   underflows, in which case the argument is carried in log space */
double sqrt_w_inv_sq(double t, double log_abs_t)
{
    double t2 = t * t;
    if (t2 > 1e-280) {
        double arg = 1.0 / (kTwoPi * t2);
        return std::sqrt(lambert_w0(arg).value);
    }
    return std::sqrt(lambert_w0_from_log(-(kLogTwoPi + 2.0 * log_abs_t)).value);
}

} /* namespace */

double approx_eval(ApproxKind kind, double x)
{
    require_interior(x, "approx_eval");
    switch (kind) {
    case ApproxKind::g0:
        return -sqrt_w_inv_sq(x, std::log(x));
    case ApproxKind::g1:
        return sqrt_w_inv_sq(x - 1.0, std::log1p(-x));
    case ApproxKind::g2: {
        if (x == 0.5)
            return 0.0;
        double t = x * (x - 1.0);
        double root = sqrt_w_inv_sq(t, std::log(x) + std::log1p(-x));
        return (2.0 * x - 1.0) * root;
    }
    case ApproxKind::g3: {
        if (x == 0.5)
            return 0.0;
        double t = x * (x - 1.0);
        double root = sqrt_w_inv_sq(t, std::log(x) + std::log1p(-x));
        double v = x - 0.5;
        /* centered, exactly odd form of the correction cubic */
        double q = v * (kSqrt2Pi + (8.0 - 4.0 * kSqrt2Pi) * (v * v));
        return q * root;
    }
    }
    throw std::invalid_argument("approx_eval: unknown kind");
}

QPoly q_coefficients()
{
    return {-1.0, 6.0 - 2.0 * kSqrt2Pi, -12.0 + 6.0 * kSqrt2Pi, 8.0 - 4.0 * kSqrt2Pi};
}

double q_eval(const QPoly& q, double x)
{
    return q.c0 + x * (q.c1 + x * (q.c2 + x * q.c3));
}

ErrorScan error_scan(int grid_points, double x_min, double x_max)
{
    if (grid_points < 2)
        throw std::invalid_argument("error_scan: grid_points must be >= 2, got " +
                                    std::to_string(grid_points));
    if (!(x_min > 0.0) || !(x_min < x_max) || !(x_max < 1.0))
        throw std::domain_error("error_scan: need 0 < x_min < x_max < 1");

    ErrorScan scan;
    scan.rows.reserve(static_cast<std::size_t>(grid_points));
    const double span = x_max - x_min;
    for (int i = 0; i < grid_points; ++i) {
        double x = i == grid_points - 1
                       ? x_max
                       : x_min + span * static_cast<double>(i) / (grid_points - 1);
        ErrorScanRow row;
        row.x = x;
        row.s_ref = probit_reference(x).value;
        row.g0 = approx_eval(ApproxKind::g0, x);
        row.g1 = approx_eval(ApproxKind::g1, x);
        row.g2 = approx_eval(ApproxKind::g2, x);
        row.g3 = approx_eval(ApproxKind::g3, x);
        row.e0 = std::abs(row.g0 - row.s_ref);
        row.e1 = std::abs(row.g1 - row.s_ref);
        row.e2 = std::abs(row.g2 - row.s_ref);
        row.e3 = std::abs(row.g3 - row.s_ref);
        scan.max_e0 = std::fmax(scan.max_e0, row.e0);
        scan.max_e1 = std::fmax(scan.max_e1, row.e1);
        scan.max_e2 = std::fmax(scan.max_e2, row.e2);
        scan.max_e3 = std::fmax(scan.max_e3, row.e3);
        scan.rows.push_back(row);
    }
    return scan;
}

void write_error_scan_csv(std::ostream& out, const ErrorScan& scan)
{
    out << "x,s_ref,g0,g1,g2,g3,e0,e1,e2,e3\n";
    for (const ErrorScanRow& r : scan.rows) {
        out << format_shortest(r.x) << ',' << format_shortest(r.s_ref) << ','
            << format_shortest(r.g0) << ',' << format_shortest(r.g1) << ','
            << format_shortest(r.g2) << ',' << format_shortest(r.g3) << ','
            << format_shortest(r.e0) << ',' << format_shortest(r.e1) << ','
            << format_shortest(r.e2) << ',' << format_shortest(r.e3) << '\n';
    }
}

double g_ode_residual(ApproxKind kind, double x)
{
    if (kind != ApproxKind::g0 && kind != ApproxKind::g1)
        throw std::invalid_argument("g_ode_residual: kind must be g0 or g1");
    constexpr double h = 1e-6;
    if (!(x - h > 0.0) || !(x + h < 1.0))
        throw std::domain_error("g_ode_residual: x must lie in (h, 1-h)");

    /* difference over the points actually representable; the slightly
       asymmetric steps hp != hm would otherwise leak a g' term into the
       second difference */
    double xp = x + h;
    double xm = x - h;
    double hp = xp - x;
    double hm = x - xm;
    double fm = approx_eval(kind, xm);
    double f0 = approx_eval(kind, x);
    double fp = approx_eval(kind, xp);
    double gp = (fp - fm) / (hp + hm);
    double gpp = 2.0 * (hm * fp - (hp + hm) * f0 + hp * fm) / (hp * hm * (hp + hm));
    double g2 = f0 * f0;
    double rhs = f0 * gp * gp * (1.0 + 2.0 / (g2 * (1.0 + g2)));
    return std::abs(gpp - rhs) / std::abs(gpp);
}

} /* namespace probit */
