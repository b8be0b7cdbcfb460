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

#include "probit/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "probit/approx.hpp"
#include "probit/calculus.hpp"
#include "probit/format.hpp"
#include "probit/gauss.hpp"
#include "probit/int_polynomial.hpp"
#include "probit/lambert_w.hpp"
#include "probit/nested_derivative.hpp"
#include "probit/selfcheck.hpp"
#include "probit/series_eval.hpp"

namespace probit {

namespace {

double parse_probability_line(const std::string& line)
{
    const char* begin = line.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    while (end && *end == ' ')
        ++end;
    if (end == begin || *end != '\0')
        throw std::domain_error("eval: unparseable input line: " + line);
    return v;
}

bool blank(const std::string& line)
{
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

ApproxKind kind_of(const std::string& method)
{
    if (method == "g0")
        return ApproxKind::g0;
    if (method == "g1")
        return ApproxKind::g1;
    if (method == "g2")
        return ApproxKind::g2;
    return ApproxKind::g3;
}

int do_eval(bool use_stdin, double p, const std::string& method, bool deriv_set,
            int deriv, std::istream& in, std::ostream& out)
{
    auto eval_one = [&](double pv) {
        if (deriv_set)
            return s_derivative_n(pv, deriv);
        if (method == "hybrid")
            return probit_hybrid(pv).value;
        if (method == "series")
            return s_series(pv).value;
        if (method == "reference")
            return probit_reference(pv).value;
        return approx_eval(kind_of(method), pv);
    };
    if (use_stdin) {
        std::string line;
        while (std::getline(in, line)) {
            if (blank(line))
                continue;
            out << format_shortest(eval_one(parse_probability_line(line))) << '\n';
        }
        return 0;
    }
    out << format_shortest(eval_one(p)) << '\n';
    return 0;
}

int do_w(double x, bool series_set, int series_terms, std::ostream& out)
{
    WResult r = lambert_w0(x);
    out << format_shortest(r.value) << ' ' << r.iterations << ' '
        << format_shortest(r.residual) << '\n';
    if (series_set) {
        double sv = lambert_w0_series(x, series_terms);
        out << "series " << format_shortest(sv) << '\n';
    }
    return 0;
}

int do_polys(int max_n, const std::string& route, std::ostream& out)
{
    std::vector<IntPolynomial> seq;
    if (route == "recurrence") {
        seq = poly_sequence(max_n);
    } else if (route == "matrix") {
        for (int n = 0; n <= max_n; ++n)
            seq.push_back(IntPolynomial(coeffs_via_matrices(n)));
    } else if (route == "triple") {
        seq.push_back(IntPolynomial({bigint(1)}));
        for (int n = 1; n <= max_n; ++n)
            seq.push_back(poly_next_triple_sum(seq));
    } else {
        for (int n = 0; n <= max_n; ++n)
            seq.push_back(pn_via_nested(n));
    }
    out << format_poly_lines(seq);
    return 0;
}

int do_coeffs(int max_n, const std::string& route, std::ostream& out)
{
    if (max_n % 2 == 0)
        --max_n; /* even ceiling adds no entries; floor to the last odd index */
    CoeffTable t = route == "poly" ? series_coeff_c(max_n)
                                   : c_via_derivative_recurrence(max_n);
    out << format_coeff_lines(t);
    return 0;
}

int do_scan(int points, double x_min, double x_max, const std::string& path,
            std::ostream& out)
{
    ErrorScan scan = error_scan(points, x_min, x_max);
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("scan: cannot open output file: " + path);
    write_error_scan_csv(f, scan);
    out << "wrote " << scan.rows.size() << " rows to " << path << " max_e3 "
        << format_shortest(scan.max_e3) << '\n';
    return 0;
}

int do_moments(int max_n, std::ostream& out)
{
    out << "n,closed_form,quadrature,paper_formula\n";
    for (int n = 0; n <= max_n; ++n) {
        MomentResult m = moment(n);
        out << n << ',' << format_shortest(m.closed_form) << ','
            << format_shortest(m.quadrature) << ','
            << format_shortest(m.paper_formula) << '\n';
    }
    return 0;
}

int do_verify(const std::string& data_dir, std::ostream& out)
{
    std::vector<CheckResult> results = run_selfcheck(data_dir);
    std::size_t width = 0;
    for (const CheckResult& r : results)
        width = std::max(width, r.name.size());
    std::size_t passed = 0;
    for (const CheckResult& r : results) {
        out << (r.passed ? "PASS  " : "FAIL  ") << r.name
            << std::string(width - r.name.size() + 2, ' ') << "measured "
            << format_shortest(r.measured) << "  bound " << format_shortest(r.bound);
        if (!r.note.empty())
            out << "  [" << r.note << "]";
        out << '\n';
        if (r.passed)
            ++passed;
    }
    out << passed << "/" << results.size() << " checks passed\n";
    return passed == results.size() ? 0 : 1;
}

int do_bench(int points, std::ostream& out)
{
    struct Method {
        const char* name;
        double (*eval)(double);
    };
    const Method methods[] = {
        {"hybrid", [](double p) { return probit_hybrid(p).value; }},
        {"reference", [](double p) { return probit_reference(p).value; }},
        {"g2", [](double p) { return approx_eval(ApproxKind::g2, p); }},
        {"g3", [](double p) { return approx_eval(ApproxKind::g3, p); }},
    };
    const int reps = 5;
    for (const Method& m : methods) {
        std::vector<double> per_call(reps);
        double checksum = 0.0;
        for (int rep = 0; rep < reps; ++rep) {
            auto t0 = std::chrono::steady_clock::now();
            double s = 0.0;
            for (int i = 1; i <= points; ++i)
                s += m.eval(i / (points + 1.0));
            auto t1 = std::chrono::steady_clock::now();
            per_call[rep] =
                std::chrono::duration<double, std::nano>(t1 - t0).count() / points;
            checksum = s;
        }
        std::nth_element(per_call.begin(), per_call.begin() + reps / 2, per_call.end());
        out << m.name << " calls " << points << " ns_per_call "
            << format_shortest(per_call[reps / 2]) << " checksum "
            << format_shortest(checksum) << '\n';
    }
    return 0;
}

} /* namespace */

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err)
{
    CLI::App app{"inverse standard normal cdf: series, asymptotics, exact tables"};
    app.name("probit");
    app.require_subcommand(1);

    auto* eval = app.add_subcommand("eval", "evaluate the inverse cdf or a derivative");
    double p = 0.0;
    bool use_stdin = false;
    std::string method = "hybrid";
    int deriv = 0;
    CLI::Option* p_opt = eval->add_option("--p", p, "probability in (0,1)");
    CLI::Option* stdin_opt =
        eval->add_flag("--stdin", use_stdin, "read one probability per line");
    CLI::Option* method_opt =
        eval->add_option("--method", method, "hybrid|series|reference|g0|g1|g2|g3")
            ->check(CLI::IsMember(
                {"hybrid", "series", "reference", "g0", "g1", "g2", "g3"}));
    CLI::Option* deriv_opt =
        eval->add_option("--deriv", deriv, "derivative order n >= 0 (reference route)")
            ->check(CLI::Range(0, 100));
    p_opt->excludes(stdin_opt);

    auto* w = app.add_subcommand("w", "principal-branch Lambert W");
    double wx = 0.0;
    int series_terms = 0;
    w->add_option("--x", wx, "argument, x >= -1/e")->required();
    CLI::Option* series_opt =
        w->add_option("--series", series_terms, "also print an N-term series value")
            ->check(CLI::Range(1, 200));

    auto* polys = app.add_subcommand("polys", "integer polynomial family table");
    int polys_max = 0;
    std::string polys_route = "recurrence";
    polys->add_option("--max", polys_max, "largest index")
        ->required()
        ->check(CLI::Range(0, 100));
    polys->add_option("--route", polys_route, "recurrence|matrix|triple|nested")
        ->check(CLI::IsMember({"recurrence", "matrix", "triple", "nested"}));

    auto* coeffs = app.add_subcommand("coeffs", "odd series coefficient table");
    int coeffs_max = 0;
    std::string coeffs_route = "poly";
    coeffs->add_option("--max", coeffs_max, "largest index (even floors to odd)")
        ->required()
        ->check(CLI::Range(1, 301));
    coeffs->add_option("--route", coeffs_route, "poly|derivative")
        ->check(CLI::IsMember({"poly", "derivative"}));

    auto* scan = app.add_subcommand("scan", "approximation error scan to CSV");
    int scan_points = 0;
    double scan_min = 0.0, scan_max = 0.0;
    std::string scan_out;
    scan->add_option("--points", scan_points, "grid size")
        ->required()
        ->check(CLI::Range(2, 10000000));
    scan->add_option("--min", scan_min, "lower grid edge")->required();
    scan->add_option("--max", scan_max, "upper grid edge")->required();
    scan->add_option("--out", scan_out, "output CSV path")->required();

    auto* moments = app.add_subcommand("moments", "closed-form vs quadrature moments");
    int moments_max = 0;
    moments->add_option("--max", moments_max, "largest order")
        ->required()
        ->check(CLI::Range(0, 20));

    auto* verify = app.add_subcommand("verify", "run the full invariant suite");
    std::string data_dir = "data";
    verify->add_option("--data", data_dir, "directory holding the golden tables");

    auto* bench = app.add_subcommand("bench", "per-call timing over a uniform grid");
    int bench_points = 0;
    bench->add_option("--points", bench_points, "grid size, at least 1000")
        ->required()
        ->check(CLI::Range(1000, 100000000));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        (void)code;
        return dynamic_cast<const CLI::Success*>(&e) != nullptr ? 0 : 2;
    }

    if (eval->parsed() && p_opt->count() == 0 && !use_stdin) {
        err << "probit: eval needs exactly one of --p or --stdin\n"
               "Run with --help for more information.\n";
        return 2;
    }
    if (eval->parsed() && deriv_opt->count() > 0 && method_opt->count() > 0 &&
        method != "reference") {
        err << "probit: --deriv applies to the reference route only\n"
               "Run with --help for more information.\n";
        return 2;
    }

    try {
        if (eval->parsed())
            return do_eval(use_stdin, p, method, deriv_opt->count() > 0, deriv, in, out);
        if (w->parsed())
            return do_w(wx, series_opt->count() > 0, series_terms, out);
        if (polys->parsed())
            return do_polys(polys_max, polys_route, out);
        if (coeffs->parsed())
            return do_coeffs(coeffs_max, coeffs_route, out);
        if (scan->parsed())
            return do_scan(scan_points, scan_min, scan_max, scan_out, out);
        if (moments->parsed())
            return do_moments(moments_max, out);
        if (verify->parsed())
            return do_verify(data_dir, out);
        if (bench->parsed())
            return do_bench(bench_points, out);
    } catch (const std::exception& e) {
        err << "probit: " << e.what() << '\n';
        return 1;
    }
    err << "probit: no subcommand\n";
    return 2;
}

} /* namespace probit */
