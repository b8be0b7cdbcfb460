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

#include "probit/int_polynomial.hpp"

#include <stdexcept>
#include <string>

namespace probit {

namespace {

const bigint kZero = 0;

/* Pascal row n: C(n,0..n) */
std::vector<bigint> binomial_row(int n)
{
    std::vector<bigint> row(static_cast<std::size_t>(n) + 1);
    row[0] = 1;
    for (int k = 1; k <= n; ++k)
        row[static_cast<std::size_t>(k)] =
            row[static_cast<std::size_t>(k - 1)] * (n - k + 1) / k;
    return row;
}

void require_odd_positive(int n_max, const char* what)
{
    if (n_max < 1 || n_max % 2 == 0)
        throw std::invalid_argument(std::string(what) +
                                    ": n_max must be an odd positive integer, got " +
                                    std::to_string(n_max));
}

} /* namespace */

const bigint& IntPolynomial::at(std::size_t k) const
{
    return k < coeffs.size() ? coeffs[k] : kZero;
}

void IntPolynomial::normalize()
{
    while (!coeffs.empty() && coeffs.back() == 0)
        coeffs.pop_back();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b)
{
    IntPolynomial r;
    r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t i = 0; i < r.coeffs.size(); ++i)
        r.coeffs[i] = a.at(i) + b.at(i);
    r.normalize();
    return r;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    IntPolynomial r;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    r.normalize();
    return r;
}

IntPolynomial operator*(const bigint& s, const IntPolynomial& p)
{
    if (s == 0)
        return {};
    IntPolynomial r = p;
    for (auto& c : r.coeffs)
        c *= s;
    return r;
}

IntPolynomial derivative(const IntPolynomial& p)
{
    IntPolynomial r;
    if (p.coeffs.size() < 2)
        return r;
    r.coeffs.resize(p.coeffs.size() - 1);
    for (std::size_t i = 1; i < p.coeffs.size(); ++i)
        r.coeffs[i - 1] = p.coeffs[i] * static_cast<int>(i);
    return r;
}

IntPolynomial shift_up(const IntPolynomial& p)
{
    if (p.is_zero())
        return {};
    IntPolynomial r;
    r.coeffs.reserve(p.coeffs.size() + 1);
    r.coeffs.push_back(0);
    r.coeffs.insert(r.coeffs.end(), p.coeffs.begin(), p.coeffs.end());
    return r;
}

IntPolynomial poly_next(const IntPolynomial& p, int n)
{
    if (n < 1)
        throw std::invalid_argument("poly_next: n must be >= 1, got " + std::to_string(n));
    if (p.degree() != n - 1)
        throw std::invalid_argument("poly_next: degree mismatch, expected degree " +
                                    std::to_string(n - 1) + ", got " +
                                    std::to_string(p.degree()));
    return derivative(p) + bigint(n) * shift_up(p);
}

std::vector<IntPolynomial> poly_sequence(int n_max)
{
    if (n_max < 0)
        throw std::invalid_argument("poly_sequence: n_max must be >= 0, got " +
                                    std::to_string(n_max));
    std::vector<IntPolynomial> seq;
    seq.reserve(static_cast<std::size_t>(n_max) + 1);
    seq.push_back(IntPolynomial({bigint(1)}));
    for (int n = 1; n <= n_max; ++n)
        seq.push_back(poly_next(seq.back(), n));
    return seq;
}

IntPolynomial poly_next_triple_sum(const std::vector<IntPolynomial>& prefix)
{
    if (prefix.empty())
        throw std::invalid_argument("poly_next_triple_sum: prefix must contain P_0");
    const int n = static_cast<int>(prefix.size()) - 1;
    for (int k = 0; k <= n; ++k)
        if (prefix[static_cast<std::size_t>(k)].degree() != k)
            throw std::invalid_argument("poly_next_triple_sum: prefix entry " +
                                        std::to_string(k) + " does not have degree " +
                                        std::to_string(k));

    const IntPolynomial p_minus1({bigint(0), bigint(1)}); /* P_{-1}(x) = x */
    auto at = [&](int k) -> const IntPolynomial& {
        return k < 0 ? p_minus1 : prefix[static_cast<std::size_t>(k)];
    };

    const std::vector<bigint> cn = binomial_row(n);
    IntPolynomial sum;
    for (int i = 0; i <= n; ++i) {
        const std::vector<bigint> ci = binomial_row(i);
        const IntPolynomial outer = at(n - i - 1);
        for (int j = 0; j <= i; ++j) {
            bigint w = cn[static_cast<std::size_t>(i)] * ci[static_cast<std::size_t>(j)];
            sum = sum + w * (outer * (at(i - j) * at(j)));
        }
    }
    return sum;
}

TransferMatrix transfer_matrix(int n)
{
    if (n < 1)
        throw std::domain_error("transfer_matrix: n must be >= 1, got " + std::to_string(n));
    TransferMatrix m;
    m.n = n;
    m.rows.assign(static_cast<std::size_t>(n) + 1,
                  std::vector<bigint>(static_cast<std::size_t>(n), 0));
    for (int i = 1; i <= n - 1; ++i)
        m.rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i)] = i;
    for (int i = 2; i <= n + 1; ++i)
        m.rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i - 2)] = n;
    return m;
}

std::vector<bigint> coeffs_via_matrices(int n)
{
    if (n < 0)
        throw std::domain_error("coeffs_via_matrices: n must be >= 0, got " +
                                std::to_string(n));
    std::vector<bigint> v{bigint(1)}; /* coefficients of P_0 */
    for (int k = 1; k <= n; ++k) {
        const TransferMatrix a = transfer_matrix(k);
        std::vector<bigint> next(static_cast<std::size_t>(k) + 1, 0);
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j < k; ++j)
                next[static_cast<std::size_t>(i)] +=
                    a.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                    v[static_cast<std::size_t>(j)];
        v = std::move(next);
    }
    return v;
}

bigint CoeffTable::at(int n) const
{
    if (n < 1 || n > max_index)
        throw std::out_of_range("CoeffTable::at: index " + std::to_string(n) +
                                " outside [1, " + std::to_string(max_index) + "]");
    if (n % 2 == 0)
        return 0;
    return entries.at(n);
}

CoeffTable series_coeff_c(int n_max)
{
    require_odd_positive(n_max, "series_coeff_c");
    CoeffTable t;
    t.max_index = n_max;
    const std::vector<IntPolynomial> seq = poly_sequence(n_max - 1);
    for (int n = 1; n <= n_max; n += 2)
        t.entries[n] = seq[static_cast<std::size_t>(n - 1)].at(0);
    return t;
}

CoeffTable c_via_derivative_recurrence(int n_max)
{
    require_odd_positive(n_max, "c_via_derivative_recurrence");
    /* c[k] = C_k for 0 <= k <= n_max; even entries stay zero */
    std::vector<bigint> c(static_cast<std::size_t>(n_max) + 1, 0);
    c[1] = 1;
    for (int n = 0; n + 2 <= n_max; ++n) {
        const std::vector<bigint> cn = binomial_row(n);
        bigint acc = 0;
        for (int i = 0; i <= n; ++i) {
            const std::vector<bigint> ci = binomial_row(i);
            for (int j = 0; j <= i; ++j)
                acc += cn[static_cast<std::size_t>(i)] * ci[static_cast<std::size_t>(j)] *
                       c[static_cast<std::size_t>(n - i)] *
                       c[static_cast<std::size_t>(i - j + 1)] *
                       c[static_cast<std::size_t>(j + 1)];
        }
        c[static_cast<std::size_t>(n) + 2] = acc;
    }
    CoeffTable t;
    t.max_index = n_max;
    for (int n = 1; n <= n_max; n += 2)
        t.entries[n] = c[static_cast<std::size_t>(n)];
    return t;
}

double poly_eval(const IntPolynomial& p, double x)
{
    double acc = 0.0;
    for (std::size_t i = p.coeffs.size(); i-- > 0;)
        acc = acc * x + static_cast<double>(p.coeffs[i]);
    return acc;
}

std::string format_coeff_lines(const CoeffTable& table)
{
    std::string out;
    for (int n = 1; n <= table.max_index; n += 2) {
        out += std::to_string(n);
        out += '\t';
        out += table.at(n).str();
        out += '\n';
    }
    return out;
}

std::string format_poly_lines(const std::vector<IntPolynomial>& seq)
{
    std::string out;
    for (std::size_t n = 0; n < seq.size(); ++n) {
        out += std::to_string(n);
        out += '\t';
        const IntPolynomial& p = seq[n];
        for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k) {
            if (k > 0)
                out += ',';
            out += p.at(k).str();
        }
        out += '\n';
    }
    return out;
}

} /* namespace probit */
