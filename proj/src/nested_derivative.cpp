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

#include "probit/nested_derivative.hpp"

#include <stdexcept>
#include <string>

namespace probit {

namespace {

const bigrat kZeroRat = 0;

} /* namespace */

const bigrat& RatPolynomial::at(std::size_t k) const
{
    return k < coeffs.size() ? coeffs[k] : kZeroRat;
}

void RatPolynomial::normalize()
{
    while (!coeffs.empty() && coeffs.back() == 0)
        coeffs.pop_back();
}

RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b)
{
    RatPolynomial r;
    r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t i = 0; i < r.coeffs.size(); ++i)
        r.coeffs[i] = a.at(i) + b.at(i);
    r.normalize();
    return r;
}

RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    RatPolynomial r;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    r.normalize();
    return r;
}

RatPolynomial derivative(const RatPolynomial& p)
{
    RatPolynomial r;
    if (p.coeffs.size() < 2)
        return r;
    r.coeffs.resize(p.coeffs.size() - 1);
    for (std::size_t i = 1; i < p.coeffs.size(); ++i)
        r.coeffs[i - 1] = p.coeffs[i] * static_cast<int>(i);
    return r;
}

ExpPolyTerm derivative(const ExpPolyTerm& t)
{
    return {derivative(t.prefactor) + t.prefactor * derivative(t.exponent), t.exponent};
}

ExpPolyTerm operator*(const ExpPolyTerm& a, const ExpPolyTerm& b)
{
    return {a.prefactor * b.prefactor, a.exponent + b.exponent};
}

ExpPolyTerm nested_derivative(const ExpPolyTerm& f, int n)
{
    if (n < 0)
        throw std::invalid_argument("nested_derivative: n must be >= 0, got " +
                                    std::to_string(n));
    ExpPolyTerm acc{RatPolynomial({bigrat(1)}), RatPolynomial{}};
    for (int k = 1; k <= n; ++k)
        acc = derivative(f * acc);
    return acc;
}

IntPolynomial pn_via_nested(int n)
{
    if (n < 0)
        throw std::invalid_argument("pn_via_nested: n must be >= 0, got " +
                                    std::to_string(n));
    const ExpPolyTerm gauss{RatPolynomial({bigrat(1)}),
                            RatPolynomial({bigrat(0), bigrat(0), bigrat(1, 2)})};
    const ExpPolyTerm d = nested_derivative(gauss, n);

    const RatPolynomial expected_exp =
        n == 0 ? RatPolynomial{}
               : RatPolynomial({bigrat(0), bigrat(0), bigrat(n, 2)});
    if (!(d.exponent == expected_exp))
        throw std::logic_error("pn_via_nested: exponent is not n*x^2/2 at n = " +
                               std::to_string(n));

    IntPolynomial p;
    p.coeffs.reserve(d.prefactor.coeffs.size());
    for (const bigrat& c : d.prefactor.coeffs) {
        if (boost::multiprecision::denominator(c) != 1)
            throw std::logic_error("pn_via_nested: non-integer coefficient at n = " +
                                   std::to_string(n));
        p.coeffs.push_back(boost::multiprecision::numerator(c));
    }
    p.normalize();
    return p;
}

} /* namespace probit */
