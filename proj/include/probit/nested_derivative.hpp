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

#ifndef PROBIT_NESTED_DERIVATIVE_HPP
#define PROBIT_NESTED_DERIVATIVE_HPP

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "probit/int_polynomial.hpp"

namespace probit {

using bigrat = boost::multiprecision::cpp_rational;

/*
 * Nested derivative operator D acting on terms p(x) * exp(q(x)) with
 * rational polynomial p, q:
 *
 *     D^(0)[f] = 1,        D^(n)[f] = (f * D^(n-1)[f])'.
 *
 * Applied to exp(x^2/2) it generates the same polynomial family as the
 * first-order recurrence:  P_n(x) = exp(-n x^2/2) * D^(n)[exp(x^2/2)].
 */

/* dense coefficient vector, coeffs[i] = coefficient of x^i; rationals are
   kept canonical by the arithmetic type itself */
struct RatPolynomial {
    std::vector<bigrat> coeffs;

    RatPolynomial() = default;
    explicit RatPolynomial(std::vector<bigrat> c) : coeffs(std::move(c)) { normalize(); }

    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    const bigrat& at(std::size_t k) const;
    void normalize();

    bool operator==(const RatPolynomial&) const = default;
};

RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b);
RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b);
RatPolynomial derivative(const RatPolynomial& p);

/* prefactor(x) * exp(exponent(x)) */
struct ExpPolyTerm {
    RatPolynomial prefactor;
    RatPolynomial exponent;
};

/* (p' + p q') * exp(q) */
ExpPolyTerm derivative(const ExpPolyTerm& t);

/* prefactors multiply, exponents add */
ExpPolyTerm operator*(const ExpPolyTerm& a, const ExpPolyTerm& b);

/* D^(n)[f]; n = 0 yields the constant term 1 * exp(0);
   throws std::invalid_argument if n < 0 */
ExpPolyTerm nested_derivative(const ExpPolyTerm& f, int n);

/* P_n through the operator route; verifies structurally that the exponent
   comes out as n * x^2/2 and that the prefactor is integral, and throws
   std::logic_error otherwise; throws std::invalid_argument if n < 0 */
IntPolynomial pn_via_nested(int n);

} /* namespace probit */

#endif
