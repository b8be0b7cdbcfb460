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

#ifndef PROBIT_INT_POLYNOMIAL_HPP
#define PROBIT_INT_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace probit {

using bigint = boost::multiprecision::cpp_int;

/*
 * Exact integer polynomials P_n generating the derivatives of the inverse
 * standard normal CDF S:  S^(n) = P_{n-1}(S) * (S')^n.  The family obeys
 *
 *     P_0 = 1,   P_n = P_{n-1}' + n * x * P_{n-1},
 *
 * and the odd Taylor coefficients of S at 1/2 are C_n = P_{n-1}(0).
 * Four independent construction routes are provided so they can check each
 * other: the first-order recurrence, the coefficient transfer matrices, the
 * binomial triple sum, and (in nested_derivative.hpp) the nested derivative
 * operator.
 */

/* dense coefficient vector, coeffs[i] = coefficient of x^i;
   no trailing zero unless the polynomial is zero (empty vector) */
struct IntPolynomial {
    std::vector<bigint> coeffs;

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<bigint> c) : coeffs(std::move(c)) { normalize(); }

    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    /* coefficient of x^k, zero beyond the stored degree */
    const bigint& at(std::size_t k) const;

    void normalize();

    bool operator==(const IntPolynomial&) const = default;
};

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const bigint& s, const IntPolynomial& p);

/* formal derivative */
IntPolynomial derivative(const IntPolynomial& p);

/* x * p */
IntPolynomial shift_up(const IntPolynomial& p);

/* P_n from P_{n-1} via the first-order recurrence; throws
   std::invalid_argument if p does not have degree n-1 */
IntPolynomial poly_next(const IntPolynomial& p, int n);

/* P_0 .. P_n_max; throws std::invalid_argument if n_max < 0 */
std::vector<IntPolynomial> poly_sequence(int n_max);

/* P_{n+1} from the full prefix P_0 .. P_n via the binomial triple sum
       P_{n+1} = sum_{i=0}^{n} sum_{j=0}^{i} C(n,i) C(i,j)
                 P_{n-i-1} P_{i-j} P_j      with P_{-1}(x) = x;
   throws std::invalid_argument on an empty prefix or if the prefix entries
   do not have degrees 0..n */
IntPolynomial poly_next_triple_sum(const std::vector<IntPolynomial>& prefix);

/* integer transfer matrix A^(n) of shape (n+1) x n mapping the coefficient
   vector of P_{n-1} to that of P_n; 1-based entry (i,j) is
       i  when j = i+1 (i = 1..n-1),
       n  when j = i-1 (i = 2..n+1),
       0  otherwise */
struct TransferMatrix {
    int n = 0;                            /* block index, >= 1 */
    std::vector<std::vector<bigint>> rows; /* (n+1) rows of n entries */

    int row_count() const { return n + 1; }
    int col_count() const { return n; }
};

/* throws std::domain_error if n < 1 */
TransferMatrix transfer_matrix(int n);

/* coefficient vector of P_n (length n+1, ascending powers) from the chained
   product A^(n) A^(n-1) ... A^(1) applied to the vector (1);
   throws std::domain_error if n < 0 */
std::vector<bigint> coeffs_via_matrices(int n);

/* odd-index series coefficients C_n; even indices are zero and not stored */
struct CoeffTable {
    std::map<int, bigint> entries; /* odd n -> C_n */
    int max_index = 0;

    /* C_n; zero for even n in range; throws std::out_of_range beyond
       max_index or for n < 1 */
    bigint at(int n) const;
};

/* C_n = P_{n-1}(0) for odd n <= n_max; throws std::invalid_argument unless
   n_max is an odd positive integer */
CoeffTable series_coeff_c(int n_max);

/* the same table from the closed coefficient recurrence
       C_{n+2} = sum_{i=0}^{n} sum_{j=0}^{i} C(n,i) C(i,j)
                 C_{n-i} C_{i-j+1} C_{j+1},    C_0 = 0, C_1 = 1;
   throws std::invalid_argument unless n_max is an odd positive integer */
CoeffTable c_via_derivative_recurrence(int n_max);

/* Horner evaluation in binary64; coefficients round individually */
double poly_eval(const IntPolynomial& p, double x);

/* Plain-text renderings matching the golden data files: one record per
   line, LF terminated.  Coefficient table lines are "n<TAB>C_n" for odd n;
   polynomial lines are "n<TAB>c_0,c_1,...,c_n" including zeros. */
std::string format_coeff_lines(const CoeffTable& table);
std::string format_poly_lines(const std::vector<IntPolynomial>& seq);

} /* namespace probit */

#endif
