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

#include "doctest.h"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "probit/int_polynomial.hpp"

using namespace probit;

namespace {

IntPolynomial ip(std::vector<long long> c)
{
    std::vector<bigint> v(c.begin(), c.end());
    return IntPolynomial(std::move(v));
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    REQUIRE(static_cast<bool>(in));
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} /* namespace */

TEST_CASE("polynomial container normalizes and indexes")
{
    IntPolynomial zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);

    IntPolynomial trailing = ip({3, 0, 0});
    CHECK(trailing.degree() == 0);
    CHECK(trailing.at(0) == 3);
    CHECK(trailing.at(5) == 0);

    IntPolynomial all_zero = ip({0, 0});
    CHECK(all_zero.is_zero());
}

TEST_CASE("polynomial arithmetic")
{
    IntPolynomial p = ip({1, 0, 2});  /* 1 + 2x^2 */
    IntPolynomial x = ip({0, 1});

    CHECK(p + ip({-1, 0, -2}) == IntPolynomial{});
    CHECK(p * x == ip({0, 1, 0, 2}));
    CHECK(bigint(3) * p == ip({3, 0, 6}));
    CHECK(derivative(p) == ip({0, 4}));
    CHECK(derivative(ip({7})) == IntPolynomial{});
    CHECK(shift_up(p) == ip({0, 1, 0, 2}));
    CHECK(shift_up(IntPolynomial{}) == IntPolynomial{});
}

TEST_CASE("first-order recurrence produces the family")
{
    IntPolynomial p0 = ip({1});
    IntPolynomial p1 = poly_next(p0, 1);
    CHECK(p1 == ip({0, 1}));
    IntPolynomial p2 = poly_next(p1, 2);
    CHECK(p2 == ip({1, 0, 2}));
    IntPolynomial p3 = poly_next(p2, 3);
    CHECK(p3 == ip({0, 7, 0, 6}));

    /* degree mismatch is rejected */
    CHECK_THROWS_AS(poly_next(p2, 2), std::invalid_argument);
    CHECK_THROWS_AS(poly_next(p0, 5), std::invalid_argument);
}

TEST_CASE("poly_sequence prefix and consistency")
{
    auto seq0 = poly_sequence(0);
    REQUIRE(seq0.size() == 1);
    CHECK(seq0[0] == ip({1}));

    auto seq = poly_sequence(8);
    REQUIRE(seq.size() == 9);
    CHECK(seq[1] == ip({0, 1}));
    CHECK(seq[3] == ip({0, 7, 0, 6}));
    CHECK(seq[5] == ip({0, 127, 0, 326, 0, 120}));
    for (int n = 1; n <= 8; ++n) {
        CHECK(seq[static_cast<std::size_t>(n)].degree() == n);
        CHECK(seq[static_cast<std::size_t>(n)] ==
              poly_next(seq[static_cast<std::size_t>(n - 1)], n));
    }
    CHECK_THROWS_AS(poly_sequence(-1), std::invalid_argument);
}

TEST_CASE("transfer matrices carry the two diagonals")
{
    TransferMatrix a1 = transfer_matrix(1);
    CHECK(a1.row_count() == 2);
    CHECK(a1.col_count() == 1);
    CHECK(a1.rows[0][0] == 0);
    CHECK(a1.rows[1][0] == 1);

    TransferMatrix a2 = transfer_matrix(2);
    REQUIRE(a2.rows.size() == 3);
    CHECK(a2.rows[0] == std::vector<bigint>({0, 1}));
    CHECK(a2.rows[1] == std::vector<bigint>({2, 0}));
    CHECK(a2.rows[2] == std::vector<bigint>({0, 2}));

    TransferMatrix a3 = transfer_matrix(3);
    REQUIRE(a3.rows.size() == 4);
    CHECK(a3.rows[0] == std::vector<bigint>({0, 1, 0}));
    CHECK(a3.rows[1] == std::vector<bigint>({3, 0, 2}));
    CHECK(a3.rows[2] == std::vector<bigint>({0, 3, 0}));
    CHECK(a3.rows[3] == std::vector<bigint>({0, 0, 3}));

    CHECK_THROWS_AS(transfer_matrix(0), std::domain_error);
}

TEST_CASE("matrix route matches the recurrence")
{
    CHECK(coeffs_via_matrices(0) == std::vector<bigint>({1}));
    CHECK(coeffs_via_matrices(1) == std::vector<bigint>({0, 1}));
    CHECK(coeffs_via_matrices(2) == std::vector<bigint>({1, 0, 2}));
    CHECK(coeffs_via_matrices(3) == std::vector<bigint>({0, 7, 0, 6}));

    auto seq = poly_sequence(12);
    for (int n = 0; n <= 12; ++n)
        CHECK(coeffs_via_matrices(n) == seq[static_cast<std::size_t>(n)].coeffs);

    CHECK_THROWS_AS(coeffs_via_matrices(-2), std::domain_error);
}

TEST_CASE("triple sum route matches the recurrence")
{
    std::vector<IntPolynomial> prefix = {ip({1})};
    CHECK(poly_next_triple_sum(prefix) == ip({0, 1}));

    auto seq = poly_sequence(10);
    for (int n = 0; n < 10; ++n) {
        std::vector<IntPolynomial> pre(seq.begin(), seq.begin() + n + 1);
        CHECK(poly_next_triple_sum(pre) == seq[static_cast<std::size_t>(n + 1)]);
    }
    CHECK(poly_next_triple_sum({seq.begin(), seq.begin() + 5}) ==
          ip({0, 127, 0, 326, 0, 120}));

    CHECK_THROWS_AS(poly_next_triple_sum({}), std::invalid_argument);
    CHECK_THROWS_AS(poly_next_triple_sum({ip({1}), ip({1})}), std::invalid_argument);
}

TEST_CASE("coefficient table values and indexing")
{
    CoeffTable t = series_coeff_c(11);
    CHECK(t.max_index == 11);
    CHECK(t.at(1) == 1);
    CHECK(t.at(3) == 1);
    CHECK(t.at(5) == 7);
    CHECK(t.at(7) == 127);
    CHECK(t.at(9) == 4369);
    CHECK(t.at(11) == 243649);
    CHECK(t.at(2) == 0);
    CHECK(t.at(10) == 0);
    CHECK_THROWS_AS(t.at(13), std::out_of_range);
    CHECK_THROWS_AS(t.at(0), std::out_of_range);
    CHECK_THROWS_AS(t.at(-3), std::out_of_range);

    CHECK_THROWS_AS(series_coeff_c(2), std::invalid_argument);
    CHECK_THROWS_AS(series_coeff_c(0), std::invalid_argument);
    CHECK_THROWS_AS(series_coeff_c(-5), std::invalid_argument);
    CHECK_THROWS_AS(c_via_derivative_recurrence(4), std::invalid_argument);
}

TEST_CASE("both coefficient routes agree through n = 41")
{
    CoeffTable a = series_coeff_c(41);
    CoeffTable b = c_via_derivative_recurrence(41);
    REQUIRE(a.entries.size() == 21);
    REQUIRE(b.entries.size() == 21);
    CHECK(a.max_index == 41);
    for (const auto& [n, c] : a.entries) {
        CHECK(b.at(n) == c);
        CHECK(c > 0);
    }
    /* the top coefficient has grown to 44 decimal digits */
    CHECK(a.at(41).str().size() == 44);
}

TEST_CASE("golden tables reproduce byte for byte")
{
    std::string c_expected = slurp(std::string(PROBIT_DATA_DIR) + "/c_table.txt");
    CHECK(format_coeff_lines(series_coeff_c(41)) == c_expected);
    CHECK(format_coeff_lines(c_via_derivative_recurrence(41)) == c_expected);

    std::string p_expected = slurp(std::string(PROBIT_DATA_DIR) + "/p_table.txt");
    CHECK(format_poly_lines(poly_sequence(10)) == p_expected);

    /* spot-check the largest golden entry against the parsed file */
    std::istringstream lines(c_expected);
    std::string line;
    bigint c41_file = 0;
    while (std::getline(lines, line)) {
        auto tab = line.find('\t');
        REQUIRE(tab != std::string::npos);
        if (line.substr(0, tab) == "41")
            c41_file = bigint(line.substr(tab + 1));
    }
    CHECK(c41_file == series_coeff_c(41).at(41));
    CHECK(c41_file > 0);
}

TEST_CASE("floating Horner evaluation")
{
    CHECK(poly_eval(ip({1, 0, 2}), 0.0) == 1.0);
    CHECK(poly_eval(ip({0, 1}), 3.5) == 3.5);
    CHECK(poly_eval(ip({0, 7, 0, 6}), 1.0) == 13.0);
    CHECK(poly_eval(IntPolynomial{}, 2.0) == 0.0);
    /* odd polynomial evaluated at +-x */
    double v = poly_eval(ip({0, 127, 0, 326, 0, 120}), 0.75);
    CHECK(poly_eval(ip({0, 127, 0, 326, 0, 120}), -0.75) == -v);
}
