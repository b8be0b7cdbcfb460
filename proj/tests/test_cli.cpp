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

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "probit/approx.hpp"
#include "probit/cli.hpp"
#include "probit/format.hpp"
#include "probit/gauss.hpp"
#include "probit/int_polynomial.hpp"
#include "probit/lambert_w.hpp"
#include "probit/series_eval.hpp"

namespace {

struct CliRun {
    int code = 0;
    std::string out;
    std::string err;
};

CliRun run_cli(const std::vector<std::string>& args, const std::string& input = "")
{
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    CliRun r;
    r.code = probit::run(args, in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    REQUIRE(static_cast<bool>(in));
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> split_lines(const std::string& text)
{
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        lines.push_back(line);
    return lines;
}

std::vector<std::string> split_tokens(const std::string& line)
{
    std::vector<std::string> toks;
    std::istringstream in(line);
    std::string t;
    while (in >> t)
        toks.push_back(t);
    return toks;
}

} /* namespace */

TEST_CASE("eval single values per method")
{
    CliRun mid = run_cli({"eval", "--p", "0.5"});
    CHECK(mid.code == 0);
    CHECK(mid.out == "0\n");
    CHECK(mid.err.empty());

    CliRun hybrid = run_cli({"eval", "--p", "0.975"});
    CHECK(hybrid.out ==
          probit::format_shortest(probit::probit_hybrid(0.975).value) + "\n");

    CliRun reference = run_cli({"eval", "--p", "0.975", "--method", "reference"});
    CHECK(reference.out ==
          probit::format_shortest(probit::probit_reference(0.975).value) + "\n");

    CliRun series = run_cli({"eval", "--p", "0.6", "--method", "series"});
    CHECK(series.out == "0.2533471031357998\n");

    CliRun g0 = run_cli({"eval", "--p", "0.5", "--method", "g0"});
    CHECK(g0.out == "-0.6471428198047854\n");

    CliRun g3 = run_cli({"eval", "--p", "0.975", "--method", "g3"});
    CHECK(g3.out ==
          probit::format_shortest(
              probit::approx_eval(probit::ApproxKind::g3, 0.975)) + "\n");
}

TEST_CASE("eval derivative route")
{
    CliRun d = run_cli({"eval", "--p", "0.3", "--deriv", "2"});
    CHECK(d.code == 0);
    CHECK(d.out == probit::format_shortest(probit::s_derivative_n(0.3, 2)) + "\n");

    /* explicit reference method combines with --deriv */
    CliRun dr = run_cli({"eval", "--p", "0.3", "--deriv", "2", "--method", "reference"});
    CHECK(dr.code == 0);
    CHECK(dr.out == d.out);

    /* any other explicit method conflicts */
    CliRun bad = run_cli({"eval", "--p", "0.3", "--deriv", "2", "--method", "g2"});
    CHECK(bad.code == 2);
    CHECK(bad.out.empty());
    CHECK(bad.err.find("--deriv") != std::string::npos);
}

TEST_CASE("eval batch mode")
{
    CliRun batch = run_cli({"eval", "--stdin"}, "0.5\n\n0.975\n  \n0.2\n");
    CHECK(batch.code == 0);
    std::vector<std::string> lines = split_lines(batch.out);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "0");
    CHECK(lines[1] == probit::format_shortest(probit::probit_hybrid(0.975).value));
    CHECK(lines[2] == probit::format_shortest(probit::probit_hybrid(0.2).value));

    CliRun bad_line = run_cli({"eval", "--stdin"}, "0.5\nnot-a-number\n");
    CHECK(bad_line.code == 1);
    CHECK(bad_line.out == "0\n");
    CHECK(bad_line.err.rfind("probit: ", 0) == 0);

    CliRun batch_method = run_cli({"eval", "--stdin", "--method", "g2"}, "0.5\n");
    CHECK(batch_method.code == 0);
    CHECK(batch_method.out == "0\n");
}

TEST_CASE("eval usage and domain failures")
{
    CHECK(run_cli({"eval"}).code == 2);
    CHECK(run_cli({"eval", "--p", "0.5", "--stdin"}).code == 2);
    CHECK(run_cli({"eval", "--p", "abc"}).code == 2);
    CHECK(run_cli({"eval", "--p", "0.5", "--method", "bogus"}).code == 2);
    CHECK(run_cli({"eval", "--p", "0.5", "--deriv", "-1"}).code == 2);

    CliRun domain = run_cli({"eval", "--p", "1.5"});
    CHECK(domain.code == 1);
    CHECK(domain.err.rfind("probit: ", 0) == 0);
}

TEST_CASE("lambert w subcommand")
{
    CliRun w1 = run_cli({"w", "--x", "1"});
    CHECK(w1.code == 0);
    std::vector<std::string> toks = split_tokens(w1.out);
    REQUIRE(toks.size() == 3);
    CHECK(toks[0] == "0.5671432904097838");
    CHECK(toks[2] == "0");

    CliRun ws = run_cli({"w", "--x", "0.2", "--series", "30"});
    CHECK(ws.code == 0);
    std::vector<std::string> lines = split_lines(ws.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[1] ==
          "series " + probit::format_shortest(probit::lambert_w0_series(0.2, 30)));

    /* series outside its disc: the W line is printed, then the failure */
    CliRun wbad = run_cli({"w", "--x", "1", "--series", "60"});
    CHECK(wbad.code == 1);
    CHECK(split_lines(wbad.out).size() == 1);
    CHECK(wbad.err.rfind("probit: ", 0) == 0);

    CHECK(run_cli({"w", "--x", "-1"}).code == 1);
    CHECK(run_cli({"w"}).code == 2);
    CHECK(run_cli({"w", "--x", "1", "--series", "0"}).code == 2);
    CHECK(run_cli({"w", "--x", "1", "--series", "201"}).code == 2);
}

TEST_CASE("polys subcommand")
{
    CliRun small = run_cli({"polys", "--max", "3"});
    CHECK(small.code == 0);
    CHECK(small.out == "0\t1\n1\t0,1\n2\t1,0,2\n3\t0,7,0,6\n");

    std::string expected = probit::format_poly_lines(probit::poly_sequence(10));
    for (const char* route : {"recurrence", "matrix", "triple", "nested"}) {
        CliRun r = run_cli({"polys", "--max", "10", "--route", route});
        CHECK(r.code == 0);
        CHECK(r.out == expected);
    }

    CHECK(run_cli({"polys"}).code == 2);
    CHECK(run_cli({"polys", "--max", "-1"}).code == 2);
    CHECK(run_cli({"polys", "--max", "101"}).code == 2);
    CHECK(run_cli({"polys", "--max", "5", "--route", "bogus"}).code == 2);
}

TEST_CASE("coeffs subcommand")
{
    CliRun small = run_cli({"coeffs", "--max", "7"});
    CHECK(small.code == 0);
    CHECK(small.out == "1\t1\n3\t1\n5\t7\n7\t127\n");

    /* an even bound floors to the odd index below it */
    CHECK(run_cli({"coeffs", "--max", "8"}).out == small.out);

    std::string golden = slurp(std::string(PROBIT_DATA_DIR) + "/c_table.txt");
    CHECK(run_cli({"coeffs", "--max", "41"}).out == golden);
    CHECK(run_cli({"coeffs", "--max", "41", "--route", "derivative"}).out == golden);

    CHECK(run_cli({"coeffs"}).code == 2);
    CHECK(run_cli({"coeffs", "--max", "0"}).code == 2);
    CHECK(run_cli({"coeffs", "--max", "302"}).code == 2);
}

TEST_CASE("scan subcommand")
{
    const std::string path = "cli_scan_test_tmp.csv";
    CliRun r = run_cli({"scan", "--points", "11", "--min", "0.1", "--max", "0.9",
                        "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("wrote 11 rows to " + path + " max_e3 ", 0) == 0);

    std::ostringstream expected;
    probit::write_error_scan_csv(expected, probit::error_scan(11, 0.1, 0.9));
    CHECK(slurp(path) == expected.str());
    std::remove(path.c_str());

    CHECK(run_cli({"scan", "--points", "1", "--min", "0.1", "--max", "0.9",
                   "--out", path}).code == 2);
    CHECK(run_cli({"scan", "--points", "10", "--min", "0.9", "--max", "0.1",
                   "--out", path}).code == 1);
    CliRun unwritable = run_cli({"scan", "--points", "10", "--min", "0.1",
                                 "--max", "0.9", "--out",
                                 "no_such_dir_xyz/out.csv"});
    CHECK(unwritable.code == 1);
    CHECK(unwritable.err.find("cannot open") != std::string::npos);
}

TEST_CASE("moments subcommand")
{
    CliRun r = run_cli({"moments", "--max", "4"});
    CHECK(r.code == 0);
    std::vector<std::string> lines = split_lines(r.out);
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == "n,closed_form,quadrature,paper_formula");
    CHECK(lines[2].rfind("1,0,", 0) == 0);
    CHECK(lines[2].substr(lines[2].size() - 2) == ",0");
    CHECK(lines[5] == "4,3,3,15");

    CHECK(run_cli({"moments"}).code == 2);
    CHECK(run_cli({"moments", "--max", "21"}).code == 2);
}

TEST_CASE("verify subcommand reports the two designed failures")
{
    CliRun r = run_cli({"verify", "--data", PROBIT_DATA_DIR});
    CHECK(r.code == 1);
    std::vector<std::string> lines = split_lines(r.out);
    REQUIRE(!lines.empty());
    CHECK(lines.back() == "34/36 checks passed");

    int pass = 0;
    int fail = 0;
    bool roundtrip_x = false;
    bool headline = false;
    for (const std::string& line : lines) {
        if (line.rfind("PASS  ", 0) == 0)
            ++pass;
        if (line.rfind("FAIL  ", 0) == 0) {
            ++fail;
            if (line.find("gauss/roundtrip-x") != std::string::npos)
                roundtrip_x = true;
            if (line.find("approx/headline") != std::string::npos)
                headline = true;
        }
    }
    CHECK(pass == 34);
    CHECK(fail == 2);
    CHECK(roundtrip_x);
    CHECK(headline);
}

TEST_CASE("bench subcommand")
{
    CliRun r = run_cli({"bench", "--points", "100000"});
    CHECK(r.code == 0);
    std::vector<std::string> lines = split_lines(r.out);
    REQUIRE(lines.size() == 4);

    double ns_reference = 0.0;
    double ns_g2 = 0.0;
    std::vector<std::string> checksums;
    for (const std::string& line : lines) {
        std::vector<std::string> toks = split_tokens(line);
        REQUIRE(toks.size() == 7);
        CHECK(toks[1] == "calls");
        CHECK(toks[2] == "100000");
        CHECK(toks[3] == "ns_per_call");
        CHECK(toks[5] == "checksum");
        double ns = std::stod(toks[4]);
        CHECK(ns > 0.0);
        if (toks[0] == "reference")
            ns_reference = ns;
        if (toks[0] == "g2")
            ns_g2 = ns;
        checksums.push_back(toks[6]);
    }
    /* the closed form runs without iteration; the solver cannot beat it */
    CHECK(ns_g2 < ns_reference);

    /* checksums are grid sums, identical across runs */
    CliRun again = run_cli({"bench", "--points", "100000"});
    std::vector<std::string> lines2 = split_lines(again.out);
    REQUIRE(lines2.size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(split_tokens(lines2[i])[6] == checksums[i]);

    CHECK(run_cli({"bench", "--points", "999"}).code == 2);
}

TEST_CASE("top-level parsing")
{
    CliRun help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("eval") != std::string::npos);

    CliRun sub_help = run_cli({"w", "--help"});
    CHECK(sub_help.code == 0);
    CHECK(sub_help.out.find("--x") != std::string::npos);

    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
}
