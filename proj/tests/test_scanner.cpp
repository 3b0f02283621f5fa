#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crank/scanner.hpp"

#include <string>

using namespace crank;

TEST_CASE("evidence rule")
{
    ScanParams params;
    params.a_max = 11;
    params.n_max = 10;
    CHECK_THROWS_WITH_AS(scan(params),
                         doctest::Contains("20 required"), std::invalid_argument);
    // boundary: smallest n_max that satisfies 20 points for A = 11, B = 10
    params.n_max = 219;
    params.p_max = 2;
    CHECK_NOTHROW(scan(params));
    params.n_max = 218;
    CHECK_THROWS_AS(scan(params), std::invalid_argument);
}

TEST_CASE("ramanujan progressions at reduced bounds")
{
    // p(5n+4) = 0 mod 5 and p(7n+5) = 0 mod 7 dominate a (7, 7, 350) box
    ScanParams params;
    params.ell = 0;
    params.twist = +1;
    params.p_max = 7;
    params.a_max = 7;
    params.n_max = 350;
    const ScanReport report = scan(params);
    std::vector<ScanCandidate> with_p_eq_a;
    for (const ScanCandidate& c : report.candidates)
        if (c.p == c.modulus) with_p_eq_a.push_back(c);
    REQUIRE(with_p_eq_a.size() == 2);
    CHECK(with_p_eq_a[0].p == 5);
    CHECK(with_p_eq_a[0].modulus == 5);
    CHECK(with_p_eq_a[0].residue == 4);
    CHECK(with_p_eq_a[0].verified_index_max == (350 - 4) / 5);
    CHECK(with_p_eq_a[1].p == 7);
    CHECK(with_p_eq_a[1].modulus == 7);
    CHECK(with_p_eq_a[1].residue == 5);
}

TEST_CASE("no small congruences exist")
{
    ScanParams params;
    params.ell = 0;
    params.p_max = 3;
    params.a_max = 4;
    params.n_max = 500;
    CHECK(scan(params).candidates.empty());
}

TEST_CASE("nested progressions are filtered")
{
    ScanParams params;
    params.ell = 0;
    params.p_max = 5;
    params.a_max = 10;
    params.n_max = 350;
    const ScanReport report = scan(params);
    // (5,5,4) subsumes (5,10,4) and (5,10,9)
    for (const ScanCandidate& c : report.candidates) {
        if (c.p != 5) continue;
        CHECK(c.modulus == 5);
        CHECK(c.residue == 4);
    }
}

TEST_CASE("reports are deterministic and well formed")
{
    ScanParams params;
    params.ell = 1;
    params.twist = -1;
    params.p_max = 5;
    params.a_max = 6;
    params.n_max = 200;
    const ScanReport first = scan(params);
    const ScanReport second = scan(params);
    CHECK(scan_report_json(first) == scan_report_json(second));
    CHECK(scan_report_csv(first) == scan_report_csv(second));

    const std::string json = scan_report_json(first);
    CHECK(json.find("\"schema_version\": 1") != std::string::npos);
    CHECK(json.find("\"twist\": -1") != std::string::npos);

    // M_2(-1, n) is even for every n, so (2, 1, 0) must be reported
    REQUIRE(!first.candidates.empty());
    CHECK(first.candidates.front().p == 2);
    CHECK(first.candidates.front().modulus == 1);
    CHECK(first.candidates.front().residue == 0);

    const std::string csv = scan_report_csv(first);
    CHECK(csv.rfind("ell,twist,p,A,B,verified_index_max\n", 0) == 0);
    CHECK(csv.find("1,-1,2,1,0,200\n") != std::string::npos);
}

TEST_CASE("parameter validation")
{
    ScanParams params;
    params.twist = 0;
    CHECK_THROWS_AS(scan(params), std::invalid_argument);
    params.twist = 1;
    params.a_max = 0;
    CHECK_THROWS_AS(scan(params), std::invalid_argument);
}
