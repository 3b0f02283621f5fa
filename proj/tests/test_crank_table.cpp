#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crank/crank_table.hpp"
#include "crank/partitions.hpp"
#include "crank/qseries.hpp"

#include <sstream>

using namespace crank;

TEST_CASE("combinatorial rows")
{
    const CrankTable table = CrankTable::combinatorial(5);
    CHECK(table.count(0, 0) == 1);
    CHECK(table.count(-1, 1) == 1);
    CHECK(table.count(0, 1) == 0);
    CHECK(table.count(1, 1) == 0);
    for (long m : {-4L, -2L, 0L, 2L, 4L}) CHECK(table.count(m, 4) == 1);
    CHECK(table.count(1, 4) == 0);
    CHECK(table.row_sum(5) == 7);
    CHECK_THROWS_AS(table.row_sum(6), std::out_of_range);
}

TEST_CASE("product rows")
{
    const CrankTable table = CrankTable::product(30);
    CHECK(table.count(-1, 1) == 1);
    CHECK(table.count(0, 1) == -1);
    CHECK(table.count(1, 1) == 1);
    CHECK(table.count(-2, 2) == 1);
    CHECK(table.count(0, 2) == 0);
    CHECK(table.count(2, 2) == 1);
    CHECK(table.count(3, 2) == 0);  // outside support

    const CrankTable comb = CrankTable::combinatorial(30);
    for (unsigned n = 2; n <= 30; ++n)
        for (long m = -static_cast<long>(n); m <= static_cast<long>(n); ++m)
            CHECK(table.count(m, n) == comb.count(m, n));

    const QSeries p = partition_series(30);
    for (unsigned n = 0; n <= 30; ++n) {
        CHECK(Rational(table.row_sum(n)) == p[n]);
        CHECK(Rational(comb.row_sum(n)) == p[n]);
    }
}

TEST_CASE("moments")
{
    const CrankTable table = CrankTable::product(30);
    CHECK(table.moment(2, 5) == 70);
    CHECK(table.moment(4, 5) == 1414);
    CHECK(table.moment(3, 7) == 0);
    CHECK_THROWS_AS(table.moment(2, 31), std::out_of_range);

    // brute force over the partitions of 5 (the combinatorial and product
    // tables agree away from n = 1)
    BigInt m2 = 0, m4 = 0;
    enumerate_partitions(5, [&](std::span<const unsigned> parts) {
        const long c = crank_of(parts);
        m2 += c * c;
        m4 += BigInt(c * c) * (c * c);
    });
    CHECK(m2 == table.moment(2, 5));
    CHECK(m4 == table.moment(4, 5));

    const QSeries p = partition_series(30);
    for (unsigned n = 1; n <= 30; ++n) {
        // odd moments vanish by the m <-> -m symmetry
        for (unsigned k : {1u, 3u, 5u, 7u}) CHECK(table.moment(k, n) == 0);
        for (long m = 0; m <= static_cast<long>(n); ++m) CHECK(table.count(m, n) == table.count(-m, n));
        // second moment identity M_2(n) = 2 n p(n)
        CHECK(Rational(table.moment(2, n)) == Rational(2 * n) * p[n]);
    }
}

TEST_CASE("twisted moments")
{
    const CrankTable table = CrankTable::product(30);
    CHECK(table.twisted_moment(0, 5) == -5);
    CHECK(table.twisted_moment(2, 1) == -2);
    CHECK(table.twisted_moment(2, 2) == 8);
    for (unsigned n = 1; n <= 30; ++n) {
        for (unsigned k : {1u, 3u, 5u, 7u}) CHECK(table.twisted_moment(k, n) == 0);
        // (-1)^n M_0(-1, n) > 0
        const BigInt signed_count = table.twisted_moment(0, n);
        CHECK((n % 2 == 0 ? signed_count : -signed_count) > 0);
    }

    const CrankTable comb = CrankTable::combinatorial(5);
    CHECK_THROWS_AS(comb.twisted_moment(0, 5), std::invalid_argument);
}

TEST_CASE("csv export")
{
    const CrankTable table = CrankTable::product(1);
    std::ostringstream out;
    table.write_csv(out);
    CHECK(out.str() ==
          "n,m,count,source\n"
          "0,0,1,product\n"
          "1,-1,1,product\n"
          "1,0,-1,product\n"
          "1,1,1,product\n");
}
