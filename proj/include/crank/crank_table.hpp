#pragma once

#include "crank/numeric.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace crank {

// Exact table of crank counts M(m, n) for all |m| <= n <= max_n, built
// either by enumerating partitions or by expanding the bivariate product
//
//   prod_{n>=1} (1 - q^n) / ((1 - x q^n)(1 - x^{-1} q^n))
//
// with Laurent-polynomial coefficients in x. The product table is the
// canonical one for every moment identity here; it differs from the
// combinatorial count only in row n = 1 ({-1:1, 0:-1, 1:1} versus {-1:1}).
class CrankTable {
public:
    enum class Source { combinatorial, product };

    static CrankTable combinatorial(unsigned max_n);
    static CrankTable product(unsigned max_n);

    unsigned max_n() const { return static_cast<unsigned>(rows_.size()) - 1; }
    Source source() const { return source_; }
    const char* source_name() const;

    /// M(m, n); zero outside the support window |m| <= n.
    BigInt count(long m, unsigned n) const;

    /// sum_m M(m, n); equals p(n) for both sources.
    BigInt row_sum(unsigned n) const;

    /// sum_m m^k M(m, n).
    BigInt moment(unsigned k, unsigned n) const;

    /// sum_m (-1)^m m^k M(m, n); defined on the product table.
    BigInt twisted_moment(unsigned k, unsigned n) const;

    /// CSV rows "n,m,count,source" for the nonzero entries.
    void write_csv(std::ostream& out) const;

private:
    CrankTable(Source source, unsigned max_n);
    void check_row(unsigned n) const;

    // rows_[n][m + n] = M(m, n), m in [-n, n]
    std::vector<std::vector<BigInt>> rows_;
    Source source_;
};

}  // namespace crank
