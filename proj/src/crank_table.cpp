#include "crank/crank_table.hpp"

#include "crank/partitions.hpp"

#include <ostream>
#include <stdexcept>

namespace crank {

CrankTable::CrankTable(Source source, unsigned max_n) : rows_(max_n + 1), source_(source)
{
    for (unsigned n = 0; n <= max_n; ++n) rows_[n].assign(2 * n + 1, BigInt(0));
}

const char* CrankTable::source_name() const
{
    return source_ == Source::combinatorial ? "combinatorial" : "product";
}

CrankTable CrankTable::combinatorial(unsigned max_n)
{
    CrankTable table(Source::combinatorial, max_n);
    table.rows_[0][0] = 1;  // empty partition counted with crank 0
    for (unsigned n = 1; n <= max_n; ++n) {
        auto& row = table.rows_[n];
        enumerate_partitions(n, [&](std::span<const unsigned> parts) {
            row[static_cast<std::size_t>(crank_of(parts) + static_cast<long>(n))] += 1;
        });
    }
    return table;
}

CrankTable CrankTable::product(unsigned max_n)
{
    const unsigned N = max_n;
    const std::size_t width = 2 * static_cast<std::size_t>(N) + 1;  // x^m at index m + N
    std::vector<std::vector<BigInt>> work(N + 1, std::vector<BigInt>(width, BigInt(0)));
    work[0][N] = 1;

    // Multiply the three factor families in, one modulus n at a time. The
    // geometric factors 1/(1 - x^{+-1} q^n) are folded in by an ascending
    // in-place sweep: after it, row t holds sum_j x^{+-j} row_before[t - jn].
    for (unsigned n = 1; n <= N; ++n) {
        for (unsigned t = N; t >= n; --t)  // (1 - q^n)
            for (std::size_t i = 0; i < width; ++i) work[t][i] -= work[t - n][i];
        for (unsigned t = n; t <= N; ++t)  // 1/(1 - x q^n)
            for (std::size_t i = 1; i < width; ++i) work[t][i] += work[t - n][i - 1];
        for (unsigned t = n; t <= N; ++t)  // 1/(1 - x^{-1} q^n)
            for (std::size_t i = 0; i + 1 < width; ++i) work[t][i] += work[t - n][i + 1];
    }

    CrankTable table(Source::product, max_n);
    for (unsigned n = 0; n <= N; ++n) {
        for (std::size_t i = 0; i < width; ++i) {
            const long m = static_cast<long>(i) - static_cast<long>(N);
            if (m < -static_cast<long>(n) || m > static_cast<long>(n)) {
                if (work[n][i] != 0)
                    throw std::logic_error("crank product expansion escaped the |m| <= n window");
                continue;
            }
            table.rows_[n][static_cast<std::size_t>(m + static_cast<long>(n))] = work[n][i];
        }
    }
    return table;
}

void CrankTable::check_row(unsigned n) const
{
    if (n >= rows_.size()) throw std::out_of_range("CrankTable: n beyond table");
}

BigInt CrankTable::count(long m, unsigned n) const
{
    check_row(n);
    if (m < -static_cast<long>(n) || m > static_cast<long>(n)) return BigInt(0);
    return rows_[n][static_cast<std::size_t>(m + static_cast<long>(n))];
}

BigInt CrankTable::row_sum(unsigned n) const
{
    check_row(n);
    BigInt total = 0;
    for (const BigInt& c : rows_[n]) total += c;
    return total;
}

BigInt CrankTable::moment(unsigned k, unsigned n) const
{
    check_row(n);
    BigInt total = 0, mk;
    for (long m = -static_cast<long>(n); m <= static_cast<long>(n); ++m) {
        const BigInt& c = rows_[n][static_cast<std::size_t>(m + static_cast<long>(n))];
        if (c == 0) continue;
        mpz_pow_ui(mk.get_mpz_t(), BigInt(m).get_mpz_t(), k);
        total += mk * c;
    }
    return total;
}

BigInt CrankTable::twisted_moment(unsigned k, unsigned n) const
{
    if (source_ != Source::product)
        throw std::invalid_argument("twisted_moment: defined on the product table");
    check_row(n);
    BigInt total = 0, mk;
    for (long m = -static_cast<long>(n); m <= static_cast<long>(n); ++m) {
        const BigInt& c = rows_[n][static_cast<std::size_t>(m + static_cast<long>(n))];
        if (c == 0) continue;
        mpz_pow_ui(mk.get_mpz_t(), BigInt(m).get_mpz_t(), k);
        if (m % 2 != 0) total -= mk * c;
        else total += mk * c;
    }
    return total;
}

void CrankTable::write_csv(std::ostream& out) const
{
    out << "n,m,count,source\n";
    for (unsigned n = 0; n < rows_.size(); ++n)
        for (long m = -static_cast<long>(n); m <= static_cast<long>(n); ++m) {
            const BigInt& c = rows_[n][static_cast<std::size_t>(m + static_cast<long>(n))];
            if (c == 0) continue;
            out << n << ',' << m << ',' << c << ',' << source_name() << '\n';
        }
}

}  // namespace crank
