#include "crank/numeric.hpp"

#include <stdexcept>
#include <string>

namespace crank {

Rational make_rational(BigInt num, BigInt den)
{
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

BigInt factorial(unsigned long n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned long n, unsigned long k)
{
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt sigma(unsigned k, unsigned long n)
{
    if (k < 1) throw std::invalid_argument("sigma: k must be >= 1");
    if (n < 1) throw std::invalid_argument("sigma: divisor sum undefined for n = 0");
    BigInt total = 0;
    BigInt p;
    for (unsigned long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        mpz_ui_pow_ui(p.get_mpz_t(), d, k - 1);
        total += p;
    }
    return total;
}

Rational bernoulli(unsigned k)
{
    if (k < 2 || k % 2 != 0)
        throw std::invalid_argument("bernoulli: index must be even and >= 2, got " + std::to_string(k));

    // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1, seeded with B_0 = 1.
    std::vector<Rational> b(k + 1);
    b[0] = 1;
    for (unsigned m = 1; m <= k; ++m) {
        Rational acc = 0;
        for (unsigned j = 0; j < m; ++j)
            acc += Rational(binomial(m + 1, j)) * b[j];
        b[m] = -acc / Rational(m + 1);
    }
    return b[k];
}

EulerNumberTable::EulerNumberTable(unsigned max_index) : values_(max_index + 1)
{
    values_[0] = 1;
    // sum over even j <= 2m of C(2m, j) E_j = 0 for m >= 1; odd entries stay 0.
    for (unsigned n = 2; n <= max_index; n += 2) {
        BigInt acc = 0;
        for (unsigned j = 0; j < n; j += 2)
            acc += binomial(n, j) * values_[j];
        values_[n] = -acc;
    }
}

const BigInt& EulerNumberTable::at(unsigned n) const
{
    if (n >= values_.size()) throw std::out_of_range("EulerNumberTable: index beyond table");
    return values_[n];
}

int kronecker12(long x)
{
    long r = x % 12;
    if (r < 0) r += 12;
    switch (r) {
        case 1: case 11: return 1;
        case 5: case 7: return -1;
        default: return 0;
    }
}

long inv_mod(long a, long k)
{
    if (k < 1) throw std::invalid_argument("inv_mod: modulus must be >= 1");
    if (k == 1) return 0;
    const long m = (k % 2 == 0) ? 2 * k : k;
    BigInt inv, am = a, mm = m;
    if (mpz_invert(inv.get_mpz_t(), am.get_mpz_t(), mm.get_mpz_t()) == 0)
        throw std::invalid_argument("inv_mod: " + std::to_string(a) + " not invertible modulo " +
                                    std::to_string(m));
    return inv.get_si();
}

}  // namespace crank
