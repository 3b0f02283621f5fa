#pragma once

#include <gmpxx.h>

#include <vector>

namespace crank {

// Exact arithmetic carriers. mpz/mpq keep every coefficient exact; the
// q-series and moment code never touches floating point.
using BigInt = mpz_class;
using Rational = mpq_class;

// Canonical rational num/den with den > 0 and gcd(|num|, den) = 1.
Rational make_rational(BigInt num, BigInt den);

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);

/// sigma_{k-1}(n) = sum of d^(k-1) over the divisors d of n. Requires n >= 1.
BigInt sigma(unsigned k, unsigned long n);

/// Bernoulli number B_k for even k >= 2, normalized so that B_2 = 1/6
/// (equivalently E_4 = 1 + 240 sum sigma_3(n) q^n comes out right).
Rational bernoulli(unsigned k);

// Euler numbers E_n from 1/cosh(x) = sum E_n x^n / n!; E_n = 0 for odd n.
class EulerNumberTable {
public:
    explicit EulerNumberTable(unsigned max_index);

    const BigInt& at(unsigned n) const;
    unsigned max_index() const { return static_cast<unsigned>(values_.size()) - 1; }

private:
    std::vector<BigInt> values_;
};

/// Kronecker symbol (12/x): 0 when gcd(x,12) > 1, +1 when x = +-1 (mod 12),
/// -1 when x = +-5 (mod 12).
int kronecker12(long x);

/// Least nonnegative inverse of a modulo k, with the convention that for
/// even k the representative is taken modulo 2k (it then inverts a modulo
/// both k and 2k). inv_mod(0, 1) = 0. Throws on non-coprime input.
long inv_mod(long a, long k);

}  // namespace crank
