#include "crank/qseries.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace crank {

bool QSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return sgn(c) == 0; });
}

QSeries QSeries::truncated(std::size_t new_order) const
{
    if (new_order > trunc_order())
        throw std::invalid_argument("QSeries::truncated: cannot extend a truncated series");
    QSeries r(new_order);
    for (std::size_t n = 0; n <= new_order; ++n) r.coeffs_[n] = coeffs_[n];
    return r;
}

QSeries QSeries::operator-() const
{
    QSeries r(trunc_order());
    for (std::size_t n = 0; n < coeffs_.size(); ++n) r.coeffs_[n] = -coeffs_[n];
    return r;
}

QSeries& QSeries::operator+=(const QSeries& o)
{
    const std::size_t N = std::min(trunc_order(), o.trunc_order());
    coeffs_.resize(N + 1);
    for (std::size_t n = 0; n <= N; ++n) coeffs_[n] += o.coeffs_[n];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o)
{
    const std::size_t N = std::min(trunc_order(), o.trunc_order());
    coeffs_.resize(N + 1);
    for (std::size_t n = 0; n <= N; ++n) coeffs_[n] -= o.coeffs_[n];
    return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b)
{
    const std::size_t N = std::min(a.trunc_order(), b.trunc_order());
    QSeries r(N);
    for (std::size_t i = 0; i <= N; ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; i + j <= N; ++j) {
            if (sgn(b.coeffs_[j]) == 0) continue;
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return r;
}

QSeries operator*(const Rational& c, const QSeries& a)
{
    QSeries r(a.trunc_order());
    if (sgn(c) == 0) return r;
    for (std::size_t n = 0; n < a.coeffs_.size(); ++n) r.coeffs_[n] = c * a.coeffs_[n];
    return r;
}

QSeries QSeries::inverse() const
{
    if (sgn(coeffs_[0]) == 0)
        throw std::domain_error("QSeries::inverse: not invertible (zero constant term)");
    const std::size_t N = trunc_order();
    QSeries r(N);
    const Rational c0_inv = Rational(1) / coeffs_[0];
    r.coeffs_[0] = c0_inv;
    for (std::size_t n = 1; n <= N; ++n) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            if (sgn(coeffs_[k]) == 0) continue;
            acc += coeffs_[k] * r.coeffs_[n - k];
        }
        r.coeffs_[n] = -c0_inv * acc;
    }
    return r;
}

QSeries QSeries::exp() const
{
    if (sgn(coeffs_[0]) != 0)
        throw std::domain_error("QSeries::exp: constant term must be zero");
    const std::size_t N = trunc_order();
    // b' = a' b, so n b_n = sum_{j=1}^{n} j a_j b_{n-j}.
    QSeries r(N);
    r.coeffs_[0] = 1;
    for (std::size_t n = 1; n <= N; ++n) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= n; ++j) {
            if (sgn(coeffs_[j]) == 0) continue;
            acc += Rational(static_cast<unsigned long>(j)) * coeffs_[j] * r.coeffs_[n - j];
        }
        r.coeffs_[n] = acc / Rational(static_cast<unsigned long>(n));
    }
    return r;
}

QSeries QSeries::log() const
{
    if (coeffs_[0] != 1)
        throw std::domain_error("QSeries::log: constant term must be one");
    const std::size_t N = trunc_order();
    // From a = exp(b): n a_n = sum_{j=1}^{n} j b_j a_{n-j}.
    QSeries r(N);
    for (std::size_t n = 1; n <= N; ++n) {
        Rational acc = 0;
        for (std::size_t j = 1; j < n; ++j) {
            if (sgn(r.coeffs_[j]) == 0) continue;
            acc += Rational(static_cast<unsigned long>(j)) * r.coeffs_[j] * coeffs_[n - j];
        }
        r.coeffs_[n] = coeffs_[n] - acc / Rational(static_cast<unsigned long>(n));
    }
    return r;
}

QSeries QSeries::scale_q(unsigned m) const
{
    if (m < 1) throw std::invalid_argument("QSeries::scale_q: m must be >= 1");
    const std::size_t N = trunc_order();
    QSeries r(N);
    for (std::size_t n = 0; n * m <= N; ++n) r.coeffs_[n * m] = coeffs_[n];
    return r;
}

QSeries QSeries::pow(unsigned long e) const
{
    QSeries r(Rational(1), trunc_order());
    QSeries base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return r;
}

void QSeries::write_csv(std::ostream& out) const
{
    out << "exponent,numerator,denominator\n";
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
        out << n << ',' << coeffs_[n].get_num() << ',' << coeffs_[n].get_den() << '\n';
}

std::string QSeries::coefficient_string(std::size_t n) const
{
    const Rational& c = coeffs_.at(n);
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

QSeries phi_series(unsigned k, std::size_t trunc_order)
{
    if (k < 2 || k % 2 != 0)
        throw std::invalid_argument("phi_series: k must be even and >= 2");
    QSeries r(trunc_order);
    for (std::size_t n = 1; n <= trunc_order; ++n) r.set(n, Rational(sigma(k, n)));
    return r;
}

QSeries f_series(unsigned k, std::size_t trunc_order)
{
    if (k < 1) throw std::invalid_argument("f_series: k must be >= 1");
    const QSeries phi = phi_series(2 * k, trunc_order);
    BigInt two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 2 * k);
    return Rational(two_pow) * phi.scale_q(2) - phi;
}

QSeries pochhammer_q(std::size_t trunc_order)
{
    // Factors with n > N are 1 + O(q^{N+1}) and cannot affect the result.
    QSeries r(Rational(1), trunc_order);
    for (std::size_t n = 1; n <= trunc_order; ++n)
        for (std::size_t t = trunc_order; t >= n; --t) {
            Rational c = r[t] - r[t - n];
            r.set(t, std::move(c));
        }
    return r;
}

QSeries pochhammer_minus_q(std::size_t trunc_order)
{
    QSeries r(Rational(1), trunc_order);
    for (std::size_t n = 1; n <= trunc_order; ++n)
        for (std::size_t t = trunc_order; t >= n; --t) {
            Rational c = r[t] + r[t - n];
            r.set(t, std::move(c));
        }
    return r;
}

QSeries eisenstein_series(unsigned k, std::size_t trunc_order)
{
    if (k < 2 || k % 2 != 0)
        throw std::invalid_argument("eisenstein_series: k must be even and >= 2");
    const Rational scale = Rational(2 * k) / bernoulli(k);
    QSeries r = -scale * phi_series(k, trunc_order);
    r.set(0, Rational(1));
    return r;
}

QSeries partition_series(std::size_t trunc_order)
{
    return pochhammer_q(trunc_order).inverse();
}

}  // namespace crank
