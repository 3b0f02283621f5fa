#pragma once

#include "crank/numeric.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace crank {

// Truncated formal power series in q over exact rationals. A series of
// truncation order N stores the coefficients of q^0 .. q^N; exponents
// beyond N are unknown, so arithmetic between two series truncates to the
// smaller of the two orders. Values are immutable once built (set() is for
// construction only).
class QSeries {
public:
    explicit QSeries(std::size_t trunc_order) : coeffs_(trunc_order + 1) {}
    QSeries(const Rational& constant, std::size_t trunc_order) : coeffs_(trunc_order + 1)
    {
        coeffs_[0] = constant;
    }

    std::size_t trunc_order() const { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t n) const { return coeffs_[n]; }
    void set(std::size_t n, Rational v) { coeffs_.at(n) = std::move(v); }

    bool is_zero() const;
    bool operator==(const QSeries&) const = default;

    /// Drop coefficients beyond new_order (never extends: that would invent
    /// unknown coefficients).
    QSeries truncated(std::size_t new_order) const;

    QSeries operator-() const;
    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const Rational& c, const QSeries& a);
    friend QSeries operator*(const QSeries& a, const Rational& c) { return c * a; }

    /// Multiplicative inverse; requires a nonzero constant term.
    QSeries inverse() const;
    /// exp of a series with zero constant term.
    QSeries exp() const;
    /// log of a series with constant term 1.
    QSeries log() const;
    /// Substitute q -> q^m (m >= 1); truncation order is preserved.
    QSeries scale_q(unsigned m) const;
    QSeries pow(unsigned long e) const;

    /// CSV rows "exponent,numerator,denominator", one per coefficient.
    void write_csv(std::ostream& out) const;
    /// Coefficient n rendered as "num/den" (denominator always explicit).
    std::string coefficient_string(std::size_t n) const;

private:
    std::vector<Rational> coeffs_;
};

/// Phi_{k-1} = sum_{n>=1} sigma_{k-1}(n) q^n for even k >= 2.
QSeries phi_series(unsigned k, std::size_t trunc_order);

/// F_{2k} = 2^{2k} Phi_{2k-1}(q^2) - Phi_{2k-1}(q) for k >= 1.
QSeries f_series(unsigned k, std::size_t trunc_order);

/// (q)_inf = prod_{n>=1} (1 - q^n), truncated.
QSeries pochhammer_q(std::size_t trunc_order);

/// (-q)_inf = prod_{n>=1} (1 + q^n), truncated.
QSeries pochhammer_minus_q(std::size_t trunc_order);

/// E_k = 1 - (2k/B_k) sum_{n>=1} sigma_{k-1}(n) q^n for even k >= 2.
QSeries eisenstein_series(unsigned k, std::size_t trunc_order);

/// 1/(q)_inf = sum p(n) q^n.
QSeries partition_series(std::size_t trunc_order);

}  // namespace crank
