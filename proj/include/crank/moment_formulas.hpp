#pragma once

#include "crank/crank_table.hpp"
#include "crank/qseries.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace crank {

/// Coefficients of exp of an exponential generating series: given a_l for
/// l >= 1 (the exponent is sum_l a_l Z^l / l!), returns c_0..c_rmax with
/// sum_r c_r Z^r / r! = exp(sum_l a_l Z^l / l!), evaluated by the
/// ordered-composition sum
///
///   c_r = sum_{0<=s<=r} (r!/s!) sum_{i_1+...+i_s=r, i_j>0}
///         a_{i_1}...a_{i_s} / (i_1! ... i_s!).
///
/// Indices absent from `a` are zero. All present series must share
/// trunc_order.
std::vector<QSeries> exp_compose(const std::map<unsigned, QSeries>& a, unsigned r_max,
                                 std::size_t trunc_order);

/// C_{2l}(q) = sum_n M_{2l}(n) q^n: the crank moment generating function,
/// exact to q^N. Built as the weighted composition sum over products of
/// Phi series divided by (q)_inf; l = 0 gives the partition-count series.
QSeries crank_moment_series(unsigned ell, std::size_t trunc_order);

/// C_{2l}(-1, q) = sum_n M_{2l}(-1, n) q^n: the twisted crank moment
/// generating function, exact to q^N. Same composition sum over F series,
/// with prefactor (q)_inf / (-q)_inf^2 (the product form (q)_inf (-q)_inf^2
/// contradicts the table moments already at q^2; see the verification
/// report). l = 0 gives the prefactor itself.
QSeries twisted_crank_moment_series(unsigned ell, std::size_t trunc_order);

enum class ThetaVariant { at_zero, at_half };

// Z-Taylor coefficients (EGF convention) of the exp factor in the theta
// product expansions: exp(-2 sum_{l even} Z^l/l! Phi_{l-1}) at_zero,
// exp(-2 sum_{l even} Z^l/l! F_l) at_half.
struct ThetaExpansion {
    ThetaVariant variant;
    std::map<unsigned, QSeries> coeffs;  // even l -> c_l(q); c_0 = 1
};

ThetaExpansion theta_taylor(ThetaVariant variant, unsigned ell_max, std::size_t trunc_order);

struct Mismatch {
    unsigned long n = 0;
    std::string expected;
    std::string got;
};

struct VerificationReport {
    std::string check;
    unsigned ell = 0;       // ell for moment checks, ell_max for theta
    std::size_t n_max = 0;
    bool passed = false;
    std::optional<Mismatch> first_mismatch;
    std::string note;
};

/// Coefficientwise comparison of crank_moment_series(ell) with the table
/// moments sum_m m^{2l} M(m, n) for 1 <= n <= N.
VerificationReport verify_moment_series(const CrankTable& table, unsigned ell, std::size_t N);

/// Same for the twisted series against sum_m (-1)^m m^{2l} M(m, n). For
/// ell = 1 the report also records the q^2 probe showing the product-form
/// prefactor variant disagreeing with the table.
VerificationReport verify_twisted_moment_series(const CrankTable& table, unsigned ell,
                                                std::size_t N);

/// Re-derives the theta Z-expansion from the triple product route: the log
/// of the product is accumulated by the divisor double loop
/// sum_{n,r} (-2) s_r r^{l-1} q^{nr} (s_r = 1 at_zero, (-1)^r at_half) and
/// exponentiated directly as a Z-polynomial, then compared coefficientwise
/// against theta_taylor.
VerificationReport verify_theta_product(ThetaVariant variant, unsigned ell_max, std::size_t N);

}  // namespace crank
