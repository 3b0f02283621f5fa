#pragma once

#include "crank/numeric.hpp"

#include <complex>
#include <vector>

namespace crank {

using Complex = std::complex<double>;

/// Dedekind sum s(h, k) = sum_{r=1}^{k-1} ((r/k)) ((hr/k)) with the sawtooth
/// ((x)) = x - floor(x) - 1/2 for non-integer x and 0 at integers. Exact;
/// requires gcd(h, k) = 1, k >= 1.
Rational dedekind_sum(long h, long k);

struct MultiplierData {
    long h = 0;
    long k = 1;
    long h_inv = 0;     // inverse of -h modulo k (modulo 2k when k is even)
    Rational dedekind;  // s(h, k)
    Complex omega;      // e^{pi i s(h,k)}
    Complex chi;        // e^{-i pi/4} omega^{-1} e^{-pi i (h_inv - h)/(12 k)}
};

MultiplierData multiplier(long h, long k);

/// A_k(n) = sqrt(k/24) sum_{x mod 24k, x^2 = 1-24n} (12/x) e(x/(12k)),
/// summed in ascending x; the imaginary part (cancelling in x <-> -x pairs)
/// is checked against 1e-9 and discarded. Note this carries sqrt(2) times
/// the classical multiplier-sum normalization.
double kloosterman_A(long k, long n);

/// alpha(a,b,c) = (2(a+b+c))! (-1)^{b+c} E_{2b} / ((2a)! (2b)! c! 4^{a+b+c}).
Rational alpha_coeff(unsigned a, unsigned b, unsigned c);

/// Modified Bessel I_nu for half-integer nu <= 1/2, passed as twice_order
/// (1 -> 1/2, -1 -> -1/2, -3 -> -3/2, ...): closed sinh/cosh forms for
/// +-1/2, lower orders via I_{nu-1} = I_{nu+1} + (2 nu / y) I_nu. y > 0.
double bessel_I_half(int twice_order, double y);

// One k-summand of the circle-method sum: the Kloosterman value at the
// parity-shifted argument, the sign (-1)^{k + floor((k+1)/2)}, and the
// Bessel-weighted inner sum over a+b+c = l.
struct AsymptoticTerm {
    unsigned k = 0;
    double kloosterman = 0;  // kloosterman_A(2k, n - shift)
    int sign = 1;
    double inner_sum = 0;
    double contribution = 0;  // pi * sign * (kloosterman/sqrt 2) / k * inner_sum
};

/// The k-summands of the circle-method approximation to the twisted crank
/// moment M_{2l}(-1, n), ascending in k. The inner sum is
/// sum_{a+b+c=l} (2k/pi)^c alpha(a,b,c) (24n-1)^{b+c/2-1/4}
/// I_{1/2-2b-c}(pi sqrt(24n-1)/(12k)); the 1/pi^c normalizes the c-weight
/// the same way the u-Taylor expansion of e^{pi k u^2 / z} produces it
/// (with the bare (2k)^c weight the sum misses the exact moments by a
/// relative n^{-1/2}; with this one the error decays circle-method fast).
/// K = 0 selects floor(sqrt(n)/2) summands.
std::vector<AsymptoticTerm> main_term_summands(unsigned ell, unsigned long n, unsigned K = 0);

/// Sum of the contributions of main_term_summands, in ascending k.
double main_term(unsigned ell, unsigned long n, unsigned K = 0);

/// (-1)^n |E_{2l}| 2^{l-1} 3^l n^{l-1/2} e^{pi sqrt(n/6)}.
double leading_order_twisted(unsigned ell, unsigned long n);

/// 2^{3l-2} 3^{l-1/2} (1 - 2^{1-2l}) |B_{2l}| n^{l-1} e^{pi sqrt(2n/3)}, l >= 1.
double leading_order_untwisted(unsigned ell, unsigned long n);

/// Dedekind eta from the q-product, truncated once |q|^T < 1e-18. Im tau > 0.
Complex eta_numeric(Complex tau);

/// Jacobi theta sum_{nu in Z + 1/2} e^{pi i nu^2 tau + 2 pi i nu (u + 1/2)}
/// = -2 sin(pi u) q^{1/8} prod_{n>=1} (1-q^n)(1-x q^n)(1-x^{-1} q^n),
/// truncated symmetrically once terms drop below 1e-18 relative. Im tau > 0.
Complex theta_numeric(Complex u, Complex tau);

struct TransformationCheck {
    double eta_deviation = 0;
    double theta_deviation = 0;
    double max_deviation() const { return std::max(eta_deviation, theta_deviation); }
};

/// Evaluates both sides of the eta and theta modular transformation laws
///   eta((h+iz)/k)  = sqrt(i/z) chi   eta((h' + i/z)/k)
///   theta(u; (h+iz)/k) = sqrt(i/z) chi^3 e^{-pi k u^2 / z}
///                        theta(iu/z; (h' + i/z)/k)
/// with h' = h_inv and principal square root, and reports the absolute
/// deviations. Re z > 0.
TransformationCheck check_transformations(long h, long k, Complex z, Complex u);

/// Deviation between theta(a + l b; b) and
/// (-1)^l e^{-pi i l^2 b - 2 pi i l a} theta(a; b), relative to the larger
/// side's magnitude when that exceeds 1 (the sides grow like e^{pi l^2 Im b}).
double check_shift_lemma(Complex a, Complex b, unsigned ell);

struct MultiplierIdentityCheck {
    double lhs = 0;         // signed Kloosterman value from kloosterman_A
    Complex rhs{0, 0};      // multiplier sum over h, scaled by rhs_scale
    double rhs_scale = 0;   // sqrt(2): kloosterman_A normalization over the omega-sum one
    double deviation = 0;   // |lhs - rhs|
};

/// Checks the closed identity between the signed shifted Kloosterman value
/// (-1)^{c + floor((c+1)/2)} A_{2c}(n - c(1+(-1)^c)/4) and the multiplier
/// sum over h mod 2c of omega_{h,2c} (-1)^{(2c+1-h h')/2}
/// e((-h - c h')/4 - nh/(2c)), h' = inverse of -h mod 4c. The omega sum
/// carries the classical normalization, so it is scaled by sqrt(2) before
/// comparing.
MultiplierIdentityCheck check_multiplier_identity(long c, long n);

}  // namespace crank
