#include "crank/asymptotics.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace crank {

namespace {

constexpr double kPi = std::numbers::pi;

long positive_mod(long a, long m)
{
    long r = a % m;
    return r < 0 ? r + m : r;
}

Complex unit_phase(double turns)
{
    // e(turns) = e^{2 pi i turns}
    return std::polar(1.0, 2.0 * kPi * turns);
}

}  // namespace

Rational dedekind_sum(long h, long k)
{
    if (k < 1) throw std::invalid_argument("dedekind_sum: k must be >= 1");
    if (std::gcd(h, k) != 1) throw std::invalid_argument("dedekind_sum: gcd(h, k) must be 1");
    Rational total(0);
    const Rational half(1, 2);
    for (long r = 1; r < k; ++r) {
        // Neither r/k nor hr/k is an integer here, so both sawtooths are
        // fractional-part - 1/2.
        const long hr = positive_mod(h * r, k);
        total += (Rational(r, k) - half) * (Rational(hr, k) - half);
    }
    total.canonicalize();
    return total;
}

MultiplierData multiplier(long h, long k)
{
    if (k < 1) throw std::invalid_argument("multiplier: k must be >= 1");
    if (std::gcd(h, k) != 1) throw std::invalid_argument("multiplier: gcd(h, k) must be 1");
    MultiplierData data;
    data.h = h;
    data.k = k;
    data.h_inv = inv_mod(-h, k);
    data.dedekind = dedekind_sum(h, k);
    const double s = data.dedekind.get_d();
    data.omega = std::polar(1.0, kPi * s);
    const double chi_phase =
        -kPi / 4.0 - kPi * s - kPi * static_cast<double>(data.h_inv - h) / (12.0 * k);
    data.chi = std::polar(1.0, chi_phase);
    return data;
}

double kloosterman_A(long k, long n)
{
    if (k < 1) throw std::invalid_argument("kloosterman_A: k must be >= 1");
    const long modulus = 24 * k;
    const long target = positive_mod(1 - 24 * n, modulus);
    Complex sum{0, 0};
    for (long x = 0; x < modulus; ++x) {
        if ((x * x) % modulus != target) continue;
        const int chi12 = kronecker12(x);
        if (chi12 == 0) continue;
        sum += static_cast<double>(chi12) * unit_phase(static_cast<double>(x) / (12.0 * k));
    }
    if (std::abs(sum.imag()) >= 1e-9)
        throw std::runtime_error("kloosterman_A: imaginary part failed to cancel");
    return std::sqrt(static_cast<double>(k) / 24.0) * sum.real();
}

Rational alpha_coeff(unsigned a, unsigned b, unsigned c)
{
    const unsigned s = a + b + c;
    BigInt num = factorial(2 * s) * EulerNumberTable(2 * b).at(2 * b);
    if ((b + c) % 2 == 1) num = -num;
    BigInt den = factorial(2 * a) * factorial(2 * b) * factorial(c);
    BigInt four_pow;
    mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, s);
    den *= four_pow;
    return make_rational(num, den);
}

double bessel_I_half(int twice_order, double y)
{
    if (twice_order > 1 || twice_order % 2 == 0)
        throw std::invalid_argument("bessel_I_half: order must be a half-integer <= 1/2");
    if (!(y > 0)) throw std::invalid_argument("bessel_I_half: y must be positive");

    const double scale = std::sqrt(2.0 / (kPi * y));
    double above = scale * std::sinh(y);  // I_{1/2}
    if (twice_order == 1) return above;
    double current = scale * std::cosh(y);  // I_{-1/2}
    double nu = -0.5;
    for (int t = -1; t > twice_order; t -= 2) {
        const double below = above + (2.0 * nu / y) * current;
        above = current;
        current = below;
        nu -= 1.0;
    }
    return current;
}

std::vector<AsymptoticTerm> main_term_summands(unsigned ell, unsigned long n, unsigned K)
{
    if (n < 1) throw std::invalid_argument("main_term: n must be >= 1");
    if (K == 0) K = static_cast<unsigned>(std::sqrt(static_cast<double>(n)) / 2.0);

    std::vector<std::array<unsigned, 3>> abc;
    for (unsigned a = 0; a <= ell; ++a)
        for (unsigned b = 0; a + b <= ell; ++b) abc.push_back({a, b, ell - a - b});

    const double m24 = 24.0 * static_cast<double>(n) - 1.0;
    std::vector<AsymptoticTerm> terms;
    terms.reserve(K);
    for (unsigned k = 1; k <= K; ++k) {
        AsymptoticTerm term;
        term.k = k;
        const long shift = (k % 2 == 0) ? static_cast<long>(k) / 2 : 0;
        term.kloosterman = kloosterman_A(2 * static_cast<long>(k), static_cast<long>(n) - shift);
        term.sign = ((k + (k + 1) / 2) % 2 == 0) ? 1 : -1;
        const double y = kPi * std::sqrt(m24) / (12.0 * k);
        for (const auto& [a, b, c] : abc) {
            term.inner_sum +=
                std::pow(2.0 * k / kPi, static_cast<double>(c)) * alpha_coeff(a, b, c).get_d() *
                std::pow(m24, b + 0.5 * c - 0.25) *
                bessel_I_half(1 - 4 * static_cast<int>(b) - 2 * static_cast<int>(c), y);
        }
        // kloosterman_A carries sqrt(2) times the multiplier-sum value the
        // circle-method weights expect; rescale inside the contribution.
        term.contribution = kPi * term.sign * (term.kloosterman / std::sqrt(2.0)) /
                            static_cast<double>(k) * term.inner_sum;
        terms.push_back(term);
    }
    return terms;
}

double main_term(unsigned ell, unsigned long n, unsigned K)
{
    double total = 0.0;
    for (const AsymptoticTerm& term : main_term_summands(ell, n, K)) total += term.contribution;
    return total;
}

double leading_order_twisted(unsigned ell, unsigned long n)
{
    if (n < 1) throw std::invalid_argument("leading_order_twisted: n must be >= 1");
    const double e_abs = std::abs(EulerNumberTable(2 * ell).at(2 * ell).get_d());
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return sign * e_abs * std::pow(2.0, static_cast<double>(ell) - 1.0) *
           std::pow(3.0, static_cast<double>(ell)) *
           std::pow(static_cast<double>(n), static_cast<double>(ell) - 0.5) *
           std::exp(kPi * std::sqrt(static_cast<double>(n) / 6.0));
}

double leading_order_untwisted(unsigned ell, unsigned long n)
{
    if (ell < 1) throw std::invalid_argument("leading_order_untwisted: ell must be >= 1");
    if (n < 1) throw std::invalid_argument("leading_order_untwisted: n must be >= 1");
    const double b_abs = std::abs(bernoulli(2 * ell).get_d());
    return std::pow(2.0, 3.0 * ell - 2.0) * std::pow(3.0, ell - 0.5) *
           (1.0 - std::pow(2.0, 1.0 - 2.0 * static_cast<double>(ell))) * b_abs *
           std::pow(static_cast<double>(n), static_cast<double>(ell) - 1.0) *
           std::exp(kPi * std::sqrt(2.0 * static_cast<double>(n) / 3.0));
}

Complex eta_numeric(Complex tau)
{
    if (!(tau.imag() > 0)) throw std::invalid_argument("eta_numeric: Im tau must be positive");
    const Complex q = std::exp(Complex(0, 2.0 * kPi) * tau);
    const double abs_q = std::abs(q);
    const auto terms = static_cast<unsigned long>(std::ceil(18.0 * std::log(10.0) / (2.0 * kPi * tau.imag()))) + 1;
    Complex product{1, 0};
    Complex q_pow{1, 0};
    for (unsigned long m = 1; m <= terms && std::pow(abs_q, static_cast<double>(m)) > 1e-20; ++m) {
        q_pow *= q;
        product *= (Complex{1, 0} - q_pow);
    }
    return std::exp(Complex(0, kPi / 12.0) * tau) * product;
}

Complex theta_numeric(Complex u, Complex tau)
{
    if (!(tau.imag() > 0)) throw std::invalid_argument("theta_numeric: Im tau must be positive");
    Complex sum{0, 0};
    const Complex i_pi(0, kPi);
    for (unsigned long j = 0; j < 4000; ++j) {
        const double nu = static_cast<double>(j) + 0.5;
        const Complex up = std::exp(i_pi * (nu * nu) * tau + 2.0 * i_pi * nu * (u + 0.5));
        const Complex down = std::exp(i_pi * (nu * nu) * tau - 2.0 * i_pi * nu * (u + 0.5));
        sum += up + down;
        const double size = std::abs(up) + std::abs(down);
        if (size < 1e-18 * (1.0 + std::abs(sum)) && nu * nu * tau.imag() > 2.0 * std::abs(nu * u))
            break;
    }
    return sum;
}

TransformationCheck check_transformations(long h, long k, Complex z, Complex u)
{
    if (!(z.real() > 0))
        throw std::invalid_argument("check_transformations: Re z must be positive");
    const MultiplierData data = multiplier(h, k);
    const Complex i{0, 1};
    const Complex tau_left = (Complex(static_cast<double>(h), 0) + i * z) / static_cast<double>(k);
    const Complex tau_right =
        (Complex(static_cast<double>(data.h_inv), 0) + i / z) / static_cast<double>(k);
    const Complex root = std::sqrt(i / z);

    TransformationCheck check;
    check.eta_deviation = std::abs(eta_numeric(tau_left) - root * data.chi * eta_numeric(tau_right));

    const Complex chi3 = data.chi * data.chi * data.chi;
    const Complex lhs = theta_numeric(u, tau_left);
    const Complex rhs = root * chi3 * std::exp(-kPi * static_cast<double>(k) * u * u / z) *
                        theta_numeric(i * u / z, tau_right);
    check.theta_deviation = std::abs(lhs - rhs);
    return check;
}

double check_shift_lemma(Complex a, Complex b, unsigned ell)
{
    const Complex lhs = theta_numeric(a + static_cast<double>(ell) * b, b);
    const double sign = (ell % 2 == 0) ? 1.0 : -1.0;
    const Complex factor =
        sign * std::exp(Complex(0, -kPi) * static_cast<double>(ell) * static_cast<double>(ell) * b -
                        Complex(0, 2.0 * kPi) * static_cast<double>(ell) * a);
    const Complex rhs = factor * theta_numeric(a, b);
    const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    return std::abs(lhs - rhs) / scale;
}

MultiplierIdentityCheck check_multiplier_identity(long c, long n)
{
    if (c < 1) throw std::invalid_argument("check_multiplier_identity: c must be >= 1");
    MultiplierIdentityCheck check;
    check.rhs_scale = std::sqrt(2.0);

    const long shift = (c % 2 == 0) ? c / 2 : 0;
    const int sign = ((c + (c + 1) / 2) % 2 == 0) ? 1 : -1;
    check.lhs = sign * kloosterman_A(2 * c, n - shift);

    Complex sum{0, 0};
    for (long h = 0; h < 2 * c; ++h) {
        if (std::gcd(h, 2 * c) != 1) continue;
        const long h_inv = inv_mod(-h, 2 * c);  // inverse modulo 4c
        const double omega_phase = kPi * dedekind_sum(h, 2 * c).get_d();
        const long parity = positive_mod((2 * c + 1 - h * h_inv) / 2, 2);
        const double term_sign = parity == 0 ? 1.0 : -1.0;
        const double turns = static_cast<double>(-h - c * h_inv) / 4.0 -
                             static_cast<double>(n) * static_cast<double>(h) / (2.0 * c);
        sum += term_sign * std::polar(1.0, omega_phase) * unit_phase(turns);
    }
    check.rhs = check.rhs_scale * sum;
    check.deviation = std::abs(Complex{check.lhs, 0} - check.rhs);
    return check;
}

}  // namespace crank
