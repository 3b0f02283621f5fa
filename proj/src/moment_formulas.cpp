#include "crank/moment_formulas.hpp"

#include <functional>
#include <stdexcept>

namespace crank {

namespace {

// Ordered compositions of `total` into positive parts drawn from `parts`
// (ascending); visit receives each tuple.
void for_each_composition(unsigned total, const std::vector<unsigned>& parts,
                          std::vector<unsigned>& tuple,
                          const std::function<void(const std::vector<unsigned>&)>& visit)
{
    if (total == 0) {
        visit(tuple);
        return;
    }
    for (unsigned p : parts) {
        if (p > total) break;
        tuple.push_back(p);
        for_each_composition(total - p, parts, tuple, visit);
        tuple.pop_back();
    }
}

}  // namespace

std::vector<QSeries> exp_compose(const std::map<unsigned, QSeries>& a, unsigned r_max,
                                 std::size_t trunc_order)
{
    std::vector<unsigned> keys;
    for (const auto& [l, series] : a) {
        if (l == 0) throw std::invalid_argument("exp_compose: exponent indices start at 1");
        if (series.trunc_order() != trunc_order)
            throw std::invalid_argument("exp_compose: mismatched truncation orders");
        keys.push_back(l);
    }

    std::vector<QSeries> c(r_max + 1, QSeries(trunc_order));
    c[0].set(0, Rational(1));
    std::vector<unsigned> tuple;
    for (unsigned r = 1; r <= r_max; ++r) {
        const BigInt r_fact = factorial(r);
        for_each_composition(r, keys, tuple, [&](const std::vector<unsigned>& parts) {
            Rational constant(r_fact, factorial(parts.size()));
            constant.canonicalize();
            QSeries prod(Rational(1), trunc_order);
            for (unsigned i : parts) {
                constant /= Rational(factorial(i));
                prod = prod * a.at(i);
            }
            c[r] += constant * prod;
        });
    }
    return c;
}

namespace {

// The common double sum of both moment series: over 1 <= k <= ell and
// ordered compositions i_1+...+i_k = ell, the term
// 2^k (2 ell)! / (k! (2 i_1)! ... (2 i_k)!) prod_j base(i_j).
QSeries composition_sum(unsigned ell, std::size_t N,
                        const std::function<const QSeries&(unsigned)>& base)
{
    QSeries total(N);
    const BigInt two_ell_fact = factorial(2 * ell);
    std::vector<unsigned> all_parts;
    for (unsigned i = 1; i <= ell; ++i) all_parts.push_back(i);
    std::vector<unsigned> tuple;
    for_each_composition(ell, all_parts, tuple, [&](const std::vector<unsigned>& parts) {
        const std::size_t k = parts.size();
        BigInt denom = factorial(k);
        for (unsigned i : parts) denom *= factorial(2 * i);
        BigInt num = two_ell_fact;
        mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), k);  // 2^k (2 ell)!
        QSeries prod(Rational(1), N);
        for (unsigned i : parts) prod = prod * base(i);
        total += make_rational(num, denom) * prod;
    });
    return total;
}

}  // namespace

QSeries crank_moment_series(unsigned ell, std::size_t trunc_order)
{
    const QSeries inv_poch = partition_series(trunc_order);
    if (ell == 0) return inv_poch;

    std::vector<QSeries> phi;
    phi.reserve(ell);
    for (unsigned i = 1; i <= ell; ++i) phi.push_back(phi_series(2 * i, trunc_order));
    const QSeries sum = composition_sum(
        ell, trunc_order, [&](unsigned i) -> const QSeries& { return phi[i - 1]; });
    return sum * inv_poch;
}

QSeries twisted_crank_moment_series(unsigned ell, std::size_t trunc_order)
{
    const QSeries prefactor =
        pochhammer_q(trunc_order) * pochhammer_minus_q(trunc_order).pow(2).inverse();
    if (ell == 0) return prefactor;

    std::vector<QSeries> f;
    f.reserve(ell);
    for (unsigned i = 1; i <= ell; ++i) f.push_back(f_series(i, trunc_order));
    const QSeries sum =
        composition_sum(ell, trunc_order, [&](unsigned i) -> const QSeries& { return f[i - 1]; });
    return sum * prefactor;
}

ThetaExpansion theta_taylor(ThetaVariant variant, unsigned ell_max, std::size_t trunc_order)
{
    if (ell_max % 2 != 0) throw std::invalid_argument("theta_taylor: ell_max must be even");

    std::map<unsigned, QSeries> a;
    for (unsigned l = 2; l <= ell_max; l += 2) {
        QSeries base = variant == ThetaVariant::at_zero ? phi_series(l, trunc_order)
                                                        : f_series(l / 2, trunc_order);
        a.emplace(l, Rational(-2) * base);
    }
    std::vector<QSeries> c = exp_compose(a, ell_max, trunc_order);

    ThetaExpansion expansion{variant, {}};
    for (unsigned l = 0; l <= ell_max; ++l) {
        if (l % 2 == 0) {
            expansion.coeffs.emplace(l, std::move(c[l]));
        } else if (!c[l].is_zero()) {
            throw std::logic_error("theta_taylor: odd Z-coefficient is nonzero");
        }
    }
    return expansion;
}

namespace {

VerificationReport compare_series_to_table(std::string check, const CrankTable& table,
                                           unsigned ell, std::size_t N, const QSeries& series,
                                           bool twisted)
{
    VerificationReport report{std::move(check), ell, N, true, std::nullopt, {}};
    for (unsigned n = 1; n <= N; ++n) {
        const BigInt expected =
            twisted ? table.twisted_moment(2 * ell, n) : table.moment(2 * ell, n);
        const Rational& got = series[n];
        if (got.get_den() != 1 || got.get_num() != expected) {
            report.passed = false;
            report.first_mismatch =
                Mismatch{n, expected.get_str(),
                         got.get_num().get_str() + "/" + got.get_den().get_str()};
            break;
        }
    }
    return report;
}

}  // namespace

VerificationReport verify_moment_series(const CrankTable& table, unsigned ell, std::size_t N)
{
    if (N > table.max_n()) throw std::invalid_argument("verify_moment_series: table too short");
    return compare_series_to_table("moment_series_vs_table", table, ell, N,
                                   crank_moment_series(ell, N), false);
}

VerificationReport verify_twisted_moment_series(const CrankTable& table, unsigned ell,
                                                std::size_t N)
{
    if (N > table.max_n())
        throw std::invalid_argument("verify_twisted_moment_series: table too short");
    VerificationReport report = compare_series_to_table(
        "twisted_moment_series_vs_table", table, ell, N, twisted_crank_moment_series(ell, N),
        true);

    if (ell == 1 && N >= 2) {
        // Probe the prefactor variant that multiplies by (-q)_inf^2 instead
        // of dividing: at q^2 it yields 0 while the table moment is 8, which
        // is why the quotient form is the one implemented.
        const QSeries f2 = f_series(1, 2);
        const QSeries literal =
            (Rational(2) * f2) * pochhammer_q(2) * pochhammer_minus_q(2).pow(2);
        const BigInt expected = table.twisted_moment(2, 2);
        report.note = "product-form prefactor gives " + literal[2].get_num().get_str() +
                      " at q^2, table gives " + expected.get_str() +
                      "; quotient prefactor matches";
    }
    return report;
}

VerificationReport verify_theta_product(ThetaVariant variant, unsigned ell_max, std::size_t N)
{
    VerificationReport report{variant == ThetaVariant::at_zero ? "theta_product_at_zero"
                                                               : "theta_product_at_half",
                              ell_max, N, true, std::nullopt, {}};
    if (ell_max % 2 != 0)
        throw std::invalid_argument("verify_theta_product: ell_max must be even");

    // Route one: divisor-sum series through the composition formula.
    const ThetaExpansion expansion = theta_taylor(variant, ell_max, N);

    // Route two: log of the triple product. Expanding
    // log prod (1 - x q^n)(1 - x^{-1} q^n)(1 - q^n)^{-2} with
    // x^r + x^{-r} - 2 = 2 sum_{l even > 0} (rZ)^l / l! gives the exponent
    // coefficients b_l = -2 sum_{n r <= N} s_r r^{l-1} q^{nr} directly from a
    // double loop; the half shift sends x to -x, so s_r = (-1)^r.
    std::vector<QSeries> b(ell_max + 1, QSeries(N));
    for (unsigned long r = 1; r <= N; ++r) {
        const long sign = (variant == ThetaVariant::at_half && r % 2 == 1) ? -1 : 1;
        BigInt r_pow = sign;  // s_r r^{l-1} starting at l = 2
        r_pow *= static_cast<unsigned long>(r);
        for (unsigned l = 2; l <= ell_max; l += 2) {
            const Rational coeff = Rational(-2) * Rational(r_pow);
            for (unsigned long nr = r; nr <= N; nr += r) {
                Rational c = b[l][nr] + coeff;
                b[l].set(nr, std::move(c));
            }
            r_pow *= static_cast<unsigned long>(r * r);
        }
    }

    // Exponentiate the Z-polynomial directly: plain coefficients p_l = b_l/l!,
    // exp(B) = sum_j B^j / j! (B starts at Z^2, so j <= ell_max/2 suffices).
    std::vector<QSeries> plain(ell_max + 1, QSeries(N));
    for (unsigned l = 2; l <= ell_max; l += 2)
        plain[l] = make_rational(1, factorial(l)) * b[l];

    std::vector<QSeries> expo(ell_max + 1, QSeries(N));
    expo[0].set(0, Rational(1));
    std::vector<QSeries> power = expo;  // B^0
    Rational inv_jfact(1);
    for (unsigned j = 1; 2 * j <= ell_max; ++j) {
        std::vector<QSeries> next(ell_max + 1, QSeries(N));
        for (unsigned d1 = 0; d1 <= ell_max; ++d1) {
            if (power[d1].is_zero()) continue;
            for (unsigned d2 = 2; d1 + d2 <= ell_max; d2 += 2)
                next[d1 + d2] += power[d1] * plain[d2];
        }
        power = std::move(next);
        inv_jfact /= Rational(static_cast<unsigned long>(j));
        for (unsigned d = 0; d <= ell_max; ++d) expo[d] += inv_jfact * power[d];
    }

    for (unsigned l = 0; l <= ell_max && report.passed; ++l) {
        const QSeries reproduced = Rational(factorial(l)) * expo[l];
        const QSeries* direct = nullptr;
        QSeries zero(N);
        if (l % 2 == 0) direct = &expansion.coeffs.at(l);
        else direct = &zero;
        if (reproduced == *direct) continue;
        for (unsigned long n = 0; n <= N; ++n) {
            if (reproduced[n] == (*direct)[n]) continue;
            report.passed = false;
            report.first_mismatch = Mismatch{n, direct->coefficient_string(n),
                                             reproduced.coefficient_string(n)};
            report.ell = l;
            break;
        }
    }
    return report;
}

}  // namespace crank
