#include "crank/scanner.hpp"

#include "crank/crank_table.hpp"
#include "crank/moment_formulas.hpp"

#include <nlohmann/json.hpp>

#include <memory>
#include <sstream>
#include <stdexcept>

namespace crank {

namespace {

bool is_prime(unsigned long p)
{
    if (p < 2) return false;
    for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::vector<BigInt> integer_coefficients(const QSeries& series)
{
    std::vector<BigInt> values(series.trunc_order() + 1);
    for (std::size_t n = 0; n < values.size(); ++n) {
        if (series[n].get_den() != 1)
            throw std::logic_error("scan: moment series has a non-integer coefficient");
        values[n] = series[n].get_num();
    }
    return values;
}

}  // namespace

ScanReport scan(const ScanParams& params)
{
    if (params.twist != 1 && params.twist != -1)
        throw std::invalid_argument("scan: twist must be +1 or -1");
    if (params.a_max < 1) throw std::invalid_argument("scan: a_max must be >= 1");

    // Evidence rule: every progression must be testable at >= 20 points.
    // The tightest one is A = a_max, B = a_max - 1.
    const unsigned long worst_points =
        params.n_max >= params.a_max - 1
            ? (params.n_max - (params.a_max - 1)) / params.a_max + 1
            : 0;
    if (worst_points < 20) {
        const unsigned long needed = 20 * params.a_max - 1;
        throw std::invalid_argument(
            "scan: n_max=" + std::to_string(params.n_max) + " gives only " +
            std::to_string(worst_points) + " points for progression A=" +
            std::to_string(params.a_max) + ", B=" + std::to_string(params.a_max - 1) +
            "; 20 required (n_max >= " + std::to_string(needed) + ")");
    }

    const QSeries series = params.twist == 1
                               ? crank_moment_series(params.ell, params.n_max)
                               : twisted_crank_moment_series(params.ell, params.n_max);
    const std::vector<BigInt> values = integer_coefficients(series);

    ScanReport report{params, {}};
    std::unique_ptr<CrankTable> table;  // built lazily for re-verification

    for (unsigned long p = 2; p <= params.p_max; ++p) {
        if (!is_prime(p)) continue;
        for (unsigned long a = 1; a <= params.a_max; ++a) {
            for (unsigned long b = 0; b < a; ++b) {
                bool nested = false;
                for (const ScanCandidate& kept : report.candidates) {
                    if (kept.p == p && a % kept.modulus == 0 && b % kept.modulus == kept.residue) {
                        nested = true;
                        break;
                    }
                }
                if (nested) continue;

                bool all_divisible = true;
                unsigned long index_max = 0;
                for (unsigned long idx = 0;; ++idx) {
                    const unsigned long arg = a * idx + b;
                    if (arg > params.n_max) break;
                    if (!mpz_divisible_ui_p(values[arg].get_mpz_t(), p)) {
                        all_divisible = false;
                        break;
                    }
                    index_max = idx;
                }
                if (!all_divisible) continue;

                if (!table) table = std::make_unique<CrankTable>(
                                CrankTable::product(static_cast<unsigned>(params.n_max)));
                for (unsigned long idx = 0; idx <= index_max; ++idx) {
                    const auto arg = static_cast<unsigned>(a * idx + b);
                    const BigInt check = params.twist == 1
                                             ? table->moment(2 * params.ell, arg)
                                             : table->twisted_moment(2 * params.ell, arg);
                    if (!mpz_divisible_ui_p(check.get_mpz_t(), p))
                        throw std::logic_error(
                            "scan: table re-verification disagrees with the series moments");
                }
                report.candidates.push_back(ScanCandidate{p, a, b, index_max});
            }
        }
    }
    return report;
}

std::string scan_report_json(const ScanReport& report)
{
    nlohmann::ordered_json doc;
    doc["schema_version"] = 1;
    doc["ell"] = report.params.ell;
    doc["twist"] = report.params.twist;
    doc["p_max"] = report.params.p_max;
    doc["a_max"] = report.params.a_max;
    doc["n_max"] = report.params.n_max;
    doc["verified"] = "empirical: divisibility checked for all listed points; nothing is proved";
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const ScanCandidate& c : report.candidates) {
        nlohmann::ordered_json entry;
        entry["p"] = c.p;
        entry["A"] = c.modulus;
        entry["B"] = c.residue;
        entry["verified_index_max"] = c.verified_index_max;
        list.push_back(std::move(entry));
    }
    doc["candidates"] = std::move(list);
    return doc.dump(2) + "\n";
}

std::string scan_report_csv(const ScanReport& report)
{
    std::ostringstream out;
    out << "ell,twist,p,A,B,verified_index_max\n";
    for (const ScanCandidate& c : report.candidates)
        out << report.params.ell << ',' << report.params.twist << ',' << c.p << ',' << c.modulus
            << ',' << c.residue << ',' << c.verified_index_max << '\n';
    return out.str();
}

}  // namespace crank
