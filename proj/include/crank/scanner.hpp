#pragma once

#include "crank/numeric.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace crank {

struct ScanParams {
    unsigned ell = 0;
    int twist = +1;  // +1 plain moments, -1 twisted
    unsigned long p_max = 11;
    unsigned long a_max = 11;
    std::size_t n_max = 500;  // exponent bound of the exact moment series
};

struct ScanCandidate {
    unsigned long p = 0;
    unsigned long modulus = 0;           // A
    unsigned long residue = 0;           // B < A
    unsigned long verified_index_max = 0;  // every 0 <= n <= this had p | M(An+B)
};

struct ScanReport {
    ScanParams params;
    std::vector<ScanCandidate> candidates;  // ordered by (p, A, B) ascending
};

/// Exhaustive scan for primes p <= p_max and progressions An+B (B < A <=
/// a_max) with p dividing the exact moment at every available progression
/// point. Requires n_max large enough that every progression is tested at
/// at least 20 points, else throws naming the shortfall. Progressions
/// nested inside an already-reported one with the same p are dropped.
/// Every surviving candidate is re-verified against table-based moments
/// (an independent code path from the series formulas).
ScanReport scan(const ScanParams& params);

/// Deterministic JSON rendering (stable key order and layout): identical
/// params always produce identical bytes.
std::string scan_report_json(const ScanReport& report);

/// CSV rows "ell,twist,p,A,B,verified_index_max".
std::string scan_report_csv(const ScanReport& report);

}  // namespace crank
