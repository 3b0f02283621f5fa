#pragma once

#include <functional>
#include <span>

namespace crank {

/// Visits every partition of n exactly once, parts weakly decreasing.
/// n = 0 yields the empty partition. The span is only valid during the call.
void enumerate_partitions(unsigned n, const std::function<void(std::span<const unsigned>)>& visit);

/// Crank of a nonempty partition (parts weakly decreasing): the largest part
/// when no part equals 1, otherwise (#parts larger than the number of ones)
/// minus (the number of ones).
long crank_of(std::span<const unsigned> parts);

}  // namespace crank
