#include "crank/partitions.hpp"

#include <stdexcept>
#include <vector>

namespace crank {

namespace {

void generate(unsigned remaining, unsigned max_part, std::vector<unsigned>& parts,
              const std::function<void(std::span<const unsigned>)>& visit)
{
    if (remaining == 0) {
        visit(parts);
        return;
    }
    for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
        parts.push_back(p);
        generate(remaining - p, p, parts, visit);
        parts.pop_back();
    }
}

}  // namespace

void enumerate_partitions(unsigned n, const std::function<void(std::span<const unsigned>)>& visit)
{
    std::vector<unsigned> parts;
    parts.reserve(n);
    generate(n, n == 0 ? 1 : n, parts, visit);
}

long crank_of(std::span<const unsigned> parts)
{
    if (parts.empty()) throw std::invalid_argument("crank: empty partition");
    unsigned ones = 0;
    for (unsigned p : parts)
        if (p == 1) ++ones;
    if (ones == 0) return static_cast<long>(parts.front());
    long larger = 0;
    for (unsigned p : parts)
        if (p > ones) ++larger;
    return larger - static_cast<long>(ones);
}

}  // namespace crank
