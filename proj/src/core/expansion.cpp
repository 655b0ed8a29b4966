#include "core/expansion.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace csforge {
namespace {

// Duplicate a pre-expansion bit string into factors: 1 -> "11" (a W pair),
// 0 -> "0". Bits are read MSB-first over n positions.
Word duplicated(std::uint32_t bits, int n)
{
    std::uint64_t packed = 0;
    int len = 0;
    for (int i = n - 1; i >= 0; --i) {
        if ((bits >> i) & 1u) {
            packed = (packed << 2) | 0b11u;
            len += 2;
        } else {
            packed <<= 1;
            len += 1;
        }
    }
    return Word(packed, len);
}

} // namespace

std::vector<PartitionSet> enumeratePartitionSets(int n)
{
    if (n < 1 || n > 31)
        throw std::invalid_argument("partition enumeration requires 1 <= n <= 31");

    std::vector<PartitionSet> sets(n + 1);
    for (int a = 0; a <= n; ++a) {
        sets[a].n = n;
        sets[a].a = a;
    }
    sets[0].vanished = true; // the pure-W class collapses under the trace

    const std::uint32_t limit = 1u << n;
    for (std::uint32_t s = 0; s < limit; ++s) {
        // Representative of a cyclic class iff no rotation is smaller;
        // the class size is the count of distinct rotations.
        std::uint32_t best = s;
        int distinct = 1;
        bool minimal = true;
        for (int r = 1; r < n; ++r) {
            std::uint32_t rot = ((s << r) | (s >> (n - r))) & (limit - 1);
            if (rot < s) {
                minimal = false;
                break;
            }
            if (rot == best)
                break; // full period reached
            ++distinct;
        }
        if (!minimal)
            continue;

        int a = n - std::popcount(s);
        if (a == 0)
            continue; // flagged vanished above
        Word rep = duplicated(s, n);
        assert(!canonicalize(rep).vanishes() && canonicalize(rep).word == rep);
        sets[a].classes.push_back({rep, distinct});
    }

    // The walk emits representatives in increasing value, which is exactly
    // the term order within a partition; keep it explicit anyway.
    for (auto& set : sets)
        std::sort(set.classes.begin(), set.classes.end(),
                  [](const PartitionClass& x, const PartitionClass& y) {
                      return TermOrder{}(x.representative, y.representative);
                  });
    return sets;
}

FormSum pdExpansion(int n)
{
    FormSum sum;
    for (const auto& set : enumeratePartitionSets(n))
        for (const auto& cls : set.classes)
            sum.add(Rational(cls.classSize), cls.representative);
    return sum;
}

std::vector<std::vector<long>> coefficientTable(int n)
{
    std::vector<std::vector<long>> table;
    for (const auto& set : enumeratePartitionSets(n)) {
        std::vector<long> sizes;
        if (set.vanished)
            sizes.push_back(1);
        for (const auto& cls : set.classes)
            sizes.push_back(cls.classSize);
        std::sort(sizes.rbegin(), sizes.rend());
        table.push_back(std::move(sizes));
    }
    return table;
}

} // namespace csforge
