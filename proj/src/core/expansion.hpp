#pragma once

#include "core/form_sum.hpp"

#include <vector>

namespace csforge {

/// One cyclic class inside a partition set: canonical even representative
/// (post-duplication) and its pre-duplication class size.
struct PartitionClass {
    Word representative;
    long classSize = 0;
};

/// All cyclic classes of arrangements of a D-factors and (n−a) doubled
/// W-pairs. For a = 0 the single class (the pure W word) vanishes under the
/// trace; it is reported via the vanished flag and classes stays empty.
struct PartitionSet {
    int n = 0;
    int a = 0;
    std::vector<PartitionClass> classes;
    bool vanished = false;

    long rawEquationCount() const { return a * static_cast<long>(classes.size()); }
};

/// Partition sets for a = 0..n, each enumerated by walking the 2^n binary
/// strings in increasing value and keeping rotation minima as class
/// representatives. Requires 1 ≤ n ≤ 31.
std::vector<PartitionSet> enumeratePartitionSets(int n);

/// The degree-2n expansion Σ k_i·s_i over all nonvanishing classes of every
/// partition; the pure-D word carries coefficient 1.
FormSum pdExpansion(int n);

/// Class-size multisets per a (descending within each a), a = 0..n; the
/// vanished a = 0 class still counts 1, matching the published table.
std::vector<std::vector<long>> coefficientTable(int n);

} // namespace csforge
