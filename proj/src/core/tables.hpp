#pragma once

#include <string>

namespace csforge {

/// One row per even dimension 4..dimMax. Cells run a = 0..n left to right,
/// separated by " | ", listing the class-size multiset of each partition in
/// descending order.
std::string renderCoeffTable(int dimMax);

/// Per-partition equation counts for even dimensions 4..dimMax, one row per
/// partition a = 1..n−1: class count, raw equation count, independent count
/// and the redundant remainder.
std::string renderMcountsTable(int dimMax);

/// Equation totals per dimension for even 14..dimMax, one "D total" row per
/// line, using the counting convention of the published totals.
std::string renderEqcountsTable(int dimMax);

} // namespace csforge
