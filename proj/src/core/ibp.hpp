#pragma once

#include "core/expansion.hpp"
#include "core/form_sum.hpp"

#include <vector>

namespace csforge {

/// One integration-by-parts identity
///
///     source = dtermSign·d(dterm) + evenSide + oddSide
///
/// obtained by relaxing the D factor of `source` at `position` to a W,
/// expanding the derivative of that relaxed word, and solving for the
/// Leibniz term that restores the struck position. Corrections that are
/// cyclically the source itself stay inside evenSide; matrix assembly folds
/// them into the source coefficient.
struct IbpEquation {
    Word source;       ///< canonical even word, implicit coefficient +1
    int position = 0;  ///< which D factor was struck
    Word dterm;        ///< canonical degree-(2n−1) derivative argument
    Rational dtermSign; ///< ±1
    FormSum evenSide;
    FormSum oddSide;
    long sourceClassSize = 0;

    /// (source − evenSide − oddSide)/dtermSign, i.e. the expansion of
    /// d(dterm) the identity asserts. Equations sharing a canonical dterm
    /// must agree here, which is what makes dedup by dterm sound.
    FormSum dContent() const;
};

/// Apply integration by parts at one D position of a canonical even word.
IbpEquation ibpAt(const Word& source, int position, long sourceClassSize);

struct EquationBatch {
    std::vector<IbpEquation> kept; ///< one per distinct canonical dterm
    long rawCount = 0;             ///< a·|classes| before dedup
};

/// All equations of a partition: every D position of every class
/// representative, in representative order then left-to-right position
/// order, deduplicated on the canonical dterm (first occurrence wins).
EquationBatch generateEquations(const PartitionSet& set);

} // namespace csforge
