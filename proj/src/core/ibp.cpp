#include "core/ibp.hpp"

#include <cassert>
#include <set>
#include <stdexcept>

namespace csforge {

FormSum IbpEquation::dContent() const
{
    FormSum r = FormSum::term(Rational(1), source);
    r -= evenSide;
    r -= oddSide;
    Rational inv = 1 / dtermSign;
    r *= inv;
    return r;
}

IbpEquation ibpAt(const Word& source, int position, long sourceClassSize)
{
    if (position < 0 || position >= source.length() ||
        source.factor(position) != Factor::D)
        throw std::invalid_argument("ibp position must hold a D factor");
    if (!isEven(source))
        throw std::invalid_argument("ibp source must be an even word");
    {
        Canonical canon = canonicalize(source);
        if (canon.vanishes() || canon.word != source)
            throw std::invalid_argument("ibp source must be canonical");
    }

    IbpEquation eq;
    eq.source = source;
    eq.position = position;
    eq.sourceClassSize = sourceClassSize;

    const Word relaxed = source.withFactor(position, Factor::W);
    Canonical canon = canonicalize(relaxed);
    assert(!canon.vanishes()); // odd total degree - no vanishing rotations
    eq.dterm = canon.word;

    // Sign of the Leibniz term that restores the struck D; solving for the
    // source flips everything else through it.
    const int self = (source.prefixW(position) % 2 == 0) ? 1 : -1;
    eq.dtermSign = Rational(self * canon.sign);

    for (int j = 0; j < relaxed.length(); ++j) {
        if (relaxed.factor(j) != Factor::W || j == position)
            continue;
        int leibniz = (relaxed.prefixW(j) % 2 == 0) ? 1 : -1;
        Canonical term = canonicalize(relaxed.withFactor(j, Factor::D));
        if (term.vanishes())
            continue;
        // source = self·d(relaxed) − Σ other terms, then ·self:
        Rational c(-self * leibniz * term.sign);
        if (isEven(term.word))
            eq.evenSide.add(c, term.word);
        else
            eq.oddSide.add(c, term.word);
    }
    return eq;
}

EquationBatch generateEquations(const PartitionSet& set)
{
    if (set.a < 1)
        throw std::invalid_argument("equation generation requires a >= 1");

    EquationBatch batch;
    batch.rawCount = set.rawEquationCount();
    std::set<Word> seen;
    for (const auto& cls : set.classes) {
        for (int p = 0; p < cls.representative.length(); ++p) {
            if (cls.representative.factor(p) != Factor::D)
                continue;
            IbpEquation eq = ibpAt(cls.representative, p, cls.classSize);
            if (seen.insert(eq.dterm).second)
                batch.kept.push_back(std::move(eq));
        }
    }
    return batch;
}

} // namespace csforge
