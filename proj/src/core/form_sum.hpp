#pragma once

#include "core/rational.hpp"
#include "core/word.hpp"

#include <map>
#include <string>
#include <vector>

namespace csforge {

/// A single coefficient·word term.
struct SignedWord {
    Rational coeff;
    Word word;

    friend bool operator==(const SignedWord&, const SignedWord&) = default;
};

/// Deterministic term order: more D factors first, then ascending binary
/// value. Words of one total degree and one D count share a length, so this
/// is total on the sums we build; length breaks ties across degrees.
struct TermOrder {
    bool operator()(const Word& a, const Word& b) const
    {
        if (a.countD() != b.countD())
            return a.countD() > b.countD();
        if (a.bits() != b.bits())
            return a.bits() < b.bits();
        return a.length() < b.length();
    }
};

/// A finite rational combination of canonical words. Zero coefficients are
/// never stored; iteration follows TermOrder, so equal sums render
/// identically.
class FormSum {
public:
    FormSum() = default;
    static FormSum term(const Rational& c, const Word& w);

    /// coeff += c, erasing the entry when it cancels to zero.
    void add(const Rational& c, const Word& w);

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coeff(const Word& w) const;

    /// Common total degree of the stored words; −1 when empty. The algebra
    /// only ever mixes words of one degree, which degree() asserts.
    int degree() const;

    FormSum& operator+=(const FormSum& o);
    FormSum& operator-=(const FormSum& o);
    FormSum& operator*=(const Rational& c);
    friend FormSum operator+(FormSum a, const FormSum& b) { return a += b; }
    friend FormSum operator-(FormSum a, const FormSum& b) { return a -= b; }
    friend FormSum operator*(const Rational& c, FormSum s) { return s *= c; }
    friend bool operator==(const FormSum&, const FormSum&) = default;

    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    std::vector<SignedWord> termList() const;

    /// Debug/diagnostic rendering like "2·00111 - 1/3·01011".
    std::string str() const;

private:
    std::map<Word, Rational, TermOrder> terms_;
};

/// Leibniz exterior derivative of a single word: each W factor in turn
/// becomes a D with sign (−1)^{degree of the prefix}; every resulting word
/// is canonicalized (vanishing rotations dropped, duplicates merged).
FormSum exteriorDerivative(const Word& w);

/// Termwise derivative of a sum.
FormSum exteriorDerivative(const FormSum& s);

} // namespace csforge
