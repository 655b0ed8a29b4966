#include "core/form_sum.hpp"

#include <cassert>

namespace csforge {

FormSum FormSum::term(const Rational& c, const Word& w)
{
    FormSum s;
    s.add(c, w);
    return s;
}

void FormSum::add(const Rational& c, const Word& w)
{
    if (c == 0)
        return;
    assert(terms_.empty() || w.totalDegree() == degree());
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Rational FormSum::coeff(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

int FormSum::degree() const
{
    return terms_.empty() ? -1 : terms_.begin()->first.totalDegree();
}

FormSum& FormSum::operator+=(const FormSum& o)
{
    for (const auto& [w, c] : o.terms_)
        add(c, w);
    return *this;
}

FormSum& FormSum::operator-=(const FormSum& o)
{
    for (const auto& [w, c] : o.terms_)
        add(-c, w);
    return *this;
}

FormSum& FormSum::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_)
        v *= c;
    return *this;
}

std::vector<SignedWord> FormSum::termList() const
{
    std::vector<SignedWord> out;
    out.reserve(terms_.size());
    for (const auto& [w, c] : terms_)
        out.push_back({c, w});
    return out;
}

std::string FormSum::str() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (first) {
            if (c < 0)
                s += "-";
        } else {
            s += (c < 0) ? " - " : " + ";
        }
        Rational a = abs(c);
        if (a != 1)
            s += toString(a) + "·";
        s += w.str();
        first = false;
    }
    return s;
}

FormSum exteriorDerivative(const Word& w)
{
    FormSum out;
    for (int i = 0; i < w.length(); ++i) {
        if (w.factor(i) != Factor::W)
            continue;
        // Prefix degree mod 2 is just the number of W's before i.
        int leibniz = (w.prefixW(i) % 2 == 0) ? 1 : -1;
        Canonical c = canonicalize(w.withFactor(i, Factor::D));
        if (c.vanishes())
            continue;
        out.add(Rational(leibniz * c.sign), c.word);
    }
    return out;
}

FormSum exteriorDerivative(const FormSum& s)
{
    FormSum out;
    for (const auto& [w, c] : s) {
        FormSum dw = exteriorDerivative(w);
        dw *= c;
        out += dw;
    }
    return out;
}

} // namespace csforge
