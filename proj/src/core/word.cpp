#include "core/word.hpp"

#include <bit>
#include <stdexcept>

namespace csforge {

Word::Word(std::uint64_t bits, int length)
{
    if (length <= 0 || length > kMaxFactors)
        throw std::invalid_argument("word length out of range");
    if (length < 64 && (bits >> length) != 0)
        throw std::invalid_argument("word bits exceed length");
    bits_ = bits;
    len_ = static_cast<std::uint8_t>(length);
}

Word Word::fromString(std::string_view digits)
{
    if (digits.empty() || digits.size() > kMaxFactors)
        throw std::invalid_argument("word length out of range");
    std::uint64_t bits = 0;
    for (char c : digits) {
        if (c != '0' && c != '1')
            throw std::invalid_argument(std::string("bad word digit '") + c + "'");
        bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return Word(bits, static_cast<int>(digits.size()));
}

int Word::countW() const { return std::popcount(bits_); }

int Word::prefixW(int i) const
{
    if (i <= 0)
        return 0;
    return std::popcount(bits_ >> (len_ - i));
}

Word Word::rotated(int steps) const
{
    int s = ((steps % len_) + len_) % len_;
    if (s == 0)
        return *this;
    std::uint64_t mask = (len_ == 64) ? ~0ull : ((1ull << len_) - 1);
    std::uint64_t r = ((bits_ << s) | (bits_ >> (len_ - s))) & mask;
    return Word(r, len_);
}

Word Word::withFactor(int i, Factor f) const
{
    std::uint64_t bit = 1ull << (len_ - 1 - i);
    std::uint64_t b = (f == Factor::W) ? (bits_ | bit) : (bits_ & ~bit);
    return Word(b, len_);
}

std::string Word::str() const
{
    std::string s(len_, '0');
    for (int i = 0; i < len_; ++i)
        if (factor(i) == Factor::W)
            s[i] = '1';
    return s;
}

int rotationSign(const Word& w, int steps)
{
    int s = ((steps % w.length()) + w.length()) % w.length();
    if (w.totalDegree() % 2 != 0)
        return 1; // odd total degree: every single-factor move is even-graded
    return (w.prefixW(s) % 2 == 0) ? 1 : -1;
}

Canonical canonicalize(const Word& w)
{
    const int len = w.length();
    Word best = w;
    int bestSign = 1;
    for (int r = 1; r < len; ++r) {
        Word rot = w.rotated(r);
        int sign = rotationSign(w, r);
        if (rot == w && sign == -1)
            return Canonical{}; // trace identity forces w = −w
        if (rot.bits() < best.bits()) {
            best = rot;
            bestSign = sign;
        }
    }
    // input = bestSign^{-1} · ... : signs are ±1, so the relating sign is the
    // same either way round.
    return Canonical{best, bestSign};
}

bool isEven(const Word& w)
{
    if (w.countW() == 0)
        return true;
    if (w.countD() == 0)
        return w.length() % 2 == 0;
    // Start scanning at a D so no run wraps around.
    int start = 0;
    while (w.factor(start) == Factor::W)
        ++start;
    int run = 0;
    for (int k = 0; k < w.length(); ++k) {
        Factor f = w.factor((start + k) % w.length());
        if (f == Factor::W) {
            ++run;
        } else {
            if (run % 2 != 0)
                return false;
            run = 0;
        }
    }
    return run % 2 == 0;
}

long cyclicClassSize(const Word& w)
{
    if (!isEven(w))
        throw std::invalid_argument("class size requires an even word");
    if (canonicalize(w).vanishes())
        throw std::invalid_argument("class size requires a nonvanishing word");
    if (w.countD() == 0)
        throw std::invalid_argument("class size requires a nonvanishing word");

    // Contract cyclic W-runs: each "11" becomes one pre-duplication unit.
    int start = 0;
    while (w.factor(start) == Factor::W)
        ++start;
    std::string units;
    int run = 0;
    for (int k = 0; k < w.length(); ++k) {
        Factor f = w.factor((start + k) % w.length());
        if (f == Factor::W) {
            ++run;
        } else {
            units.append(run / 2, '1');
            units.push_back('0');
            run = 0;
        }
    }
    units.append(run / 2, '1');

    // Distinct rotations = primitive period of the unit string.
    const int n = static_cast<int>(units.size());
    for (int p = 1; p <= n; ++p) {
        if (n % p != 0)
            continue;
        bool periodic = true;
        for (int i = 0; periodic && i < n; ++i)
            periodic = units[i] == units[(i + p) % n];
        if (periodic)
            return p;
    }
    return n;
}

} // namespace csforge
