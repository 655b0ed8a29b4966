#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace csforge {

/// One factor of a trace word: the curvature-like factor D (degree 2,
/// digit '0') or the connection factor W (degree 1, digit '1').
enum class Factor : std::uint8_t { D = 0, W = 1 };

/// A word under a graded trace: a cyclic product of D/W factors.
///
/// Factors are packed into a uint64 with factor 0 as the most significant
/// digit, so the packed value *is* the word read as a binary number and
/// word comparisons are integer comparisons. Length is the factor count,
/// totalDegree counts D twice.
class Word {
public:
    static constexpr int kMaxFactors = 62;

    constexpr Word() = default;
    Word(std::uint64_t bits, int length);

    /// Build from a digit string like "0110". Throws std::invalid_argument
    /// on digits outside {0,1} or length 0 / > kMaxFactors.
    static Word fromString(std::string_view digits);

    int length() const { return len_; }
    std::uint64_t bits() const { return bits_; }
    bool empty() const { return len_ == 0; }

    Factor factor(int i) const
    {
        return static_cast<Factor>((bits_ >> (len_ - 1 - i)) & 1u);
    }

    int countW() const;
    int countD() const { return len_ - countW(); }
    int totalDegree() const { return len_ + countD(); }

    /// Number of W factors strictly before position i (prefix degree mod 2).
    int prefixW(int i) const;

    /// Cyclic left rotation: the first `steps` factors move to the end.
    Word rotated(int steps) const;

    Word withFactor(int i, Factor f) const;

    std::string str() const;

    friend bool operator==(const Word&, const Word&) = default;
    /// Plain structural order (length, then value); the term order used for
    /// sums lives in form_sum.hpp.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b)
    {
        if (auto c = a.len_ <=> b.len_; c != 0)
            return c;
        return a.bits_ <=> b.bits_;
    }

private:
    std::uint64_t bits_ = 0;
    std::uint8_t len_ = 0;
};

/// Sign picked up when the first `steps` factors rotate to the end, one
/// factor at a time: a factor of degree p moves past degree T−p for
/// (−1)^{p(T−p)}. For even total degree this is (−1)^{#W moved}; for odd
/// total degree it is always +1.
int rotationSign(const Word& w, int steps);

/// Result of canonicalization. sign == 0 means the word vanishes under the
/// trace (some rotation maps it to itself with sign −1, e.g. "1111");
/// otherwise `word` is the rotation of minimum binary value and `sign` the
/// sign relating the input to it (input = sign · canonical rotation).
struct Canonical {
    Word word;
    int sign = 0;

    bool vanishes() const { return sign == 0; }
};

Canonical canonicalize(const Word& w);

/// True if every maximal cyclic run of W factors has even length (an all-D
/// word is vacuously even). Even words are the curvature-monomial images;
/// odd words only appear inside correction sums.
bool isEven(const Word& w);

/// Class size of an even nonvanishing word counted in pre-duplication
/// units: contract every cyclic run of 2m W's to m single units and count
/// the distinct rotations of the resulting bit string. This matches the
/// multiplicities of the curvature-power expansion (per-partition sizes sum
/// to binomial(n, a)). Throws std::invalid_argument for odd or vanishing
/// words.
long cyclicClassSize(const Word& w);

} // namespace csforge
