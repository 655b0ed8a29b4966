#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/expansion.hpp"
#include "core/tables.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

using namespace csforge;

namespace {

// Brute regeneration on digit strings: walk all n-bit unit strings
// (1 = a doubled omega pair, 0 = a D), group by unit rotation, duplicate,
// and take the minimum over factor rotations as the representative.

std::string duplicated(const std::string& units)
{
    std::string out;
    for (char c : units)
        out += (c == '1') ? "11" : "0";
    return out;
}

std::string minFactorRotation(const std::string& w)
{
    std::string best = w;
    for (std::size_t r = 1; r < w.size(); ++r)
        best = std::min(best, w.substr(r) + w.substr(0, r));
    return best;
}

struct BruteSet {
    std::map<std::string, long> classes; // canonical duplicated word -> size
};

std::vector<BruteSet> bruteSets(int n)
{
    std::vector<BruteSet> out(static_cast<std::size_t>(n) + 1);
    std::set<std::string> seen;
    for (long bits = 0; bits < (1L << n); ++bits) {
        std::string u(static_cast<std::size_t>(n), '0');
        for (int i = 0; i < n; ++i)
            if ((bits >> (n - 1 - i)) & 1)
                u[static_cast<std::size_t>(i)] = '1';
        const std::string key = minFactorRotation(u);
        if (!seen.insert(key).second)
            continue;
        std::set<std::string> rotations;
        for (std::size_t r = 0; r < u.size(); ++r)
            rotations.insert(u.substr(r) + u.substr(0, r));
        const int a = n - static_cast<int>(std::count(u.begin(), u.end(), '1'));
        if (a == 0)
            continue; // the pure-omega class vanishes under the trace
        out[static_cast<std::size_t>(a)].classes[minFactorRotation(duplicated(key))] =
            static_cast<long>(rotations.size());
    }
    return out;
}

long binomial(int n, int k)
{
    long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace

TEST_CASE("partition sets match the brute walk")
{
    for (int n = 2; n <= 8; ++n) {
        const std::vector<PartitionSet> sets = enumeratePartitionSets(n);
        const std::vector<BruteSet> expect = bruteSets(n);
        REQUIRE(sets.size() == static_cast<std::size_t>(n) + 1);

        CHECK(sets[0].vanished);
        CHECK(sets[0].classes.empty());
        for (int a = 0; a <= n; ++a) {
            const PartitionSet& set = sets[static_cast<std::size_t>(a)];
            CHECK(set.n == n);
            CHECK(set.a == a);
            if (a == 0)
                continue;
            CHECK_FALSE(set.vanished);
            std::map<std::string, long> got;
            for (const PartitionClass& c : set.classes) {
                // Representatives arrive canonical, even and nonvanishing.
                CHECK(isEven(c.representative));
                const Canonical canon = canonicalize(c.representative);
                CHECK_FALSE(canon.vanishes());
                CHECK(canon.word == c.representative);
                CHECK(canon.sign == 1);
                got[c.representative.str()] = c.classSize;
            }
            CAPTURE(n);
            CAPTURE(a);
            CHECK(got == expect[static_cast<std::size_t>(a)].classes);
            CHECK(set.rawEquationCount() ==
                  a * static_cast<long>(set.classes.size()));
        }
    }
}

TEST_CASE("class sizes sum to binomials and powers of two")
{
    for (int n = 2; n <= 10; ++n) {
        const std::vector<PartitionSet> sets = enumeratePartitionSets(n);
        long total = 1; // the vanished a=0 class still counts one string
        for (int a = 1; a <= n; ++a) {
            long inSet = 0;
            for (const PartitionClass& c : sets[static_cast<std::size_t>(a)].classes)
                inSet += c.classSize;
            CHECK(inSet == binomial(n, a));
            total += inSet;
        }
        CHECK(total == (1L << n));
    }
}

TEST_CASE("expansion sums class-size multiples of the representatives")
{
    for (int n = 2; n <= 8; ++n) {
        const std::vector<PartitionSet> sets = enumeratePartitionSets(n);
        FormSum expect;
        for (const PartitionSet& set : sets)
            for (const PartitionClass& c : set.classes)
                expect.add(c.classSize, c.representative);
        const FormSum got = pdExpansion(n);
        CHECK(got == expect);
        CHECK(got.degree() == 2 * n);
        // The pure-D class normalizes the leading coefficient to one.
        CHECK(got.coeff(Word(0, n)) == 1);
    }
}

TEST_CASE("frozen expansions")
{
    CHECK(pdExpansion(2).str() == "00 + 2·011");
    CHECK(pdExpansion(3).str() == "000 + 3·0011 + 3·01111");
    CHECK(pdExpansion(4).str() == "0000 + 4·00011 + 4·001111 + 2·011011 + 4·0111111");
}

TEST_CASE("coefficient table matches the published rows")
{
    using Cells = std::vector<std::vector<long>>;
    CHECK(coefficientTable(2) == Cells{{1}, {2}, {1}});
    CHECK(coefficientTable(3) == Cells{{1}, {3}, {3}, {1}});
    CHECK(coefficientTable(4) == Cells{{1}, {4}, {4, 2}, {4}, {1}});
    CHECK(coefficientTable(5) == Cells{{1}, {5}, {5, 5}, {5, 5}, {5}, {1}});
    CHECK(coefficientTable(6) ==
          Cells{{1}, {6}, {6, 6, 3}, {6, 6, 6, 2}, {6, 6, 3}, {6}, {1}});
    CHECK(coefficientTable(7) ==
          Cells{{1}, {7}, {7, 7, 7}, {7, 7, 7, 7, 7}, {7, 7, 7, 7, 7}, {7, 7, 7},
                {7}, {1}});
    CHECK(coefficientTable(8) ==
          Cells{{1},
                {8},
                {8, 8, 8, 4},
                {8, 8, 8, 8, 8, 8, 8},
                {8, 8, 8, 8, 8, 8, 8, 8, 4, 2},
                {8, 8, 8, 8, 8, 8, 8},
                {8, 8, 8, 4},
                {8},
                {1}});
}

TEST_CASE("coefficient table render")
{
    CHECK(renderCoeffTable(8) == " 4  1 | 2 | 1\n"
                                 " 6  1 | 3 | 3 | 1\n"
                                 " 8  1 | 4 | 4 2 | 4 | 1\n");
}

TEST_CASE("dimension bounds")
{
    CHECK_THROWS_AS(enumeratePartitionSets(0), std::invalid_argument);
    CHECK_THROWS_AS(enumeratePartitionSets(32), std::invalid_argument);
    CHECK_NOTHROW(enumeratePartitionSets(1));
}
