#include "core/assemble.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace csforge {
namespace {

// Run fn(a) for a = 1..n on up to `jobs` threads (hardware default).
// Results land in slot a−1, so callers see ascending-a order no matter how
// the scheduler interleaves.
template <typename T, typename Fn>
std::vector<T> mapPartitions(int n, int jobs, Fn&& fn)
{
    int j = jobs <= 0 ? static_cast<int>(std::thread::hardware_concurrency()) : jobs;
    j = std::clamp(j, 1, n);

    std::vector<T> out(n);
    if (j == 1) {
        for (int a = 1; a <= n; ++a)
            out[a - 1] = fn(a);
        return out;
    }

    std::atomic<int> next{1};
    std::exception_ptr failure;
    std::mutex failureMutex;
    auto work = [&] {
        for (;;) {
            int a = next.fetch_add(1);
            if (a > n)
                return;
            try {
                out[a - 1] = fn(a);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failureMutex);
                if (!failure)
                    failure = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(j);
    for (int i = 0; i < j; ++i)
        pool.emplace_back(work);
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
    return out;
}

} // namespace

SparseMat stackedSystem(const PartitionSystem& sys)
{
    SparseMat out;
    out.cols = sys.mEven.cols + sys.mOdd.cols;
    out.rows.reserve(sys.mEven.rows.size());
    for (std::size_t r = 0; r < sys.mEven.rows.size(); ++r) {
        auto row = sys.mEven.rows[r];
        for (const auto& [c, q] : sys.mOdd.rows[r])
            row.emplace_back(sys.mEven.cols + c, -q);
        out.rows.push_back(std::move(row));
    }
    return out;
}

PartitionSystem buildSystem(const PartitionSet& set)
{
    PartitionSystem sys;
    sys.n = set.n;
    sys.a = set.a;
    sys.uEven = set.classes;

    EquationBatch batch = generateEquations(set);
    sys.rawCount = batch.rawCount;
    sys.equations = std::move(batch.kept);
    const int m = static_cast<int>(sys.equations.size());
    const int s = static_cast<int>(sys.uEven.size());

    std::map<Word, int> evenIndex;
    for (int i = 0; i < s; ++i)
        evenIndex.emplace(sys.uEven[i].representative, i);

    // Odd columns: every odd word that survives canonicalization, in term
    // order.
    std::map<Word, int, TermOrder> oddIndex;
    for (const auto& eq : sys.equations)
        for (const auto& [w, c] : eq.oddSide)
            oddIndex.emplace(w, 0);
    int oddCount = 0;
    for (auto& [w, idx] : oddIndex)
        idx = oddCount++;
    sys.uOdd.reserve(oddCount);
    for (const auto& [w, idx] : oddIndex)
        sys.uOdd.push_back(w);

    sys.mEven.cols = s;
    sys.mOdd.cols = oddCount;
    sys.mEven.rows.resize(m);
    sys.mOdd.rows.resize(m);
    sys.uD.reserve(m);
    auto byColumn = [](const auto& x, const auto& y) { return x.first < y.first; };
    for (int r = 0; r < m; ++r) {
        const IbpEquation& eq = sys.equations[r];
        const Rational scale(eq.sourceClassSize);

        // Fold self-referencing corrections into the source coefficient:
        // row states  scale·(source − evenSide)  in uEven units.
        FormSum lhs = FormSum::term(Rational(1), eq.source);
        lhs -= eq.evenSide;
        auto& evenRow = sys.mEven.rows[r];
        for (const auto& [w, c] : lhs) {
            if (c == 0)
                continue;
            auto it = evenIndex.find(w);
            if (it == evenIndex.end())
                throw std::logic_error("even correction outside partition set");
            evenRow.emplace_back(
                it->second, c * scale / Rational(sys.uEven[it->second].classSize));
        }
        std::sort(evenRow.begin(), evenRow.end(), byColumn);

        sys.uD.push_back({scale * eq.dtermSign, eq.dterm});

        auto& oddRow = sys.mOdd.rows[r];
        for (const auto& [w, c] : eq.oddSide)
            if (c != 0)
                oddRow.emplace_back(oddIndex.at(w), c * scale);
        std::sort(oddRow.begin(), oddRow.end(), byColumn);
    }
    return sys;
}

PartitionSolution solvePartition(const PartitionSystem& sys)
{
    PartitionSolution sol;
    sol.a = sys.a;
    sol.rawCount = sys.rawCount;
    sol.distinctDterms = static_cast<long>(sys.equations.size());

    RatMatrix kBasis = leftNullSpace(sys.mOdd);
    OnesNormalization norm = solveOnesNormalization(kBasis, sys.mEven);
    sol.kappa = std::move(norm.kappa);
    sol.k = std::move(norm.k);

    for (std::size_t r = 0; r < sys.uD.size(); ++r) {
        if (sol.kappa[r] == 0)
            continue;
        sol.contribution.add(sol.kappa[r] * sys.uD[r].coeff / sol.k, sys.uD[r].word);
    }

    // Null rows of the stacked system are closed derivative relations:
    // y·mEven = y·mOdd = 0 forces d(Σ y_r·uD[r]) = 0.
    RatMatrix relBasis = leftNullSpace(stackedSystem(sys));
    sol.rankStacked = sol.distinctDterms - relBasis.rows();
    for (int i = 0; i < relBasis.rows(); ++i) {
        std::map<Word, Rational, TermOrder> rel;
        Int scale = 1;
        for (int r = 0; r < relBasis.cols(); ++r) {
            Rational c = relBasis.at(i, r) * sys.uD[r].coeff;
            if (c != 0) {
                scale = lcm(scale, c.get_den());
                rel.emplace(sys.uD[r].word, std::move(c));
            }
        }
        Int content = 0;
        for (auto& [w, c] : rel) {
            c *= Rational(scale);
            content = gcd(content, c.get_num());
        }
        if (!rel.empty() && rel.begin()->second < 0)
            content = -content;
        if (content != 0 && content != 1)
            for (auto& [w, c] : rel)
                c /= Rational(content);
        sol.relations.push_back(std::move(rel));
    }
    sol.independent = sol.rankStacked - static_cast<long>(sol.relations.size());
    return sol;
}

CsPotential assemble(int n, int jobs)
{
    if (n < 2)
        throw std::invalid_argument("dimension must be at least 4");
    if (2 * n > Word::kMaxFactors)
        throw std::invalid_argument("dimension exceeds word capacity (62 factors)");

    auto sets = enumeratePartitionSets(n);
    CsPotential pot;
    pot.n = n;
    pot.partitions = mapPartitions<PartitionSolution>(
        n, jobs, [&](int a) { return solvePartition(buildSystem(sets[a])); });
    for (const auto& sol : pot.partitions)
        pot.terms += sol.contribution;
    return pot;
}

VerifyResult verify(int n, const FormSum& potential)
{
    VerifyResult res;
    if (!potential.empty() && potential.degree() != 2 * n - 1) {
        res.pass = false;
        res.residual = FormSum{} - pdExpansion(n);
        return res;
    }
    res.residual = exteriorDerivative(potential) - pdExpansion(n);
    res.pass = res.residual.empty();
    return res;
}

EquationCounts independentEquationCount(int n)
{
    EquationCounts counts;
    auto sets = enumeratePartitionSets(n);
    for (int a = 1; a <= n; ++a) {
        PartitionSolution sol = solvePartition(buildSystem(sets[a]));
        counts.distinctDterms += sol.distinctDterms;
        counts.rankStacked += sol.rankStacked;
        counts.independent += sol.independent;
        counts.potentialTerms += static_cast<long>(sol.contribution.termList().size());
    }
    return counts;
}

MatchStatus comparePotentials(const FormSum& got, const FormSum& want)
{
    FormSum diff = got - want;
    if (diff.empty())
        return MatchStatus::Exact;
    if (exteriorDerivative(diff).empty())
        return MatchStatus::ClosedDifference;
    return MatchStatus::Mismatch;
}

} // namespace csforge
