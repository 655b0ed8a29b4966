#pragma once

#include "core/expansion.hpp"
#include "core/form_sum.hpp"
#include "core/ibp.hpp"
#include "core/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace csforge {

/// The linear system of one partition, in class-size-weighted units:
/// row r states   mEven[r]·uEven = d(uD[r]) + mOdd[r]·uOdd
/// where uEven[i] carries classSize_i·rep_i, each equation is scaled by its
/// source's class size, uD entries absorb that scale and the dterm sign,
/// and uOdd holds the plain odd canonical words.
struct PartitionSystem {
    int n = 0;
    int a = 0;
    std::vector<PartitionClass> uEven;
    std::vector<SignedWord> uD;
    std::vector<Word> uOdd;
    SparseMat mEven;
    SparseMat mOdd;
    std::vector<IbpEquation> equations;
    long rawCount = 0;
};

PartitionSystem buildSystem(const PartitionSet& set);

/// Rows of [mEven | -mOdd]: the homogeneous part of the system with the
/// derivative column removed. Its left null space is the relation space
/// among the kept equations.
SparseMat stackedSystem(const PartitionSystem& sys);

/// Result of normalizing one partition system: the κ row with κ·mEven =
/// k·(1,…,1), the degree-(2n−1) contribution κ·uD/k, and any null rows that
/// annihilate both matrix sides (archived derivative relations, stored as
/// dterm-word → coefficient, content-normalized with positive leading
/// coefficient in term order).
struct PartitionSolution {
    int a = 0;
    std::vector<Rational> kappa;
    Rational k;
    FormSum contribution;
    std::vector<std::map<Word, Rational, TermOrder>> relations;
    long rawCount = 0;
    long distinctDterms = 0;
    long rankStacked = 0;  ///< rank of [mEven | −mOdd]
    long independent = 0;  ///< rankStacked − #relations
};

PartitionSolution solvePartition(const PartitionSystem& sys);

struct CsPotential {
    int n = 0;
    FormSum terms; ///< degree 2n−1
    std::vector<PartitionSolution> partitions; ///< ascending a = 1..n
};

/// Full potential for dimension 2n; jobs ≤ 0 picks hardware parallelism.
/// Partitions are solved independently and merged in ascending a, so the
/// result does not depend on scheduling.
CsPotential assemble(int n, int jobs = 0);

struct VerifyResult {
    bool pass = false;
    FormSum residual; ///< d(potential) − expansion, empty on pass
};

/// Independent check d(potential) == pdExpansion(n); shares only the word
/// algebra with the assembly path.
VerifyResult verify(int n, const FormSum& potential);

struct EquationCounts {
    long distinctDterms = 0; ///< Σ over partitions of kept equations
    long rankStacked = 0;    ///< Σ of rank[mEven | −mOdd]
    long independent = 0;    ///< Σ of (rank − #relations)
    long potentialTerms = 0; ///< Σ of nonzero contribution terms (= #terms of 𝒦)
};

/// Equation-count totals over a = 1..n, under every convention we track.
/// The headline "equations to be solved" figure is potentialTerms: the
/// number of derivative terms that end up carried with nonzero coefficient.
EquationCounts independentEquationCount(int n);

enum class MatchStatus { Exact, ClosedDifference, Mismatch };

/// Compare two same-degree sums: Exact when equal, ClosedDifference when
/// they differ by a form with vanishing derivative, Mismatch otherwise.
MatchStatus comparePotentials(const FormSum& got, const FormSum& want);

} // namespace csforge
