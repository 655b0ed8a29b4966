#include "core/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <utility>

namespace csforge {
namespace {

constexpr int kNoCol = std::numeric_limits<int>::max();

// Sparse integer row: (column, value) sorted by column, values nonzero.
// Rows only ever get scaled by rationals, which leaves row spaces alone, so
// the integer representation is lossless for rank/null-space work.
using SparseRow = std::vector<std::pair<int, Int>>;

int leadingCol(const SparseRow& r) { return r.empty() ? kNoCol : r.front().first; }

const Int* findCol(const SparseRow& r, int col)
{
    auto it = std::lower_bound(r.begin(), r.end(), col,
                               [](const auto& e, int c) { return e.first < c; });
    return (it != r.end() && it->first == col) ? &it->second : nullptr;
}

void contentReduce(SparseRow& r)
{
    Int g = 0;
    for (const auto& [c, v] : r) {
        g = gcd(g, v); // GMP gcd is nonnegative
        if (g == 1)
            return;
    }
    if (g > 1)
        for (auto& [c, v] : r)
            v /= g;
}

// a·x + b·y with cancellations dropped.
SparseRow combine(const Int& a, const SparseRow& x, const Int& b, const SparseRow& y)
{
    SparseRow out;
    out.reserve(x.size() + y.size());
    auto ix = x.begin();
    auto iy = y.begin();
    while (ix != x.end() || iy != y.end()) {
        if (iy == y.end() || (ix != x.end() && ix->first < iy->first)) {
            Int v = a * ix->second;
            if (v != 0)
                out.emplace_back(ix->first, std::move(v));
            ++ix;
        } else if (ix == x.end() || iy->first < ix->first) {
            Int v = b * iy->second;
            if (v != 0)
                out.emplace_back(iy->first, std::move(v));
            ++iy;
        } else {
            Int v = a * ix->second + b * iy->second;
            if (v != 0)
                out.emplace_back(ix->first, std::move(v));
            ++ix;
            ++iy;
        }
    }
    return out;
}

// Clear denominators of one matrix row into an integer row (columns shifted
// by colOffset). Content-reduced unless the caller needs the applied
// denominator scale (to extend the row consistently), in which case the
// scale is reported and the row left unreduced.
SparseRow integerRow(const RatMatrix& m, int r, int colOffset = 0, Int* appliedScale = nullptr)
{
    Int scale = 1;
    for (int c = 0; c < m.cols(); ++c)
        scale = lcm(scale, m.at(r, c).get_den());
    SparseRow out;
    for (int c = 0; c < m.cols(); ++c) {
        const Rational& q = m.at(r, c);
        if (q == 0)
            continue;
        out.emplace_back(colOffset + c, Int(q.get_num() * (scale / q.get_den())));
    }
    if (appliedScale != nullptr)
        *appliedScale = scale;
    else
        contentReduce(out);
    return out;
}

// Same, from a sparse source row.
SparseRow integerRow(const std::vector<std::pair<int, Rational>>& src,
                     Int* appliedScale = nullptr)
{
    assert(std::is_sorted(src.begin(), src.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; }));
    Int scale = 1;
    for (const auto& [c, q] : src)
        scale = lcm(scale, q.get_den());
    SparseRow out;
    out.reserve(src.size());
    for (const auto& [c, q] : src) {
        if (q == 0)
            continue;
        out.emplace_back(c, Int(q.get_num() * (scale / q.get_den())));
    }
    if (appliedScale != nullptr)
        *appliedScale = scale;
    else
        contentReduce(out);
    return out;
}

// Fraction-free forward elimination, pivots restricted to columns
// < pivotCols. Pivot rule: first nonzero column, then smallest row index.
// Returns pivots as (row, col) in elimination order.
std::vector<std::pair<int, int>> forwardEliminate(std::vector<SparseRow>& rows, int pivotCols)
{
    const int n = static_cast<int>(rows.size());
    std::vector<char> used(n, 0);
    std::vector<std::pair<int, int>> pivots;
    for (;;) {
        int bestCol = kNoCol;
        int bestRow = -1;
        for (int i = 0; i < n; ++i) {
            if (used[i])
                continue;
            int lc = leadingCol(rows[i]);
            if (lc < bestCol) {
                bestCol = lc;
                bestRow = i;
            }
        }
        if (bestRow < 0 || bestCol >= pivotCols)
            break;
        used[bestRow] = 1;
        pivots.emplace_back(bestRow, bestCol);
        const Int pv = rows[bestRow].front().second;
        for (int i = 0; i < n; ++i) {
            if (used[i] || leadingCol(rows[i]) != bestCol)
                continue;
            Int iv = rows[i].front().second;
            rows[i] = combine(pv, rows[i], -iv, rows[bestRow]);
            contentReduce(rows[i]);
        }
    }
    return pivots;
}

// Jordan step on the pivot rows: make every pivot column single-entry.
void backSubstitute(std::vector<SparseRow>& rows, const std::vector<std::pair<int, int>>& pivots)
{
    for (int pi = static_cast<int>(pivots.size()) - 1; pi >= 0; --pi) {
        const auto [pr, pc] = pivots[pi];
        const Int pv = rows[pr].front().second;
        for (int qi = 0; qi < pi; ++qi) {
            const int qr = pivots[qi].first;
            const Int* qv = findCol(rows[qr], pc);
            if (!qv)
                continue;
            rows[qr] = combine(pv, rows[qr], Int(-*qv), rows[pr]);
            contentReduce(rows[qr]);
        }
    }
}

// Shared tail of the two leftNullSpace overloads: each input row r arrives
// as (m-part | scale·e_r) so whole-row operations keep the (x·m | x) shape.
RatMatrix leftNullSpaceFromRows(std::vector<SparseRow>&& rows, int C)
{
    const int R = static_cast<int>(rows.size());
    forwardEliminate(rows, C);

    std::vector<SparseRow> nullRows;
    for (auto& row : rows)
        if (!row.empty() && row.front().first >= C)
            nullRows.push_back(std::move(row));

    // Canonical basis: RREF over the identity-part columns.
    auto pivots = forwardEliminate(nullRows, C + R);
    backSubstitute(nullRows, pivots);
    std::sort(pivots.begin(), pivots.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });

    RatMatrix basis(static_cast<int>(pivots.size()), R);
    for (int i = 0; i < basis.rows(); ++i) {
        const SparseRow& row = nullRows[pivots[i].first];
        const Int& lead = row.front().second;
        for (const auto& [c, v] : row)
            basis.at(i, c - C) = ratio(v, lead);
    }
    return basis;
}

} // namespace

RatMatrix::RatMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols)
{
    assert(rows >= 0 && cols >= 0);
}

RatMatrix RatMatrix::identity(int n)
{
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::hcat(const RatMatrix& a, const RatMatrix& b)
{
    assert(a.rows() == b.rows());
    RatMatrix m(a.rows(), a.cols() + b.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c)
            m.at(r, c) = a.at(r, c);
        for (int c = 0; c < b.cols(); ++c)
            m.at(r, a.cols() + c) = b.at(r, c);
    }
    return m;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b)
{
    assert(a.cols() == b.rows());
    RatMatrix m(a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(r, k) == 0)
                continue;
            for (int c = 0; c < b.cols(); ++c)
                if (b.at(k, c) != 0)
                    m.at(r, c) += a.at(r, k) * b.at(k, c);
        }
    return m;
}

Rational SparseMat::at(int r, int c) const
{
    const auto& row = rows[static_cast<std::size_t>(r)];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    return (it != row.end() && it->first == c) ? it->second : Rational(0);
}

RatMatrix SparseMat::dense() const
{
    RatMatrix m(rowCount(), cols);
    for (int r = 0; r < m.rows(); ++r)
        for (const auto& [c, v] : rows[static_cast<std::size_t>(r)])
            m.at(r, c) = v;
    return m;
}

SparseMat SparseMat::fromDense(const RatMatrix& m)
{
    SparseMat s;
    s.cols = m.cols();
    s.rows.resize(static_cast<std::size_t>(m.rows()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (m.at(r, c) != 0)
                s.rows[static_cast<std::size_t>(r)].emplace_back(c, m.at(r, c));
    return s;
}

int rank(const RatMatrix& m)
{
    std::vector<SparseRow> rows;
    rows.reserve(m.rows());
    for (int r = 0; r < m.rows(); ++r)
        rows.push_back(integerRow(m, r));
    return static_cast<int>(forwardEliminate(rows, m.cols()).size());
}

int rank(const SparseMat& m)
{
    std::vector<SparseRow> rows;
    rows.reserve(m.rows.size());
    for (const auto& src : m.rows)
        rows.push_back(integerRow(src));
    return static_cast<int>(forwardEliminate(rows, m.cols).size());
}

RatMatrix leftNullSpace(const RatMatrix& m)
{
    // Rows of [m | I] keep the shape (x·m | x); whole-row operations
    // preserve it, so rows whose m-part empties out carry null combinations
    // x. The identity entry must absorb the same denominator scale as the
    // m-part or the shape breaks.
    const int C = m.cols();
    std::vector<SparseRow> rows;
    rows.reserve(m.rows());
    for (int r = 0; r < m.rows(); ++r) {
        Int scale = 1;
        SparseRow row = integerRow(m, r, 0, &scale);
        row.emplace_back(C + r, std::move(scale));
        rows.push_back(std::move(row));
    }
    return leftNullSpaceFromRows(std::move(rows), C);
}

RatMatrix leftNullSpace(const SparseMat& m)
{
    const int C = m.cols;
    std::vector<SparseRow> rows;
    rows.reserve(m.rows.size());
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
        Int scale = 1;
        SparseRow row = integerRow(m.rows[r], &scale);
        row.emplace_back(C + static_cast<int>(r), std::move(scale));
        rows.push_back(std::move(row));
    }
    return leftNullSpaceFromRows(std::move(rows), C);
}

RatMatrix multiply(const RatMatrix& a, const SparseMat& b)
{
    assert(a.cols() == b.rowCount());
    RatMatrix m(a.rows(), b.cols);
    for (int r = 0; r < a.rows(); ++r)
        for (int k = 0; k < a.cols(); ++k) {
            const Rational& av = a.at(r, k);
            if (av == 0)
                continue;
            for (const auto& [c, v] : b.rows[static_cast<std::size_t>(k)])
                m.at(r, c) += av * v;
        }
    return m;
}

OnesNormalization solveOnesNormalization(const RatMatrix& kBasis, const RatMatrix& mEven)
{
    return solveOnesNormalization(kBasis, SparseMat::fromDense(mEven));
}

OnesNormalization solveOnesNormalization(const RatMatrix& kBasis, const SparseMat& mEven)
{
    const int t = kBasis.rows(); // combination space dimension
    const int m = kBasis.cols();
    const int s = mEven.cols;
    if (s == 0 || mEven.rowCount() != m)
        throw NoNormalizedRow("normalization system has no even columns");

    RatMatrix a = multiply(kBasis, mEven); // t×s

    // Solve aᵀ·x = (1,…,1): augmented rows over columns 0..t−1 plus a
    // right-hand column t.
    std::vector<SparseRow> rows(s);
    for (int r = 0; r < s; ++r) {
        RatMatrix rowView(1, t + 1);
        for (int c = 0; c < t; ++c)
            rowView.at(0, c) = a.at(c, r);
        rowView.at(0, t) = 1;
        rows[r] = integerRow(rowView, 0);
    }
    auto pivots = forwardEliminate(rows, t);
    for (const auto& row : rows)
        if (!row.empty() && row.front().first == t)
            throw NoNormalizedRow("no combination reaches the all-ones row");
    backSubstitute(rows, pivots);

    std::vector<char> isPivotCol(t, 0);
    for (const auto& [r, c] : pivots)
        isPivotCol[c] = 1;

    // Particular solution (free coordinates zero) and null basis of aᵀ.
    std::vector<Rational> x0(t, Rational(0));
    for (const auto& [r, c] : pivots) {
        const Int* rhs = findCol(rows[r], t);
        x0[c] = rhs ? ratio(*rhs, rows[r].front().second) : Rational(0);
    }
    std::vector<std::vector<Rational>> nullX;
    for (int f = 0; f < t; ++f) {
        if (isPivotCol[f])
            continue;
        std::vector<Rational> v(t, Rational(0));
        v[f] = 1;
        for (const auto& [r, c] : pivots) {
            const Int* e = findCol(rows[r], f);
            if (e)
                v[c] = ratio(Int(-*e), rows[r].front().second);
        }
        nullX.push_back(std::move(v));
    }

    auto toKappaSpace = [&](const std::vector<Rational>& x) {
        std::vector<Rational> y(m, Rational(0));
        for (int i = 0; i < t; ++i) {
            if (x[i] == 0)
                continue;
            for (int c = 0; c < m; ++c)
                y[c] += x[i] * kBasis.at(i, c);
        }
        return y;
    };

    std::vector<Rational> kappa = toKappaSpace(x0);

    // Fix the representative inside the affine family: eliminate the
    // both-side-annihilating directions right-justified and zero kappa at
    // their rightmost pivots, highest column first.
    std::vector<std::vector<Rational>> rel;
    rel.reserve(nullX.size());
    for (const auto& x : nullX)
        rel.push_back(toKappaSpace(x));
    std::vector<char> used(rel.size(), 0);
    for (int col = m - 1; col >= 0; --col) {
        int pick = -1;
        for (std::size_t i = 0; i < rel.size(); ++i) {
            if (used[i])
                continue;
            int rm = -1;
            for (int c = m - 1; c >= 0; --c)
                if (rel[i][c] != 0) {
                    rm = c;
                    break;
                }
            if (rm == col) {
                pick = static_cast<int>(i);
                break;
            }
        }
        if (pick < 0)
            continue;
        used[pick] = 1;
        for (std::size_t i = 0; i < rel.size(); ++i) {
            if (static_cast<int>(i) == pick || rel[i][col] == 0)
                continue;
            Rational f = rel[i][col] / rel[pick][col];
            for (int c = 0; c <= col; ++c)
                rel[i][c] -= f * rel[pick][c];
        }
        if (kappa[col] != 0) {
            Rational f = kappa[col] / rel[pick][col];
            for (int c = 0; c <= col; ++c)
                kappa[c] -= f * rel[pick][c];
        }
    }

    // Scale to integer content 1; sign so that k > 0.
    Int scale = 1;
    for (const auto& q : kappa)
        scale = lcm(scale, q.get_den());
    Int content = 0;
    for (auto& q : kappa) {
        q *= Rational(scale);
        content = gcd(content, q.get_num());
    }
    if (content > 1)
        for (auto& q : kappa)
            q /= Rational(content);

    RatMatrix kRow(1, m);
    for (int c = 0; c < m; ++c)
        kRow.at(0, c) = kappa[c];
    RatMatrix kTimesEven = multiply(kRow, mEven);
    Rational k = kTimesEven.at(0, 0);
    for (int c = 1; c < s; ++c)
        if (kTimesEven.at(0, c) != k)
            throw NoNormalizedRow("normalization row is not constant");
    if (k == 0)
        throw NoNormalizedRow("normalization scale vanished");
    if (k < 0) {
        k = -k;
        for (auto& q : kappa)
            q = -q;
    }
    return OnesNormalization{std::move(kappa), std::move(k)};
}

} // namespace csforge
