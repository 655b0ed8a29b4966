#pragma once

#include "core/rational.hpp"

#include <stdexcept>
#include <vector>

namespace csforge {

/// Dense exact-rational matrix. The elimination kernels behind rank /
/// null-space work on sparse integer rows internally; this type is the
/// module boundary, sized for the systems the assembler produces.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const
    {
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }

    static RatMatrix identity(int n);

    /// Horizontal concatenation [a | b]; row counts must agree.
    static RatMatrix hcat(const RatMatrix& a, const RatMatrix& b);

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

/// Sparse exact-rational matrix: per row, column-sorted (column, value)
/// pairs with zeros omitted. Row-space semantics match the dense type entry
/// for entry; the assembler uses this shape because its systems are huge but
/// only a few entries per row are nonzero.
struct SparseMat {
    int cols = 0;
    std::vector<std::vector<std::pair<int, Rational>>> rows;

    int rowCount() const { return static_cast<int>(rows.size()); }

    /// Entry lookup; absent columns read as zero.
    Rational at(int r, int c) const;

    RatMatrix dense() const;
    static SparseMat fromDense(const RatMatrix& m);
};

int rank(const RatMatrix& m);
int rank(const SparseMat& m);

/// Basis of {k : k·m = 0} as the rows of the returned matrix, in reduced
/// echelon form with leading entries 1 (the RREF basis of a subspace is
/// unique, so equal inputs give identical output). rows() of the result is
/// m.rows() − rank(m); an r×0 input yields the r×r identity.
RatMatrix leftNullSpace(const RatMatrix& m);
RatMatrix leftNullSpace(const SparseMat& m);

/// Dense·sparse product; a.cols() must equal b.rowCount().
RatMatrix multiply(const RatMatrix& a, const SparseMat& b);

/// No combination of the null-space rows hits k·(1,…,1): the normalization
/// equation for a partition is unsolvable, which signals corrupt input
/// upstream rather than a user error.
struct NoNormalizedRow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OnesNormalization {
    std::vector<Rational> kappa; ///< integer entries, content 1
    Rational k;                  ///< kappa·mEven = k·(1,…,1), k > 0
};

/// Find kappa in the row space of kBasis with kappa·mEven = k·(1,…,1).
/// When the solution family is larger than a scale (extra null rows that
/// also annihilate mEven), the representative with zeros at those rows'
/// rightmost pivot columns is chosen; the result is then scaled to integer
/// content 1 with k > 0. Throws NoNormalizedRow if no solution exists.
OnesNormalization solveOnesNormalization(const RatMatrix& kBasis, const RatMatrix& mEven);
OnesNormalization solveOnesNormalization(const RatMatrix& kBasis, const SparseMat& mEven);

} // namespace csforge
