#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <vector>

namespace bellkit {

// All algebra on the local-model side is exact. Floating point never enters
// rank computations, expansions, or bound derivations.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntRows = std::vector<std::vector<Int>>;
using RatRows = std::vector<std::vector<Rat>>;
using RatVec = std::vector<Rat>;

// Fraction-free (Bareiss) elimination; returns the rank. Input is copied.
int exact_rank(const IntRows& rows);

// In-place Gauss-Jordan to reduced row echelon form; returns pivot columns.
std::vector<int> reduced_row_echelon(RatRows& rows);

// Basis of { v : rows * v = 0 }.
std::vector<RatVec> right_nullspace(const RatRows& rows, int cols);

// Clears denominators and divides by the content, preserving the sign of the
// leading nonzero entry.
std::vector<Int> primitive_integer_vector(const RatVec& v);

// Solves lambda^T M = target for a matrix M held row-wise. The factorization
// is done once; solve() is then cheap per target. Pivots are chosen in fixed
// row order, so the returned lambda is deterministic and supported on a fixed
// basis subset of the rows.
class LeftSolver {
public:
    explicit LeftSolver(const RatRows& m_rows, int cols);

    // One exact solution with free coefficients set to zero, or nullopt if
    // target is outside the row space.
    std::optional<RatVec> solve(const RatVec& target) const;

    int rank() const { return static_cast<int>(pivot_cols_.size()); }

private:
    int n_rows_;  // rows of M == length of lambda
    int n_cols_;  // columns of M == length of target
    RatRows rref_;       // RREF of M^T, n_cols_ x n_rows_
    RatRows transform_;  // transform_ * M^T == rref_
    std::vector<int> pivot_cols_;
};

}  // namespace bellkit
