#include "bellkit/exact.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace bellkit {

int exact_rank(const IntRows& input) {
    IntRows a = input;
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    int rank = 0;
    Int prev = 1;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r) {
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int cc = c + 1; cc < cols; ++cc) {
                a[r][cc] = (a[r][cc] * a[rank][c] - a[r][c] * a[rank][cc]) / prev;
            }
            a[r][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

std::vector<int> reduced_row_echelon(RatRows& a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int rr = r; rr < rows; ++rr) {
            if (a[rr][c] != 0) {
                piv = rr;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        const Rat inv = a[r][c];
        for (int cc = c; cc < cols; ++cc) a[r][cc] /= inv;
        for (int rr = 0; rr < rows; ++rr) {
            if (rr == r || a[rr][c] == 0) continue;
            const Rat f = a[rr][c];
            for (int cc = c; cc < cols; ++cc) a[rr][cc] -= f * a[r][cc];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<RatVec> right_nullspace(const RatRows& rows, int cols) {
    RatRows a = rows;
    for (auto& row : a) {
        if (static_cast<int>(row.size()) != cols) {
            throw std::invalid_argument("nullspace: ragged matrix");
        }
    }
    const std::vector<int> pivots = reduced_row_echelon(a);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<RatVec> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatVec v(cols, Rat(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -a[r][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Int> primitive_integer_vector(const RatVec& v) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;

    Int common_den = 1;
    for (const Rat& x : v) common_den = lcm(common_den, denominator(x));
    std::vector<Int> out;
    out.reserve(v.size());
    Int content = 0;
    for (const Rat& x : v) {
        Int e = numerator(x) * (common_den / denominator(x));
        content = gcd(content, e);
        out.push_back(std::move(e));
    }
    if (content == 0) return out;
    Int lead = 0;
    for (const Int& e : out) {
        if (e != 0) {
            lead = e;
            break;
        }
    }
    if (lead < 0) content = -content;
    for (Int& e : out) e /= content;
    return out;
}

LeftSolver::LeftSolver(const RatRows& m_rows, int cols)
    : n_rows_(static_cast<int>(m_rows.size())), n_cols_(cols) {
    // Row-reduce M^T while carrying the full transform, so membership of a
    // target in the row space of M reduces to a matrix-vector product.
    rref_.assign(n_cols_, RatVec(n_rows_, Rat(0)));
    transform_.assign(n_cols_, RatVec(n_cols_, Rat(0)));
    for (int r = 0; r < n_rows_; ++r) {
        if (static_cast<int>(m_rows[r].size()) != n_cols_) {
            throw std::invalid_argument("LeftSolver: ragged matrix");
        }
        for (int c = 0; c < n_cols_; ++c) rref_[c][r] = m_rows[r][c];
    }
    for (int c = 0; c < n_cols_; ++c) transform_[c][c] = 1;

    int r = 0;
    for (int c = 0; c < n_rows_ && r < n_cols_; ++c) {
        int piv = -1;
        for (int rr = r; rr < n_cols_; ++rr) {
            if (rref_[rr][c] != 0) {
                piv = rr;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(rref_[r], rref_[piv]);
        std::swap(transform_[r], transform_[piv]);
        const Rat inv = rref_[r][c];
        for (auto& x : rref_[r]) x /= inv;
        for (auto& x : transform_[r]) x /= inv;
        for (int rr = 0; rr < n_cols_; ++rr) {
            if (rr == r || rref_[rr][c] == 0) continue;
            const Rat f = rref_[rr][c];
            for (int cc = 0; cc < n_rows_; ++cc) rref_[rr][cc] -= f * rref_[r][cc];
            for (int cc = 0; cc < n_cols_; ++cc) transform_[rr][cc] -= f * transform_[r][cc];
        }
        pivot_cols_.push_back(c);
        ++r;
    }
}

std::optional<RatVec> LeftSolver::solve(const RatVec& target) const {
    if (static_cast<int>(target.size()) != n_cols_) {
        throw std::invalid_argument("LeftSolver: target length mismatch");
    }
    RatVec y(n_cols_, Rat(0));
    for (int r = 0; r < n_cols_; ++r) {
        Rat acc = 0;
        for (int c = 0; c < n_cols_; ++c) {
            if (transform_[r][c] != 0 && target[c] != 0) acc += transform_[r][c] * target[c];
        }
        y[r] = std::move(acc);
    }
    const int rank = static_cast<int>(pivot_cols_.size());
    for (int r = rank; r < n_cols_; ++r) {
        if (y[r] != 0) return std::nullopt;
    }
    RatVec lambda(n_rows_, Rat(0));
    for (int r = 0; r < rank; ++r) lambda[pivot_cols_[r]] = y[r];
    return lambda;
}

}  // namespace bellkit
