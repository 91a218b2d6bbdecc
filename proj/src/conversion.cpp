#include "bellkit/conversion.hpp"

#include "bellkit/errors.hpp"

#include <sstream>

namespace bellkit {

ConversionMatrix::ConversionMatrix(const Scenario& sc) : scenario_(sc) {
    entries_.assign(static_cast<std::size_t>(sc.n_p() * sc.n_q()), 0);
}

ConversionMatrix ConversionMatrix::build(const Scenario& sc) {
    ConversionMatrix m(sc);
    const int nq = m.cols();
    for (int qf = 0; qf < nq; ++qf) {
        const QIndex q = q_from_flat(sc, qf);
        // Each assignment hits exactly one outcome pair per setting block.
        const int a_out[3] = {0, q.i, q.ip};
        const int b_out[3] = {0, q.j, q.jp};
        for (int s = 1; s <= 2; ++s) {
            for (int t = 1; t <= 2; ++t) {
                const PIndex p{s, t, a_out[s], b_out[t]};
                m.entries_[p_flat_index(sc, p) * nq + qf] = 1;
            }
        }
    }
    return m;
}

std::vector<int> ConversionMatrix::column(int q_flat) const {
    std::vector<int> col(rows());
    for (int r = 0; r < rows(); ++r) col[r] = entry(r, q_flat);
    return col;
}

IntRows ConversionMatrix::int_rows() const {
    IntRows out(rows(), std::vector<Int>(cols()));
    for (int r = 0; r < rows(); ++r) {
        for (int c = 0; c < cols(); ++c) out[r][c] = entry(r, c);
    }
    return out;
}

RatRows ConversionMatrix::rational_rows() const {
    RatRows out(rows(), RatVec(cols()));
    for (int r = 0; r < rows(); ++r) {
        for (int c = 0; c < cols(); ++c) out[r][c] = entry(r, c);
    }
    return out;
}

std::string ConversionMatrix::to_csv() const {
    std::ostringstream out;
    for (int c = 0; c < cols(); ++c) {
        out << ',' << q_label(q_from_flat(scenario_, c));
    }
    out << '\n';
    for (int r = 0; r < rows(); ++r) {
        out << p_label(p_from_flat(scenario_, r));
        for (int c = 0; c < cols(); ++c) out << ',' << entry(r, c);
        out << '\n';
    }
    return out.str();
}

int rank_exact(const ConversionMatrix& m) {
    return exact_rank(m.int_rows());
}

ConstraintMatrix::ConstraintMatrix(const Scenario& sc) : scenario_(sc) {}

ConstraintMatrix ConstraintMatrix::build(const Scenario& sc) {
    ConstraintMatrix c(sc);
    const int np = static_cast<int>(sc.n_p());
    auto add_row = [&](int rhs) -> std::int8_t* {
        c.entries_.insert(c.entries_.end(), np, 0);
        c.rhs_.push_back(static_cast<std::int8_t>(rhs));
        return c.entries_.data() + (c.rhs_.size() - 1) * np;
    };

    // Normalization: each setting block sums to one.
    for (int s = 1; s <= 2; ++s) {
        for (int t = 1; t <= 2; ++t) {
            std::int8_t* row = add_row(1);
            for (int k = 0; k < sc.outcomes_a(s); ++k) {
                for (int l = 0; l < sc.outcomes_b(t); ++l) {
                    row[p_flat_index(sc, {s, t, k, l})] = 1;
                }
            }
        }
    }

    // No-signaling: A's marginal for each outcome is independent of B's
    // setting, and vice versa.
    for (int k = 0; k < sc.m; ++k) {
        std::int8_t* row = add_row(0);
        for (int l = 0; l < sc.n; ++l) row[p_flat_index(sc, {1, 1, k, l})] += 1;
        for (int l = 0; l < sc.np; ++l) row[p_flat_index(sc, {1, 2, k, l})] -= 1;
    }
    for (int k = 0; k < sc.mp; ++k) {
        std::int8_t* row = add_row(0);
        for (int l = 0; l < sc.n; ++l) row[p_flat_index(sc, {2, 1, k, l})] += 1;
        for (int l = 0; l < sc.np; ++l) row[p_flat_index(sc, {2, 2, k, l})] -= 1;
    }
    for (int l = 0; l < sc.n; ++l) {
        std::int8_t* row = add_row(0);
        for (int k = 0; k < sc.m; ++k) row[p_flat_index(sc, {1, 1, k, l})] += 1;
        for (int k = 0; k < sc.mp; ++k) row[p_flat_index(sc, {2, 1, k, l})] -= 1;
    }
    for (int l = 0; l < sc.np; ++l) {
        std::int8_t* row = add_row(0);
        for (int k = 0; k < sc.m; ++k) row[p_flat_index(sc, {1, 2, k, l})] += 1;
        for (int k = 0; k < sc.mp; ++k) row[p_flat_index(sc, {2, 2, k, l})] -= 1;
    }
    return c;
}

int ConstraintMatrix::rank() const {
    IntRows folded(rows(), std::vector<Int>(cols()));
    for (int r = 0; r < rows(); ++r) {
        for (int c = 0; c < cols(); ++c) {
            folded[r][c] = entry(r, c) - rhs(r) * entry(0, c);
        }
    }
    return exact_rank(folded);
}

RankReport verify_rank_formula(const Scenario& sc) {
    if (sc.n_p() * sc.n_q() > kMaxMatrixCells) {
        throw SizeLimitError("conversion matrix for scenario " + sc.to_string() +
                             " exceeds the cell guard");
    }
    RankReport rep;
    rep.computed_rank = rank_exact(ConversionMatrix::build(sc));
    rep.predicted_n_i = sc.n_i();
    rep.agrees = rep.computed_rank == rep.predicted_n_i;
    return rep;
}

bool nullspace_consistency(const Scenario& sc) {
    if (sc.n_p() * sc.n_q() > kMaxMatrixCells) {
        throw SizeLimitError("conversion matrix for scenario " + sc.to_string() +
                             " exceeds the cell guard");
    }
    const ConversionMatrix m = ConversionMatrix::build(sc);
    const ConstraintMatrix c = ConstraintMatrix::build(sc);
    for (int r = 0; r < c.rows(); ++r) {
        for (int q = 0; q < m.cols(); ++q) {
            long long acc = 0;
            for (int p = 0; p < m.rows(); ++p) acc += c.entry(r, p) * m.entry(p, q);
            if (acc != c.rhs(r)) return false;
        }
    }
    return true;
}

}  // namespace bellkit
