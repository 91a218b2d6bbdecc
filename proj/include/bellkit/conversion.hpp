#pragma once

#include "bellkit/exact.hpp"
#include "bellkit/scenario.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bellkit {

// The 0/1 matrix taking the vector of joint-assignment probabilities q to
// the vector of observable probabilities P. Entry (p, q) is one exactly when
// the assignment q is consistent with the observed pair p under the chosen
// settings.
class ConversionMatrix {
public:
    static ConversionMatrix build(const Scenario& sc);

    const Scenario& scenario() const { return scenario_; }
    int rows() const { return static_cast<int>(scenario_.n_p()); }
    int cols() const { return static_cast<int>(scenario_.n_q()); }

    int entry(int p_flat, int q_flat) const { return entries_[p_flat * cols() + q_flat]; }

    // Column q, read as the deterministic strategy's P-vector.
    std::vector<int> column(int q_flat) const;

    IntRows int_rows() const;
    RatRows rational_rows() const;

    // Header row of q labels, then one line per P row with 0/1 entries.
    std::string to_csv() const;

private:
    explicit ConversionMatrix(const Scenario& sc);

    Scenario scenario_;
    std::vector<std::uint8_t> entries_;
};

// Exact rank by fraction-free elimination.
int rank_exact(const ConversionMatrix& m);

// Affine constraint rows over P space: one normalization row per setting
// pair (right-hand side 1) followed by the no-signaling marginal matches
// (right-hand side 0), one per outcome of each measurement. Redundant rows
// are kept on purpose; rank() accounts for them.
class ConstraintMatrix {
public:
    static ConstraintMatrix build(const Scenario& sc);

    const Scenario& scenario() const { return scenario_; }
    int rows() const { return static_cast<int>(rhs_.size()); }
    int cols() const { return static_cast<int>(scenario_.n_p()); }
    int entry(int r, int c) const { return entries_[r * cols() + c]; }
    int rhs(int r) const { return rhs_[r]; }
    int normalization_rows() const { return 4; }

    // Number of independent constraints the rows place on the P's. The four
    // normalization rows share one inhomogeneous direction (every block sums
    // to the same total), so each row is first folded against the reference
    // normalization row scaled by its right-hand side; the exact rank of the
    // homogeneous remainder is the constraint count.
    int rank() const;

private:
    explicit ConstraintMatrix(const Scenario& sc);

    Scenario scenario_;
    std::vector<std::int8_t> entries_;
    std::vector<std::int8_t> rhs_;
};

struct RankReport {
    std::int64_t computed_rank = 0;
    std::int64_t predicted_n_i = 0;
    bool agrees = false;
};

// Guard for both operations below: n_p * n_q cells at most.
inline constexpr std::int64_t kMaxMatrixCells = 10'000'000;

// Builds the conversion matrix, takes its exact rank, and compares with the
// counting prediction n_i(). Throws SizeLimitError past kMaxMatrixCells.
RankReport verify_rank_formula(const Scenario& sc);

// True when every constraint row annihilates the image of the probability
// simplex: normalization rows give the all-ones row over q space under
// row * M, no-signaling rows give the zero row.
bool nullspace_consistency(const Scenario& sc);

}  // namespace bellkit
