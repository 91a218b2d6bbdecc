#pragma once

#include "bellkit/conversion.hpp"
#include "bellkit/exact.hpp"
#include "bellkit/scenario.hpp"

#include <map>
#include <string>
#include <utility>

namespace bellkit {

// A linear form over the observable probabilities, with exact rational
// coefficients keyed by flat P index.
class BellExpression {
public:
    explicit BellExpression(const Scenario& sc, std::string name = "")
        : scenario_(sc), name_(std::move(name)) {}

    const Scenario& scenario() const { return scenario_; }
    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    // Adds onto the existing coefficient; zero results are dropped.
    void add(const PIndex& p, const Rat& coeff);
    void set(const PIndex& p, const Rat& coeff);
    Rat coeff(const PIndex& p) const;

    const std::map<int, Rat>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    // Sum of all coefficients. A quarter of it is the expression's value on
    // the maximally mixed table, where every outcome pair has weight 1/4.
    Rat coefficient_sum() const;

    BellExpression scaled(const Rat& factor) const;
    BellExpression plus(const BellExpression& other) const;

    std::string pretty() const;  // "+P_{11}^{10} -P_{12}^{11} ..."

private:
    Scenario scenario_;
    std::map<int, Rat> terms_;  // flat P index -> coefficient
    std::string name_;
};

// Exact coefficients of an expression pushed down to q space, together with
// the clamped extremes c (largest coefficient, at least 0) and d (negated
// smallest coefficient, at least 0).
struct QExpansion {
    Scenario scenario;
    RatVec coeffs;
    Rat c;
    Rat d;
};

// coeffs = lambda^T M. Throws std::invalid_argument on scenario mismatch.
QExpansion expand(const BellExpression& expr, const ConversionMatrix& m);

// Exact range of the linear form over the probability simplex: the extreme
// values are attained at deterministic assignments, so they are simply the
// smallest and largest expansion coefficient.
std::pair<Rat, Rat> local_bounds(const QExpansion& e);

// True when both expansions are entrywise nonnegative and sum entrywise to
// the all-ones vector. Such a pair satisfies |E1| + |E2| = 1 in every local
// model. Throws std::invalid_argument on scenario mismatch.
bool is_complementary(const QExpansion& e1, const QExpansion& e2);

struct EqualityPair {
    BellExpression first;
    BellExpression second;
};

}  // namespace bellkit
