#include "bellkit/expression.hpp"

#include <sstream>
#include <stdexcept>

namespace bellkit {

void BellExpression::add(const PIndex& p, const Rat& coeff) {
    const int flat = p_flat_index(scenario_, p);
    auto [it, inserted] = terms_.try_emplace(flat, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    } else if (it->second == 0) {
        terms_.erase(it);
    }
}

void BellExpression::set(const PIndex& p, const Rat& coeff) {
    const int flat = p_flat_index(scenario_, p);
    if (coeff == 0) {
        terms_.erase(flat);
    } else {
        terms_[flat] = coeff;
    }
}

Rat BellExpression::coeff(const PIndex& p) const {
    auto it = terms_.find(p_flat_index(scenario_, p));
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat BellExpression::coefficient_sum() const {
    Rat sum = 0;
    for (const auto& [flat, coeff] : terms_) sum += coeff;
    return sum;
}

BellExpression BellExpression::scaled(const Rat& factor) const {
    BellExpression out(scenario_, name_);
    if (factor == 0) return out;
    for (const auto& [flat, coeff] : terms_) out.terms_[flat] = coeff * factor;
    return out;
}

BellExpression BellExpression::plus(const BellExpression& other) const {
    if (!(scenario_ == other.scenario_)) {
        throw std::invalid_argument("cannot add expressions over different scenarios");
    }
    BellExpression out = *this;
    for (const auto& [flat, coeff] : other.terms_) {
        out.add(p_from_flat(scenario_, flat), coeff);
    }
    return out;
}

std::string BellExpression::pretty() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [flat, coeff] : terms_) {
        if (!first) out << ' ';
        first = false;
        if (coeff == 1) {
            out << '+';
        } else if (coeff == -1) {
            out << '-';
        } else {
            if (coeff > 0) out << '+';
            out << coeff << '*';
        }
        out << p_label(p_from_flat(scenario_, flat));
    }
    if (first) out << "0";
    return out.str();
}

QExpansion expand(const BellExpression& expr, const ConversionMatrix& m) {
    if (!(expr.scenario() == m.scenario())) {
        throw std::invalid_argument("expression and conversion matrix cover different scenarios");
    }
    QExpansion e;
    e.scenario = expr.scenario();
    e.coeffs.assign(m.cols(), Rat(0));
    for (const auto& [p_flat, coeff] : expr.terms()) {
        for (int q = 0; q < m.cols(); ++q) {
            if (m.entry(p_flat, q)) e.coeffs[q] += coeff;
        }
    }
    e.c = 0;
    e.d = 0;
    for (const Rat& x : e.coeffs) {
        if (x > e.c) e.c = x;
        if (-x > e.d) e.d = -x;
    }
    return e;
}

std::pair<Rat, Rat> local_bounds(const QExpansion& e) {
    if (e.coeffs.empty()) return {Rat(0), Rat(0)};
    Rat lo = e.coeffs[0];
    Rat hi = e.coeffs[0];
    for (const Rat& x : e.coeffs) {
        if (x < lo) lo = x;
        if (x > hi) hi = x;
    }
    return {lo, hi};
}

bool is_complementary(const QExpansion& e1, const QExpansion& e2) {
    if (!(e1.scenario == e2.scenario)) {
        throw std::invalid_argument("expansions cover different scenarios");
    }
    for (std::size_t q = 0; q < e1.coeffs.size(); ++q) {
        if (e1.coeffs[q] < 0 || e2.coeffs[q] < 0) return false;
        if (e1.coeffs[q] + e2.coeffs[q] != 1) return false;
    }
    return true;
}

}  // namespace bellkit
