#include "bellkit/scenario.hpp"

#include <sstream>
#include <stdexcept>

namespace bellkit {

Scenario::Scenario(int m_, int mp_, int n_, int np_) : m(m_), mp(mp_), n(n_), np(np_) {
    if (m < 1 || mp < 1 || n < 1 || np < 1) {
        throw std::invalid_argument("scenario outcome counts must all be >= 1, got " +
                                    to_string());
    }
}

Scenario Scenario::parse(const std::string& text) {
    std::istringstream in(text);
    int v[4];
    char sep = ',';
    for (int k = 0; k < 4; ++k) {
        if (k > 0) {
            in >> sep;
            if (sep != ',') throw std::invalid_argument("scenario must be \"m,mp,n,np\": " + text);
        }
        if (!(in >> v[k])) {
            throw std::invalid_argument("scenario must be \"m,mp,n,np\": " + text);
        }
    }
    std::string rest;
    if (in >> rest) throw std::invalid_argument("trailing characters in scenario: " + text);
    return Scenario(v[0], v[1], v[2], v[3]);
}

std::int64_t Scenario::n_q() const {
    return std::int64_t{1} * m * mp * n * np;
}

std::int64_t Scenario::n_p() const {
    return std::int64_t{1} * (m + mp) * (n + np);
}

std::int64_t Scenario::n_c() const {
    return std::int64_t{m} + mp + n + np - 1;
}

std::int64_t Scenario::n_i() const {
    return n_p() - n_c();
}

int Scenario::outcomes_a(int setting) const {
    if (setting == 1) return m;
    if (setting == 2) return mp;
    throw std::out_of_range("A setting must be 1 or 2");
}

int Scenario::outcomes_b(int setting) const {
    if (setting == 1) return n;
    if (setting == 2) return np;
    throw std::out_of_range("B setting must be 1 or 2");
}

std::string Scenario::to_string() const {
    std::ostringstream out;
    out << m << ',' << mp << ',' << n << ',' << np;
    return out.str();
}

Counts counts(const Scenario& sc) {
    return Counts{sc.n_q(), sc.n_p(), sc.n_c(), sc.n_i()};
}

namespace {

void check_range(int value, int limit, const char* what) {
    if (value < 0 || value >= limit) {
        throw std::out_of_range(std::string(what) + " outcome out of range");
    }
}

}  // namespace

int q_flat_index(const Scenario& sc, const QIndex& q) {
    check_range(q.i, sc.m, "a");
    check_range(q.ip, sc.mp, "a'");
    check_range(q.j, sc.n, "b");
    check_range(q.jp, sc.np, "b'");
    return ((q.i * sc.mp + q.ip) * sc.n + q.j) * sc.np + q.jp;
}

QIndex q_from_flat(const Scenario& sc, int flat) {
    if (flat < 0 || flat >= sc.n_q()) throw std::out_of_range("flat q index out of range");
    QIndex q;
    q.jp = flat % sc.np;
    flat /= sc.np;
    q.j = flat % sc.n;
    flat /= sc.n;
    q.ip = flat % sc.mp;
    q.i = flat / sc.mp;
    return q;
}

int p_flat_index(const Scenario& sc, const PIndex& p) {
    if (p.s < 1 || p.s > 2 || p.t < 1 || p.t > 2) {
        throw std::out_of_range("settings must be 1 or 2");
    }
    check_range(p.k, sc.outcomes_a(p.s), "A");
    check_range(p.l, sc.outcomes_b(p.t), "B");
    int offset = 0;
    for (int s = 1; s <= 2; ++s) {
        for (int t = 1; t <= 2; ++t) {
            if (s == p.s && t == p.t) {
                return offset + p.k * sc.outcomes_b(t) + p.l;
            }
            offset += sc.outcomes_a(s) * sc.outcomes_b(t);
        }
    }
    throw std::logic_error("unreachable");
}

PIndex p_from_flat(const Scenario& sc, int flat) {
    if (flat < 0 || flat >= sc.n_p()) throw std::out_of_range("flat P index out of range");
    for (int s = 1; s <= 2; ++s) {
        for (int t = 1; t <= 2; ++t) {
            const int block = sc.outcomes_a(s) * sc.outcomes_b(t);
            if (flat < block) {
                PIndex p;
                p.s = s;
                p.t = t;
                p.k = flat / sc.outcomes_b(t);
                p.l = flat % sc.outcomes_b(t);
                return p;
            }
            flat -= block;
        }
    }
    throw std::logic_error("unreachable");
}

std::string p_label(const PIndex& p) {
    std::ostringstream out;
    out << "P_{" << p.s << p.t << "}^{" << p.k << p.l << "}";
    return out.str();
}

std::string q_label(const QIndex& q) {
    std::ostringstream out;
    out << "q^{" << q.i << ' ' << q.ip << ' ' << q.j << ' ' << q.jp << "}";
    return out.str();
}

}  // namespace bellkit
