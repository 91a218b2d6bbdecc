#pragma once

#include <cstdint>
#include <string>

namespace bellkit {

// Two parties, two measurement settings each. Side A measures a (m outcomes)
// or a' (mp outcomes); side B measures b (n outcomes) or b' (np outcomes).
// Settings are 1-based, outcomes 0-based.
struct Scenario {
    int m = 2;
    int mp = 2;
    int n = 2;
    int np = 2;

    Scenario() = default;
    Scenario(int m_, int mp_, int n_, int np_);

    // "m,mp,n,np"
    static Scenario parse(const std::string& text);

    std::int64_t n_q() const;   // joint assignments: m*mp*n*np
    std::int64_t n_p() const;   // observable probabilities: (m+mp)*(n+np)
    std::int64_t n_c() const;   // independent constraints: m+mp+n+np-1
    std::int64_t n_i() const;   // independent observables: n_p - n_c

    int outcomes_a(int setting) const;  // setting 1 -> m, setting 2 -> mp
    int outcomes_b(int setting) const;  // setting 1 -> n, setting 2 -> np

    bool operator==(const Scenario&) const = default;

    std::string to_string() const;  // "m,mp,n,np"
};

// One joint assignment of outcomes to all four measurements.
struct QIndex {
    int i = 0;   // outcome of a
    int ip = 0;  // outcome of a'
    int j = 0;   // outcome of b
    int jp = 0;  // outcome of b'

    bool operator==(const QIndex&) const = default;
};

// One observable joint probability P_{st}^{kl}: A used setting s with
// outcome k, B used setting t with outcome l.
struct PIndex {
    int s = 1;
    int t = 1;
    int k = 0;
    int l = 0;

    bool operator==(const PIndex&) const = default;
};

struct Counts {
    std::int64_t n_q = 0;
    std::int64_t n_p = 0;
    std::int64_t n_c = 0;
    std::int64_t n_i = 0;
};

Counts counts(const Scenario& sc);

// Flat column order of the joint assignments: lexicographic in (i, ip, j, jp)
// with jp fastest. Throws std::out_of_range on invalid components.
int q_flat_index(const Scenario& sc, const QIndex& q);
QIndex q_from_flat(const Scenario& sc, int flat);

// Flat row order of the observables: setting blocks (1,1),(1,2),(2,1),(2,2),
// then (k, l) with l fastest within each block.
int p_flat_index(const Scenario& sc, const PIndex& p);
PIndex p_from_flat(const Scenario& sc, int flat);

// Display labels: "P_{st}^{kl}" and "q^{i ip j jp}".
std::string p_label(const PIndex& p);
std::string q_label(const QIndex& q);

}  // namespace bellkit
