#pragma once

#include <random>

#include "clusterkit/exchange_graph.hpp"
#include "clusterkit/grading.hpp"

namespace ckt {

using namespace clusterkit;

inline LaurentPoly var(int arity, int i) { return LaurentPoly::variable(arity, i); }

inline LaurentPoly con(int arity, long c) {
    return LaurentPoly::constant(arity, Rational(c));
}

inline LaurentPoly mono(std::vector<int> e, long c = 1) {
    return LaurentPoly::monomial(e, Rational(c));
}

inline ExtendedMatrix mat(const std::vector<std::vector<std::int64_t>>& rows) {
    return ExtendedMatrix::fromRows(rows, rows.empty() ? 0 : static_cast<int>(rows[0].size()));
}

inline Seed a2Seed() {
    return makeInitialSeed({"x1", "x2"}, mat({{0, 1}, {-1, 0}}), 2);
}

inline Seed a3Seed() {
    return makeInitialSeed({"x1", "x2", "x3"},
                           mat({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}), 3);
}

inline Seed b2Seed() {
    return makeInitialSeed({"x1", "x2"}, mat({{0, 1}, {-2, 0}}), 2);
}

// Random skew-symmetrizable matrix B = S * D with S skew-symmetric.
inline ExtendedMatrix randomSkewSymmetrizable(std::mt19937& rng, int n, int maxEntry,
                                              int maxD = 2) {
    std::uniform_int_distribution<int> entry(-maxEntry, maxEntry);
    std::uniform_int_distribution<int> dval(1, maxD);
    while (true) {
        ExtendedMatrix B(n, n);
        std::vector<int> d(n);
        for (int i = 0; i < n; ++i) d[i] = dval(rng);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const int s = entry(rng);
                B.at(i, j) = s * d[j];
                B.at(j, i) = -s * d[i];
            }
        return B;
    }
}

// Random Laurent polynomial with small support.
inline LaurentPoly randomLaurent(std::mt19937& rng, int arity, int terms, int maxExp) {
    std::uniform_int_distribution<int> e(-maxExp, maxExp);
    std::uniform_int_distribution<int> c(-5, 5);
    LaurentPoly p(arity);
    for (int t = 0; t < terms; ++t) {
        ExponentVector ev(arity);
        for (int i = 0; i < arity; ++i) ev[i] = e(rng);
        p = p + LaurentPoly::monomial(ev, Rational(c(rng)));
    }
    return p;
}

// Finite-type exchange matrices of rank <= 3 (plus direct sums).
inline ExtendedMatrix finiteTypeRank3(std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, 5);
    switch (pick(rng)) {
        case 0: return mat({{0}});
        case 1: return mat({{0, 1}, {-1, 0}});
        case 2: return mat({{0, 2}, {-1, 0}});
        case 3: return mat({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}});
        case 4: return mat({{0, 1, 0}, {-1, 0, 2}, {0, -1, 0}});  // type B3/C3
        default: return mat({{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}});  // A2 x A1
    }
}

} // namespace ckt
