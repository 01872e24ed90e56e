#pragma once

#include "clusterkit/seed.hpp"

namespace clusterkit {

// Invariants of principal-coefficient patterns. The grading is fixed by the
// initial exchange matrix B: deg(x_i) = e_i, deg(x_{n+j}) = -B e_j.

using GVector = std::vector<std::int64_t>;

struct IntMatrix {
    int n = 0;
    std::vector<std::int64_t> data;

    IntMatrix() = default;
    explicit IntMatrix(int n_) : n(n_), data(static_cast<std::size_t>(n_) * n_, 0) {}
    std::int64_t at(int i, int j) const { return data[static_cast<std::size_t>(i) * n + j]; }
    std::int64_t& at(int i, int j) { return data[static_cast<std::size_t>(i) * n + j]; }
    static IntMatrix identity(int n);
    bool operator==(const IntMatrix& o) const { return n == o.n && data == o.data; }
};

// Stack B on top of the n x n identity.
ExtendedMatrix principalExtension(const ExtendedMatrix& B);

Seed makePrincipalSeed(const std::vector<std::string>& exchangeNames,
                       const ExtendedMatrix& B);

// Z^n-degree of a homogeneous principal-coefficient expression. Throws
// NotHomogeneous when terms disagree.
GVector gVector(const LaurentPoly& v, const ExtendedMatrix& initialB);

// Lower n x n block of an extended 2n x n matrix.
IntMatrix cMatrixOf(const ExtendedMatrix& M);

// Column i = gVector of expression i; expressions must be the exchange part
// of a principal-coefficient seed.
IntMatrix gMatrixFromExpansions(const Seed& s, const ExtendedMatrix& initialB);

// G = D (C^{-1})^T D^{-1}, computed exactly; SingularCMatrix /
// NonIntegerResult signal contract violations on invalid inputs.
IntMatrix gMatrixViaDuality(const IntMatrix& C, const SkewSymmetrizer& D);

bool isColumnSignCoherent(const IntMatrix& C);

// F-polynomial: specialize the initial exchange variables to 1. Result has
// arity n over the principal frozen variables, nonnegative exponents.
LaurentPoly fPolynomial(const LaurentPoly& v, int nExchange);

// Exponents of the canonical denominator of v over the exchange slots of
// the initial cluster; entries are >= -1 for cluster variables.
std::vector<int> denominatorVector(const LaurentPoly& v, int nExchange);
int compatibilityDegree(int initialSlot, const LaurentPoly& v);

} // namespace clusterkit
