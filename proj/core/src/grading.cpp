#include "clusterkit/grading.hpp"

namespace clusterkit {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ExtendedMatrix principalExtension(const ExtendedMatrix& B) {
    const int n = B.cols();
    if (B.rows() != n) throw InvalidSpec("principal extension expects a square matrix");
    findSkewSymmetrizer(B);
    ExtendedMatrix M(2 * n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M.at(i, j) = B.at(i, j);
    for (int j = 0; j < n; ++j) M.at(n + j, j) = 1;
    return M;
}

Seed makePrincipalSeed(const std::vector<std::string>& exchangeNames,
                       const ExtendedMatrix& B) {
    const int n = B.cols();
    std::vector<std::string> names = exchangeNames;
    for (int j = 0; j < n; ++j) names.push_back("y" + std::to_string(j + 1));
    return makeInitialSeed(std::move(names), principalExtension(B), n);
}

GVector gVector(const LaurentPoly& v, const ExtendedMatrix& initialB) {
    const int n = initialB.cols();
    if (v.arity() != 2 * n)
        throw ArityMismatch("expression does not live in a principal pattern");
    if (v.isZero()) throw NotHomogeneous("zero has no well-defined degree");
    bool first = true;
    GVector deg(n, 0);
    for (const auto& [e, c] : v.terms()) {
        GVector d(n, 0);
        for (int i = 0; i < n; ++i) d[i] = e[i];
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) d[i] -= e[n + j] * initialB.at(i, j);
        if (first) {
            deg = d;
            first = false;
        } else if (d != deg) {
            throw NotHomogeneous("expression is not grading-homogeneous");
        }
    }
    return deg;
}

IntMatrix cMatrixOf(const ExtendedMatrix& M) {
    const int n = M.cols();
    if (M.rows() != 2 * n)
        throw InvalidSpec("C-matrix requires a 2n x n extended matrix");
    IntMatrix C(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) C.at(i, j) = M.at(n + i, j);
    return C;
}

IntMatrix gMatrixFromExpansions(const Seed& s, const ExtendedMatrix& initialB) {
    const int n = initialB.cols();
    IntMatrix G(n);
    for (int j = 0; j < n; ++j) {
        GVector g = gVector(s.expressions[j], initialB);
        for (int i = 0; i < n; ++i) G.at(i, j) = g[i];
    }
    return G;
}

IntMatrix gMatrixViaDuality(const IntMatrix& C, const SkewSymmetrizer& D) {
    const int n = C.n;
    // Exact inverse by Gauss-Jordan over the rationals.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = C.at(i, j);
        a[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw SingularCMatrix("C-matrix is singular");
        std::swap(a[col], a[pivot]);
        const Rational p = a[col][col];
        for (int j = 0; j < 2 * n; ++j) a[col][j] /= p;
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rational f = a[r][col];
            for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
        }
    }
    IntMatrix G(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            // G_ij = (C^{-1})_ji * d_j / d_i. The conjugation direction is
            // the one the expansions actually satisfy: the formula holds
            // for the symmetrizer of B^T, which is the inverse of D up to
            // a per-component scalar.
            Rational v = a[j][n + i] * Rational(D.diagonal[j]) / Rational(D.diagonal[i]);
            if (denominator(v) != 1)
                throw NonIntegerResult("duality formula produced a non-integer");
            G.at(i, j) = static_cast<std::int64_t>(numerator(v));
        }
    }
    return G;
}

bool isColumnSignCoherent(const IntMatrix& C) {
    for (int j = 0; j < C.n; ++j) {
        int sign = 0;
        for (int i = 0; i < C.n; ++i) {
            if (C.at(i, j) == 0) continue;
            const int s = C.at(i, j) > 0 ? 1 : -1;
            if (sign == 0)
                sign = s;
            else if (sign != s)
                return false;
        }
    }
    return true;
}

LaurentPoly fPolynomial(const LaurentPoly& v, int nExchange) {
    if (v.arity() != 2 * nExchange)
        throw ArityMismatch("expression does not live in a principal pattern");
    LaurentPoly::TermMap out;
    for (const auto& [e, c] : v.terms()) {
        ExponentVector ye(nExchange);
        for (int j = 0; j < nExchange; ++j) {
            if (e[nExchange + j] < 0)
                throw NonLaurentResult("negative frozen exponent in principal expansion");
            ye[j] = e[nExchange + j];
        }
        out[ye] += c;
    }
    return LaurentPoly::fromTerms(nExchange, std::move(out));
}

std::vector<int> denominatorVector(const LaurentPoly& v, int nExchange) {
    if (v.isZero()) throw InvalidSpec("zero has no denominator vector");
    const ExponentVector m = v.minExponents();
    std::vector<int> d(nExchange);
    for (int i = 0; i < nExchange; ++i) d[i] = -m[i];
    return d;
}

int compatibilityDegree(int initialSlot, const LaurentPoly& v) {
    if (initialSlot < 0 || initialSlot >= v.arity())
        throw IndexOutOfRange("initial slot out of range");
    int minE = 0;
    bool first = true;
    for (const auto& [e, c] : v.terms()) {
        if (first) {
            minE = e[initialSlot];
            first = false;
        } else {
            minE = std::min(minE, e[initialSlot]);
        }
    }
    return -minE;
}

} // namespace clusterkit
