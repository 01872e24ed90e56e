#pragma once

#include "clusterkit/laurent.hpp"

namespace clusterkit {

// Dense univariate integer polynomial, coefficient of z^i at index i.
using IntPoly = std::vector<BigInt>;

// First kind, normalized for bracelets: T_0 = 2, T_1 = z,
// T_{n+1} = z T_n - T_{n-1}.
IntPoly chebyshevT(int k);
// Second kind, for bands: U_0 = 1, U_1 = z, same recursion.
IntPoly chebyshevU(int k);

LaurentPoly evalIntPoly(const IntPoly& p, const LaurentPoly& z);

enum class TransformKind { bangle, bracelet, band };

struct ChebyshevKind {
    TransformKind kind = TransformKind::bangle;
    int order = 0;
};

// Bangle: z^k. Bracelet: T_k(z). Band: U_k(z).
LaurentPoly applyTransform(const ChebyshevKind& kind, const LaurentPoly& z);

} // namespace clusterkit
