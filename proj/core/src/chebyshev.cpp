#include "clusterkit/chebyshev.hpp"

namespace clusterkit {

namespace {

IntPoly chebyshevRec(int k, const IntPoly& p0, const IntPoly& p1) {
    if (k == 0) return p0;
    if (k == 1) return p1;
    IntPoly prev = p0, cur = p1;
    for (int i = 2; i <= k; ++i) {
        IntPoly next(cur.size() + 1, 0);
        for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] = cur[j];
        for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

} // namespace

IntPoly chebyshevT(int k) {
    if (k < 0) throw IndexOutOfRange("Chebyshev order must be nonnegative");
    return chebyshevRec(k, IntPoly{2}, IntPoly{0, 1});
}

IntPoly chebyshevU(int k) {
    if (k < 0) throw IndexOutOfRange("Chebyshev order must be nonnegative");
    return chebyshevRec(k, IntPoly{1}, IntPoly{0, 1});
}

LaurentPoly evalIntPoly(const IntPoly& p, const LaurentPoly& z) {
    LaurentPoly acc = LaurentPoly::zero(z.arity());
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = acc * z + LaurentPoly::constant(z.arity(), Rational(*it));
    return acc;
}

LaurentPoly applyTransform(const ChebyshevKind& kind, const LaurentPoly& z) {
    switch (kind.kind) {
        case TransformKind::bangle:
            return z.pow(kind.order);
        case TransformKind::bracelet:
            return evalIntPoly(chebyshevT(kind.order), z);
        case TransformKind::band:
            return evalIntPoly(chebyshevU(kind.order), z);
    }
    throw InvalidCase("unknown transform kind");
}

} // namespace clusterkit
