#include "clusterkit/seed.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <boost/integer/common_factor.hpp>

namespace clusterkit {

ExtendedMatrix ExtendedMatrix::fromRows(
    const std::vector<std::vector<std::int64_t>>& rows, int cols) {
    ExtendedMatrix m(static_cast<int>(rows.size()), cols);
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(rows[i].size()) != cols)
            throw IndexOutOfRange("ragged matrix rows");
        for (int j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

ExtendedMatrix ExtendedMatrix::upperSquare() const {
    ExtendedMatrix b(cols_, cols_);
    for (int i = 0; i < cols_; ++i)
        for (int j = 0; j < cols_; ++j) b.at(i, j) = at(i, j);
    return b;
}

ExtendedMatrix ExtendedMatrix::negated() const {
    ExtendedMatrix m = *this;
    for (auto& v : m.data_) v = -v;
    return m;
}

bool ExtendedMatrix::operator<(const ExtendedMatrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    return data_ < o.data_;
}

SkewSymmetrizer findSkewSymmetrizer(const ExtendedMatrix& B) {
    const int n = B.cols();
    if (B.rows() < n) throw NotSkewSymmetrizable("matrix has fewer rows than columns");

    for (int i = 0; i < n; ++i) {
        if (B.at(i, i) != 0)
            throw NotSkewSymmetrizable("nonzero diagonal entry");
        for (int j = 0; j < n; ++j) {
            const auto bij = B.at(i, j), bji = B.at(j, i);
            if ((bij == 0) != (bji == 0))
                throw NotSkewSymmetrizable("zero pattern is not symmetric");
            if (bij != 0 && (bij > 0) == (bji > 0))
                throw NotSkewSymmetrizable("opposite-sign condition violated");
        }
    }

    // d_j / d_i = -b_ij / b_ji on every edge of the constraint graph; solve
    // per connected component and scale to the least positive integers.
    std::vector<Rational> d(n, 0);
    std::vector<std::int64_t> result(n, 0);
    std::vector<int> component;
    std::vector<bool> seen(n, false);
    for (int root = 0; root < n; ++root) {
        if (seen[root]) continue;
        component.clear();
        d[root] = 1;
        seen[root] = true;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            component.push_back(i);
            for (int j = 0; j < n; ++j) {
                if (B.at(i, j) == 0) continue;
                const Rational ratio = Rational(-B.at(i, j)) / Rational(B.at(j, i));
                Rational dj = d[i] * ratio;
                if (seen[j]) {
                    if (d[j] != dj)
                        throw NotSkewSymmetrizable("inconsistent ratio cycle");
                } else {
                    d[j] = dj;
                    seen[j] = true;
                    stack.push_back(j);
                }
            }
        }
        BigInt lcmDen = 1;
        for (int i : component)
            lcmDen = boost::integer::lcm(lcmDen, denominator(d[i]));
        BigInt gcdNum = 0;
        for (int i : component)
            gcdNum = boost::integer::gcd(gcdNum, BigInt(numerator(d[i]) * (lcmDen / denominator(d[i]))));
        for (int i : component) {
            BigInt v = numerator(d[i]) * (lcmDen / denominator(d[i])) / gcdNum;
            result[i] = static_cast<std::int64_t>(v);
        }
    }
    return SkewSymmetrizer{std::move(result)};
}

bool isSkewSymmetrizable(const ExtendedMatrix& B) {
    try {
        findSkewSymmetrizer(B);
        return true;
    } catch (const NotSkewSymmetrizable&) {
        return false;
    }
}

void Seed::validate() const {
    const int m = size();
    if (static_cast<int>(names.size()) != m)
        throw InvalidSpec("seed has " + std::to_string(names.size()) + " names for " +
                          std::to_string(m) + " variables");
    if (nExchange < 0 || nExchange > m)
        throw InvalidSpec("exchange count out of range");
    if (matrix.rows() != m || matrix.cols() != nExchange)
        throw InvalidSpec("matrix shape does not match seed");
    if (nExchange > 0) findSkewSymmetrizer(matrix.upperSquare());
    std::set<LaurentPoly> distinct(expressions.begin(), expressions.end());
    if (static_cast<int>(distinct.size()) != m)
        throw InvalidSpec("seed expressions are not distinct");
    const int arity = coordArity();
    for (const auto& e : expressions)
        if (e.arity() != arity) throw ArityMismatch("mixed expression arities in seed");
}

Seed makeInitialSeed(std::vector<std::string> names, ExtendedMatrix matrix,
                     int nExchange) {
    Seed s;
    s.names = std::move(names);
    s.matrix = std::move(matrix);
    s.nExchange = nExchange;
    const int m = static_cast<int>(s.names.size());
    s.expressions.reserve(m);
    for (int i = 0; i < m; ++i)
        s.expressions.push_back(LaurentPoly::variable(m, i));
    s.validate();
    return s;
}

namespace {

std::int64_t checkedAdd(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw ClusterError("matrix entry overflow during mutation");
    return r;
}

std::int64_t checkedMul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw ClusterError("matrix entry overflow during mutation");
    return r;
}

} // namespace

ExtendedMatrix mutateMatrix(const ExtendedMatrix& M, int k) {
    if (k < 0 || k >= M.cols()) throw IndexOutOfRange("mutation index out of range");
    ExtendedMatrix R(M.rows(), M.cols());
    for (int i = 0; i < M.rows(); ++i) {
        for (int j = 0; j < M.cols(); ++j) {
            if (i == k || j == k) {
                R.at(i, j) = -M.at(i, j);
            } else {
                // b'_ij = b_ij + sgn(b_ik) max(b_ik b_kj, 0)
                const std::int64_t bik = M.at(i, k), bkj = M.at(k, j);
                std::int64_t extra = 0;
                if (bik != 0 && bkj != 0 && (bik > 0) == (bkj > 0))
                    extra = (bik > 0) ? checkedMul(bik, bkj) : -checkedMul(bik, bkj);
                R.at(i, j) = checkedAdd(M.at(i, j), extra);
            }
        }
    }
    return R;
}

Seed mutateSeed(const Seed& s, int k) {
    if (k < 0 || k >= s.nExchange)
        throw IndexOutOfRange("mutation index out of range");
    const int arity = s.coordArity();
    LaurentPoly pos = LaurentPoly::constant(arity, 1);
    LaurentPoly neg = LaurentPoly::constant(arity, 1);
    for (int j = 0; j < s.size(); ++j) {
        const auto b = s.matrix.at(j, k);
        if (b > 0)
            pos = pos * s.expressions[j].pow(static_cast<int>(b));
        else if (b < 0)
            neg = neg * s.expressions[j].pow(static_cast<int>(-b));
    }
    Seed r = s;
    r.matrix = mutateMatrix(s.matrix, k);
    r.expressions[k] = exactDivide(pos + neg, s.expressions[k]);
    r.names[k] = "mu" + std::to_string(k + 1) + "(" + s.names[k] + ")";
    return r;
}

Seed applySequence(const Seed& s, const std::vector<int>& ks) {
    Seed cur = s;
    for (int k : ks) cur = mutateSeed(cur, k);
    return cur;
}

Seed permuteSeed(const Seed& s, const std::vector<int>& perm) {
    const int m = s.size();
    if (static_cast<int>(perm.size()) != m)
        throw IndexOutOfRange("permutation size mismatch");
    Seed r;
    r.nExchange = s.nExchange;
    r.names.resize(m);
    r.expressions.resize(m);
    r.matrix = ExtendedMatrix(m, s.nExchange);
    for (int p = 0; p < m; ++p) {
        const int q = perm[p];
        if (s.isExchange(q) != (p < s.nExchange))
            throw InvalidSpec("permutation mixes exchange and frozen positions");
        r.names[p] = s.names[q];
        r.expressions[p] = s.expressions[q];
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < s.nExchange; ++j)
            r.matrix.at(i, j) = s.matrix.at(perm[i], perm[j]);
    return r;
}

} // namespace clusterkit
