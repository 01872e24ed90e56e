#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "clusterkit/laurent.hpp"

namespace clusterkit {

// m x n integer matrix: rows indexed by all variables of a seed, columns by
// its exchange variables. The upper n x n block must be skew-symmetrizable.
class ExtendedMatrix {
public:
    ExtendedMatrix() : rows_(0), cols_(0) {}
    ExtendedMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}
    static ExtendedMatrix fromRows(const std::vector<std::vector<std::int64_t>>& rows,
                                   int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::int64_t at(int i, int j) const { return data_[idx(i, j)]; }
    std::int64_t& at(int i, int j) { return data_[idx(i, j)]; }

    ExtendedMatrix upperSquare() const;
    bool operator==(const ExtendedMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const ExtendedMatrix& o) const { return !(*this == o); }
    ExtendedMatrix negated() const;
    bool operator<(const ExtendedMatrix& o) const;

private:
    int rows_, cols_;
    std::vector<std::int64_t> data_;

    std::size_t idx(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw IndexOutOfRange("matrix index out of range");
        return static_cast<std::size_t>(i) * cols_ + j;
    }
};

// Positive diagonal D with (DB)^T = -DB; stored componentwise minimal.
struct SkewSymmetrizer {
    std::vector<std::int64_t> diagonal;
    bool operator==(const SkewSymmetrizer& o) const { return diagonal == o.diagonal; }
};

// Finds the minimal positive diagonal symmetrizer of an n x n matrix, or
// throws NotSkewSymmetrizable when none exists.
SkewSymmetrizer findSkewSymmetrizer(const ExtendedMatrix& B);
bool isSkewSymmetrizable(const ExtendedMatrix& B);

// A seed: named variables, extended matrix, and one Laurent expression per
// variable in the coordinates of the ambient context's initial cluster.
// Exchange variables occupy positions [0, nExchange); the rest are frozen.
// Seeds are immutable values; mutation returns a new seed.
struct Seed {
    std::vector<std::string> names;
    ExtendedMatrix matrix;
    std::vector<LaurentPoly> expressions;
    int nExchange = 0;

    int size() const { return static_cast<int>(expressions.size()); }
    int nFrozen() const { return size() - nExchange; }
    bool isExchange(int pos) const { return pos >= 0 && pos < nExchange; }
    // Arity of the coordinate system the expressions live in.
    int coordArity() const {
        return expressions.empty() ? 0 : expressions[0].arity();
    }

    void validate() const;
};

// Fresh seed whose expressions are the coordinate monomials; exchange
// variables first, frozen after, matching the matrix rows.
Seed makeInitialSeed(std::vector<std::string> names, ExtendedMatrix matrix,
                     int nExchange);

ExtendedMatrix mutateMatrix(const ExtendedMatrix& M, int k);

// Mutation at exchange position k (0-based): replaces expression k via the
// exchange relation computed in exact Laurent arithmetic, mutates the
// matrix, leaves everything else alone. Involutive.
Seed mutateSeed(const Seed& s, int k);

// Left fold of mutateSeed over the sequence.
Seed applySequence(const Seed& s, const std::vector<int>& ks);

// Reorder a seed's positions: position p of the result is position perm[p]
// of the input. Matrix rows and columns are carried along.
Seed permuteSeed(const Seed& s, const std::vector<int>& perm);

} // namespace clusterkit
