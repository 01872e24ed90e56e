#pragma once

#include "clusterkit/automorphism.hpp"
#include "clusterkit/chebyshev.hpp"

namespace clusterkit {

// A quasi cluster variable: a value outside the cluster-variable set that
// still expands positively in some cluster, with the polynomial family the
// power bracket <k, z> should use for it.
struct QuasiVariable {
    LaurentPoly value;
    TransformKind transform = TransformKind::bangle;
};

// Registry of quasi variables for a universe. Ids continue after the
// universe's cluster-variable ids.
class QuasiRegistry {
public:
    explicit QuasiRegistry(const ExchangeGraph& g) : g_(&g) {}

    int registerQuasi(QuasiVariable q);
    bool isQuasi(int id) const;
    const QuasiVariable& quasi(int id) const;
    int count() const { return static_cast<int>(entries_.size()); }
    const ExchangeGraph& graph() const { return *g_; }

    // <k, z>: plain power for cluster variables, the registered transform
    // for quasi variables.
    LaurentPoly bracket(int id, int k) const;
    const LaurentPoly& valueOf(int id) const;

private:
    const ExchangeGraph* g_;
    std::vector<QuasiVariable> entries_;
};

// A basis element together with its compatible-set decomposition.
struct BasisElement {
    LaurentPoly value;
    std::vector<std::pair<int, int>> decomposition;  // (variable-or-quasi id, power)
};

struct BasisFamily {
    std::vector<BasisElement> elements;
};

// All extended cluster monomials of total degree <= maxDegree supported on
// a single cluster, deduplicated; includes the empty monomial 1.
BasisFamily clusterMonomialBasis(const ExchangeGraph& g, int maxDegree);

struct DStableReport {
    bool transformEquivariant = false;  // (a)
    bool familyStable = false;          // (b)
    bool productsDistinct = false;      // (c)
    bool pass() const { return transformEquivariant && familyStable && productsDistinct; }
    std::string detail;
};

// Checks the three basis-stability conditions for the family under every
// element of G, up to the given power bound in condition (a).
DStableReport dStableCheck(const ExchangeGraph& g, const BasisFamily& family,
                           const Subgroup& G, const QuasiRegistry& quasi,
                           int powerBound = 3);

struct UniqueExpressionReport {
    long long pairsChecked = 0;
    // Violating quadruples (x1, x2, x1', x2') of variable ids, if any.
    std::vector<std::array<int, 4>> violations;
    bool pass() const { return violations.empty(); }
};

// Brute-force check of unique factorization of degree-two cluster-variable
// products with compatibility degree <= 2: x1 x2 = x1' x2' forces equal
// multisets. Exhaustive over the (finite) universe.
UniqueExpressionReport uniqueExpressionBruteForce(const ExchangeGraph& g);

// Pairwise compatibility degree d(z, w): the exponent of z in the
// denominator of w, read in a cluster containing z via re-expansion.
int pairCompatibilityDegree(const ExchangeGraph& g, int zId, int wId);

// Probabilistic linear-independence certificate by evaluation at random
// rational points; failureBound reports (#elements / #samples)-style odds.
struct IndependenceReport {
    bool independent = false;
    int trials = 0;
    std::string failureBound;
};

IndependenceReport linearIndependenceCheck(const BasisFamily& family, int arity,
                                           unsigned rngSeed, int trials = 3);

} // namespace clusterkit
