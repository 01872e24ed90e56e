#pragma once

#include "clusterkit/exchange_graph.hpp"
#include "clusterkit/subseed.hpp"

namespace clusterkit {

// A validated cluster automorphism of a finite-type universe, stored as the
// induced permutation of all cluster-variable ids plus a direction sign:
// +1 when the relabeled extended matrix of the image cluster equals the
// initial one, -1 when it equals its negation.
struct Automorphism {
    std::vector<int> perm;     // image id per variable id
    int sign = +1;
    std::vector<int> witness;  // image ids of the initial cluster, per position
    const ExchangeGraph* graph = nullptr;

    bool isIdentity() const;
    bool operator==(const Automorphism& o) const { return perm == o.perm; }
    bool operator<(const Automorphism& o) const { return perm < o.perm; }
};

bool isDirect(const Automorphism& f);

// Build and validate an automorphism from the image assignment of the
// initial cluster. target[p] is the variable id the initial position p maps
// to. Throws NotACluster when the ids do not form a cluster and
// NotAnAutomorphism when neither matrix sign validates or the substitution
// propagation leaves the variable set.
Automorphism automorphismFromClusterMap(const ExchangeGraph& g,
                                        const std::vector<int>& target);

// The full automorphism group together with its multiplication table.
class AutGroup {
public:
    // Scans every (cluster, bijection, sign) candidate. The node scan may
    // be split across threads; the merge is by node order, so the result
    // is identical for any thread count.
    static AutGroup enumerateAut(const ExchangeGraph& g, int threads = 1);

    const ExchangeGraph& graph() const { return *graph_; }
    int order() const { return static_cast<int>(elements_.size()); }
    const Automorphism& element(int id) const { return elements_.at(id); }
    int identityId() const { return identity_; }
    int multiply(int a, int b) const { return table_[static_cast<std::size_t>(a) * order() + b]; }
    int inverseOf(int a) const { return inverse_.at(a); }
    std::optional<int> idOf(const Automorphism& f) const;

private:
    const ExchangeGraph* graph_ = nullptr;
    std::vector<Automorphism> elements_;
    std::map<std::vector<int>, int> index_;
    std::vector<int> table_;
    std::vector<int> inverse_;
    int identity_ = -1;

    void buildTables();
};

Automorphism compose(const Automorphism& f, const Automorphism& g);
Automorphism inverse(const Automorphism& f);

// A subgroup is a sorted element-id list into an ambient AutGroup, closed
// under composition and inverse.
struct Subgroup {
    const AutGroup* ambient = nullptr;
    std::vector<int> elementIds;
    std::vector<int> generatorIds;

    int order() const { return static_cast<int>(elementIds.size()); }
    bool contains(int id) const;
    bool operator==(const Subgroup& o) const { return elementIds == o.elementIds; }
    bool operator<(const Subgroup& o) const { return elementIds < o.elementIds; }
};

Subgroup closure(const AutGroup& G, const std::vector<int>& generatorIds);
Subgroup trivialSubgroup(const AutGroup& G);
Subgroup fullSubgroup(const AutGroup& G);
Subgroup conjugateSubgroup(const Subgroup& H, int fId);
std::optional<int> areConjugate(const Subgroup& H1, const Subgroup& H2);
bool isSubgroupOf(const Subgroup& H1, const Subgroup& H2);

// Every subgroup of the (small, finite) group.
std::vector<Subgroup> subgroupLattice(const AutGroup& G);

// Prop-comembed style check: whether the automorphism fDoublePrime of the
// complement algebra of `spec` (fixing its frozen variables pointwise)
// extends by the identity on the kept exchange variables to an automorphism
// of the host universe. Verified two ways: via the D0 submatrix comparison
// and via direct validation of the extension; the routes must agree.
bool comembedCheck(const ExchangeGraph& host, const SubSeedSpec& spec,
                   const Automorphism& fDoublePrime);

} // namespace clusterkit
