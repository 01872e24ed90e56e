#pragma once

#include <memory>

#include "clusterkit/automorphism.hpp"

namespace clusterkit {

// A cluster subalgebra of the universe, carried as the sub-seed it came
// from plus the full variable data of the algebra it generates.
struct SubalgebraHandle {
    Seed seed;                   // the sub-seed, in universe coordinates
    int hostNode = -1;           // node of the universe the spec was taken at
    SubSeedSpec spec;
    std::vector<int> varIds;     // all cluster-variable ids of the algebra, sorted
    std::vector<int> frozenIds;  // frozen variable ids, sorted
    int rank = 0;

    using Key = std::pair<std::vector<int>, std::vector<int>>;
    Key key() const { return {varIds, frozenIds}; }
    bool isWhole(const ExchangeGraph& g) const {
        return static_cast<int>(varIds.size()) == g.variableCount() &&
               rank == g.nExchange();
    }
};

struct FixedAnalysis {
    Subgroup group;
    std::vector<int> fixedVariables;            // sorted ids
    std::vector<std::vector<int>> orbits;       // partition of all ids
    std::vector<SubalgebraHandle> maximalSubalgebras;
    std::vector<SubalgebraHandle> msub;         // subset with Galois group == H
};

struct GaloisWitnessReport {
    bool vacuouslyGalois = false;   // sub is the whole algebra
    bool galoisExtension = false;   // always false when a witness exists
    int witnessVariable = -1;
    std::vector<int> orbit;
    std::vector<int> outsideSupportSlots;  // host-seed positions hit outside sub
    int expansionNode = -1;                // cluster the certificate is read in
};

struct GaladWitness {
    int conjugator = -1;
    SubalgebraHandle::Key source, image;
};

struct GaladReport {
    bool conjugate = false;
    std::optional<int> conjugatorId;
    std::vector<GaladWitness> witnesses;
    bool inverseDirectionVerified = false;
};

// Shared caches for the Galois layer: one engine per universe + group.
class GaloisEngine {
public:
    GaloisEngine(const ExchangeGraph& universe, const AutGroup& aut);

    const ExchangeGraph& universe() const { return g_; }
    const AutGroup& aut() const { return G_; }

    // Handle for the whole algebra (empty spec at the initial node).
    SubalgebraHandle wholeAlgebra();
    // Handle from an explicit spec against a node's representative seed.
    SubalgebraHandle handleFor(int nodeId, const SubSeedSpec& spec);
    // Handle from a bare sub-seed; verifies it is a cluster subalgebra of
    // the universe (NotASubalgebra otherwise).
    SubalgebraHandle handleForSeed(const Seed& sub);

    // Automorphisms fixing every cluster variable of A(sub) pointwise.
    Subgroup galoisGroup(const SubalgebraHandle& sub);
    // The Galois map: same computation, order-reversing by contract.
    Subgroup galoisMapXi(const SubalgebraHandle& sub) { return galoisGroup(sub); }

    // Containment of the generated algebras, decided by exhaustive sub-seed
    // search over the enumerated seeds (cached).
    bool contains(const SubalgebraHandle& a1, const SubalgebraHandle& a2);

    FixedAnalysis fixedAnalysis(const Subgroup& H);
    bool inKerPhi(const Subgroup& H);

    // Orbit-sum certificate that the Galois-like extension A(sub) <= A^H is
    // not a Galois extension (finite orbits). Reads expansions in the
    // cluster of sub's host node.
    GaloisWitnessReport isGaloisExtensionWitness(const Subgroup& H,
                                                 const SubalgebraHandle& sub);

    int orbitSize(const Subgroup& H, int varId) const;

    // Conjugacy <-> isomorphic Galois-like extension subalgebras, both
    // directions, with explicit witnesses. KerPhiInput when either subgroup
    // has empty msub.
    GaladReport verifyGalad(const Subgroup& H1, const Subgroup& H2);

    // Ascending subgroup chain -> descending chain of reduced sub-seeds,
    // one subalgebra per M^H_i, by deterministic backtracking search.
    // nullopt = no selection works (a counterexample; callers report it).
    std::optional<std::vector<SubalgebraHandle>> reverseGaloisChain(
        const std::vector<Subgroup>& ascending);

    // Image of a subalgebra under an automorphism, as a handle.
    SubalgebraHandle imageHandle(const SubalgebraHandle& sub, const Automorphism& f);

    // Small generating set, greedily chosen; deterministic.
    std::vector<int> minimalGenerators(const Subgroup& H) const;

private:
    const ExchangeGraph& g_;
    const AutGroup& G_;

    struct AlgebraData {
        std::shared_ptr<ExchangeGraph> graph;
        std::set<SeedKey> seedKeys;
        std::vector<int> varIds;  // universe ids, sorted
    };
    std::map<SeedKey, std::shared_ptr<AlgebraData>> algebraCache_;
    std::map<std::vector<int>, std::shared_ptr<FixedAnalysis>> fixedCache_;

    std::shared_ptr<AlgebraData> algebraData(const Seed& sub);
    SubalgebraHandle makeHandle(int nodeId, SubSeedSpec spec);
};

// Free-standing forms of the spec-level operations.
Subgroup galoisGroup(GaloisEngine& engine, const Seed& sub);
Subgroup galoisMapXi(GaloisEngine& engine, const Seed& sub);

} // namespace clusterkit
