#pragma once

#include "clusterkit/exchange_graph.hpp"

namespace clusterkit {

// A mixing-type sub-seed specification against a host seed: I0 marks
// exchange positions to freeze, I1 marks positions to delete. I0 and I1 are
// disjoint; I0 only contains exchange positions.
struct SubSeedSpec {
    Seed hostSeed;
    std::vector<int> i0;
    std::vector<int> i1;

    void validate() const;
};

// The sub-seed: exchange variables are the host exchange variables outside
// I0 and I1, frozen variables are the host frozen ones plus I0 minus I1,
// and the matrix is the corresponding submatrix. Expressions stay in the
// host's coordinates.
Seed mixingSubseed(const SubSeedSpec& spec);

// Zero-block criterion: the sub-seed generates a cluster subalgebra iff
// b_xy = 0 for every deleted x and every kept exchange y.
bool isClusterSubalgebraSpec(const SubSeedSpec& spec);

// Complement sub-seed: covers the exchange directions the sub-seed froze or
// dropped; the frozen I0 variables of the sub-seed become frozen here too.
Seed complementSubseed(const SubSeedSpec& spec);

// Drop every frozen variable whose matrix row is zero. Idempotent.
Seed reducedSubseed(const Seed& s);

// Decides whether A(a2) is a cluster subalgebra of A(a1): searches the
// seeds of A(a1) for a spec passing the criterion whose sub-seed equals a
// seed of A(a2), up to relabeling and a global matrix sign. Both algebras'
// variables must live inside the (finite, complete) universe graph.
bool subalgebraContains(const Seed& a1, const Seed& a2, const ExchangeGraph& universe);

// Enumeration helpers shared by the Galois layer.

// All (i0, i1) assignments over the host seed; 3^m of them for m positions.
std::vector<SubSeedSpec> allSpecsOf(const Seed& host);

// Seed keys of every seed of A(sub), via a fresh enumeration.
std::set<SeedKey> seedKeysOfAlgebra(const Seed& sub, int budget = ExchangeGraph::kDefaultBudget);

} // namespace clusterkit
