#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "clusterkit/seed.hpp"

namespace clusterkit {

// Canonical form of an unordered cluster: the sorted expressions.
using ClusterKey = std::vector<LaurentPoly>;

ClusterKey clusterKeyOf(const Seed& s);

// Canonical form of an unordered seed, up to a global sign of the matrix
// (a seed and its negation generate the same algebra with the same
// clusters). Variables are sorted within the exchange/frozen split and the
// matrix is remapped accordingly; the lexicographically smaller of the two
// sign variants is kept.
struct SeedKey {
    ClusterKey exchange;
    ClusterKey frozen;
    ExtendedMatrix matrix;

    bool operator<(const SeedKey& o) const;
    bool operator==(const SeedKey& o) const;
};

SeedKey seedKeyOf(const Seed& s);

struct GraphEdge {
    int target = -1;
    // Position p of mutateSeed(rep, k) sits at position align[p] of the
    // target's representative.
    std::vector<int> align;
};

struct GraphNode {
    Seed seed;
    std::vector<int> varIds;           // per position of the representative
    std::vector<GraphEdge> edges;      // one per exchange position
};

struct EnumerateOptions {
    // 0 keeps plain FIFO order; anything else shuffles the expansion order
    // (the resulting graph must be identical up to relabeling).
    unsigned shuffleSeed = 0;
};

// Deduplicated exchange graph of a seed: the finite universe all group and
// Galois computation runs over. Immutable once enumerated.
class ExchangeGraph {
public:
    static constexpr int kDefaultBudget = 20000;

    // BFS closure with deterministic node ids. Stops after nodeBudget nodes
    // and flags the graph incomplete instead of failing.
    static ExchangeGraph enumerate(const Seed& initial, int nodeBudget,
                                   const EnumerateOptions& opts = {});

    bool complete() const { return complete_; }
    int nodeCount() const { return static_cast<int>(nodes_.size()); }
    int variableCount() const { return static_cast<int>(varPolys_.size()); }
    int nExchange() const { return initial_.nExchange; }
    int nFrozen() const { return initial_.nFrozen(); }

    const Seed& initialSeed() const { return initial_; }
    const GraphNode& node(int id) const { return nodes_.at(id); }
    const std::vector<GraphNode>& nodes() const { return nodes_; }

    const LaurentPoly& variable(int id) const { return varPolys_.at(id); }
    bool variableIsFrozen(int id) const { return frozenIds_.count(id) > 0; }
    std::vector<int> frozenVariableIds() const;
    std::optional<int> variableId(const LaurentPoly& p) const;
    std::optional<int> nodeOf(const ClusterKey& key) const;
    // Node whose variable-id set matches, if any.
    std::optional<int> nodeOfVarIdSet(std::vector<int> ids) const;

    // All discovered cluster variables; requires a complete graph.
    std::vector<std::pair<int, LaurentPoly>> variableSet() const;

    // Expansions of every variable in the coordinates of the given node's
    // cluster (slot p of the result's arity = position p of the node's
    // representative). Requires a complete graph.
    std::vector<LaurentPoly> reExpand(int nodeId) const;

    // Relabeling-independent fingerprint, used to compare graphs produced
    // with different exploration orders.
    std::string canonicalFingerprint() const;

    std::string exportDot() const;

private:
    Seed initial_;
    std::vector<GraphNode> nodes_;
    std::map<ClusterKey, int> keyToNode_;
    std::map<LaurentPoly, int> varIndex_;
    std::vector<LaurentPoly> varPolys_;
    std::set<int> frozenIds_;
    bool complete_ = false;

    int internVariable(const LaurentPoly& p, bool frozen);
    void requireComplete(const char* op) const;
};

} // namespace clusterkit
