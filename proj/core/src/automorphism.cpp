#include "clusterkit/automorphism.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace clusterkit {

bool Automorphism::isIdentity() const {
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != static_cast<int>(i)) return false;
    return true;
}

bool isDirect(const Automorphism& f) { return f.sign == +1; }

namespace {

// Positions of the target cluster inside the node's representative, one per
// initial position; respects the exchange/frozen split or throws.
std::vector<int> positionMapFor(const ExchangeGraph& g, int nodeId,
                                const std::vector<int>& target) {
    const GraphNode& node = g.node(nodeId);
    const Seed& init = g.initialSeed();
    std::map<int, int> posOf;
    for (int p = 0; p < init.size(); ++p) posOf.emplace(node.varIds[p], p);
    std::vector<int> pi(init.size());
    for (int p = 0; p < init.size(); ++p) {
        auto it = posOf.find(target[p]);
        if (it == posOf.end()) throw NotACluster("target assignment is not a cluster");
        pi[p] = it->second;
        if (init.isExchange(p) != node.seed.isExchange(pi[p]))
            throw NotAnAutomorphism("assignment mixes exchange and frozen variables");
    }
    return pi;
}

// Matrix criterion at the initial cluster: relabeled extended matrix of the
// image seed equals sign * initial matrix. Returns +1/-1, or 0 when neither
// sign works.
int matrixSign(const ExchangeGraph& g, int nodeId, const std::vector<int>& pi) {
    const Seed& init = g.initialSeed();
    const Seed& img = g.node(nodeId).seed;
    const int m = init.size(), n = init.nExchange;
    for (int sign : {+1, -1}) {
        bool ok = true;
        for (int i = 0; i < m && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                if (img.matrix.at(pi[i], pi[j]) != sign * init.matrix.at(i, j))
                    ok = false;
        if (ok) return sign;
    }
    return 0;
}

} // namespace

Automorphism automorphismFromClusterMap(const ExchangeGraph& g,
                                        const std::vector<int>& target) {
    if (!g.complete())
        throw IncompleteGraph("automorphisms require a complete exchange graph");
    const Seed& init = g.initialSeed();
    const int m = init.size();
    if (static_cast<int>(target.size()) != m)
        throw InvalidSpec("target assignment must cover every initial variable");

    auto nodeId = g.nodeOfVarIdSet(target);
    if (!nodeId) throw NotACluster("target assignment is not a cluster");
    const std::vector<int> pi = positionMapFor(g, *nodeId, target);

    const int sign = matrixSign(g, *nodeId, pi);
    if (sign == 0)
        throw NotAnAutomorphism("matrix criterion fails for both signs");

    // Propagate the substitution x_p -> target[p] over every variable.
    std::vector<LaurentPoly> images;
    images.reserve(m);
    for (int p = 0; p < m; ++p) images.push_back(g.variable(target[p]));

    Automorphism f;
    f.graph = &g;
    f.sign = sign;
    f.witness = target;
    f.perm.assign(g.variableCount(), -1);
    std::vector<bool> hit(g.variableCount(), false);
    for (int id = 0; id < g.variableCount(); ++id) {
        LaurentPoly image;
        try {
            image = substitute(g.variable(id), images);
        } catch (const NonLaurentResult&) {
            throw NotAnAutomorphism("image of a cluster variable is not Laurent");
        }
        auto imageId = g.variableId(image);
        if (!imageId)
            throw NotAnAutomorphism("image of a cluster variable is not a cluster variable");
        if (g.variableIsFrozen(id) != g.variableIsFrozen(*imageId))
            throw NotAnAutomorphism("image does not respect the exchange/frozen split");
        if (hit[*imageId])
            throw NotAnAutomorphism("induced variable map is not injective");
        hit[*imageId] = true;
        f.perm[id] = *imageId;
    }

    // Every cluster must map to a cluster.
    for (const auto& node : g.nodes()) {
        std::vector<int> image;
        image.reserve(node.varIds.size());
        for (int id : node.varIds) image.push_back(f.perm[id]);
        if (!g.nodeOfVarIdSet(image))
            throw NotAnAutomorphism("image of a cluster is not a cluster");
    }

    // Redundant depth-one check that the map commutes with mutation.
    for (int k = 0; k < init.nExchange; ++k) {
        const GraphEdge& e = g.node(0).edges[k];
        const GraphEdge& eImg = g.node(*nodeId).edges[pi[k]];
        std::vector<int> lhs;
        for (int id : g.node(e.target).varIds) lhs.push_back(f.perm[id]);
        std::sort(lhs.begin(), lhs.end());
        std::vector<int> rhs = g.node(eImg.target).varIds;
        std::sort(rhs.begin(), rhs.end());
        if (lhs != rhs)
            throw NotAnAutomorphism("map does not commute with mutation");
    }
    return f;
}

namespace {

std::vector<Automorphism> scanNodes(const ExchangeGraph& g, int lo, int hi) {
    const Seed& init = g.initialSeed();
    const int m = init.size(), n = init.nExchange;
    std::vector<Automorphism> found;
    std::vector<int> exPerm(n), frPerm(m - n);
    for (int nodeId = lo; nodeId < hi; ++nodeId) {
        std::iota(exPerm.begin(), exPerm.end(), 0);
        do {
            std::iota(frPerm.begin(), frPerm.end(), 0);
            do {
                // Candidate position map: initial exchange position j goes
                // to exchange position exPerm[j] of the node, frozen ones
                // likewise.
                std::vector<int> pi(m);
                for (int j = 0; j < n; ++j) pi[j] = exPerm[j];
                for (int j = n; j < m; ++j) pi[j] = n + frPerm[j - n];
                if (matrixSign(g, nodeId, pi) == 0) continue;
                std::vector<int> target(m);
                for (int p = 0; p < m; ++p)
                    target[p] = g.node(nodeId).varIds[pi[p]];
                found.push_back(automorphismFromClusterMap(g, target));
            } while (std::next_permutation(frPerm.begin(), frPerm.end()));
        } while (std::next_permutation(exPerm.begin(), exPerm.end()));
    }
    return found;
}

} // namespace

AutGroup AutGroup::enumerateAut(const ExchangeGraph& g, int threads) {
    if (!g.complete())
        throw IncompleteGraph("enumerateAut requires a complete exchange graph");

    AutGroup G;
    G.graph_ = &g;

    const int N = g.nodeCount();
    threads = std::max(1, std::min(threads, N));
    std::vector<std::vector<Automorphism>> chunks(threads);
    if (threads == 1) {
        chunks[0] = scanNodes(g, 0, N);
    } else {
        std::vector<std::thread> workers;
        std::vector<std::exception_ptr> errors(threads);
        for (int t = 0; t < threads; ++t) {
            const int lo = N * t / threads, hi = N * (t + 1) / threads;
            workers.emplace_back([&, t, lo, hi] {
                try {
                    chunks[t] = scanNodes(g, lo, hi);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto& w : workers) w.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    for (auto& chunk : chunks) {
        for (auto& f : chunk) {
            if (!G.index_.count(f.perm)) {
                G.index_.emplace(f.perm, static_cast<int>(G.elements_.size()));
                G.elements_.push_back(std::move(f));
            }
        }
    }
    G.buildTables();
    return G;
}

void AutGroup::buildTables() {
    const int N = order();
    table_.assign(static_cast<std::size_t>(N) * N, -1);
    inverse_.assign(N, -1);
    identity_ = -1;
    for (int a = 0; a < N; ++a)
        if (elements_[a].isIdentity()) identity_ = a;
    if (identity_ < 0) throw ContractViolation("automorphism group has no identity");
    for (int a = 0; a < N; ++a) {
        for (int b = 0; b < N; ++b) {
            Automorphism ab = compose(elements_[a], elements_[b]);
            auto it = index_.find(ab.perm);
            if (it == index_.end())
                throw ContractViolation("automorphism group is not closed");
            table_[static_cast<std::size_t>(a) * N + b] = it->second;
            if (it->second == identity_) inverse_[a] = b;
        }
    }
}

std::optional<int> AutGroup::idOf(const Automorphism& f) const {
    auto it = index_.find(f.perm);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
    if (f.graph != g.graph) throw MixedAmbient("automorphisms from different graphs");
    Automorphism r;
    r.graph = f.graph;
    r.sign = f.sign * g.sign;
    r.perm.resize(f.perm.size());
    for (std::size_t i = 0; i < f.perm.size(); ++i) r.perm[i] = f.perm[g.perm[i]];
    r.witness.resize(g.witness.size());
    for (std::size_t p = 0; p < g.witness.size(); ++p)
        r.witness[p] = f.perm[g.witness[p]];
    return r;
}

Automorphism inverse(const Automorphism& f) {
    Automorphism r;
    r.graph = f.graph;
    r.sign = f.sign;
    r.perm.assign(f.perm.size(), -1);
    for (std::size_t i = 0; i < f.perm.size(); ++i) r.perm[f.perm[i]] = static_cast<int>(i);
    const Seed& init = f.graph->initialSeed();
    r.witness.resize(init.size());
    for (int p = 0; p < init.size(); ++p) {
        const int selfId = *f.graph->variableId(init.expressions[p]);
        r.witness[p] = r.perm[selfId];
    }
    return r;
}

bool Subgroup::contains(int id) const {
    return std::binary_search(elementIds.begin(), elementIds.end(), id);
}

Subgroup closure(const AutGroup& G, const std::vector<int>& generatorIds) {
    std::set<int> elems{G.identityId()};
    std::vector<int> frontier{G.identityId()};
    while (!frontier.empty()) {
        const int a = frontier.back();
        frontier.pop_back();
        for (int gen : generatorIds) {
            for (int next : {G.multiply(a, gen), G.multiply(gen, a), G.inverseOf(a)}) {
                if (elems.insert(next).second) frontier.push_back(next);
            }
        }
    }
    if (generatorIds.empty()) elems = {G.identityId()};
    Subgroup H;
    H.ambient = &G;
    H.elementIds.assign(elems.begin(), elems.end());
    H.generatorIds = generatorIds;
    return H;
}

Subgroup trivialSubgroup(const AutGroup& G) { return closure(G, {}); }

Subgroup fullSubgroup(const AutGroup& G) {
    Subgroup H;
    H.ambient = &G;
    H.elementIds.resize(G.order());
    std::iota(H.elementIds.begin(), H.elementIds.end(), 0);
    for (int i = 0; i < G.order(); ++i) H.generatorIds.push_back(i);
    return H;
}

Subgroup conjugateSubgroup(const Subgroup& H, int fId) {
    const AutGroup& G = *H.ambient;
    const int fInv = G.inverseOf(fId);
    Subgroup K;
    K.ambient = &G;
    for (int h : H.elementIds)
        K.elementIds.push_back(G.multiply(G.multiply(fId, h), fInv));
    std::sort(K.elementIds.begin(), K.elementIds.end());
    for (int h : H.generatorIds)
        K.generatorIds.push_back(G.multiply(G.multiply(fId, h), fInv));
    return K;
}

std::optional<int> areConjugate(const Subgroup& H1, const Subgroup& H2) {
    if (H1.ambient != H2.ambient)
        throw MixedAmbient("subgroups from different ambient groups");
    const AutGroup& G = *H1.ambient;
    for (int f = 0; f < G.order(); ++f)
        if (conjugateSubgroup(H1, f) == H2) return f;
    return std::nullopt;
}

bool isSubgroupOf(const Subgroup& H1, const Subgroup& H2) {
    if (H1.ambient != H2.ambient)
        throw MixedAmbient("subgroups from different ambient groups");
    return std::includes(H2.elementIds.begin(), H2.elementIds.end(),
                         H1.elementIds.begin(), H1.elementIds.end());
}

std::vector<Subgroup> subgroupLattice(const AutGroup& G) {
    std::set<std::vector<int>> seen;
    std::vector<Subgroup> out;
    std::vector<Subgroup> frontier{trivialSubgroup(G)};
    seen.insert(frontier[0].elementIds);
    out.push_back(frontier[0]);
    while (!frontier.empty()) {
        Subgroup H = std::move(frontier.back());
        frontier.pop_back();
        for (int g = 0; g < G.order(); ++g) {
            if (H.contains(g)) continue;
            std::vector<int> gens = H.generatorIds;
            gens.push_back(g);
            Subgroup K = closure(G, gens);
            if (seen.insert(K.elementIds).second) {
                out.push_back(K);
                frontier.push_back(K);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool comembedCheck(const ExchangeGraph& host, const SubSeedSpec& spec,
                   const Automorphism& fDoublePrime) {
    const Seed complement = complementSubseed(spec);
    const ExchangeGraph& cg = *fDoublePrime.graph;
    if (cg.initialSeed().expressions != complement.expressions ||
        !(cg.initialSeed().matrix == complement.matrix))
        throw InvalidSpec("automorphism does not belong to the complement algebra");

    // Pre: fixes the complement frozen variables pointwise.
    for (int id : cg.frozenVariableIds())
        if (fDoublePrime.perm[id] != id)
            throw InvalidSpec("automorphism must fix the complement frozen variables");

    const Seed& init = host.initialSeed();
    const int m = init.size();

    // Host position -> complement position for the complement variables.
    std::map<LaurentPoly, int> compPos;
    for (int q = 0; q < complement.size(); ++q)
        compPos.emplace(complement.expressions[q], q);

    // Extension by the identity on the kept exchange variables.
    std::vector<int> target(m, -1);
    for (int p = 0; p < m; ++p) {
        auto it = compPos.find(init.expressions[p]);
        if (it == compPos.end()) {
            target[p] = *host.variableId(init.expressions[p]);
        } else {
            const int cid = *cg.variableId(init.expressions[p]);
            const LaurentPoly& image = cg.variable(fDoublePrime.perm[cid]);
            auto hid = host.variableId(image);
            if (!hid)
                throw ContractViolation("complement variable image missing from host");
            target[p] = *hid;
        }
    }

    // Route 1: the D0 submatrix comparison, rows over the complement frozen
    // variables, columns over the I0 directions.
    auto nodeId = host.nodeOfVarIdSet(target);
    if (!nodeId) throw NotACluster("extended assignment is not a cluster of the host");
    const GraphNode& node = host.node(*nodeId);
    std::map<int, int> posInNode;
    for (int p = 0; p < m; ++p) posInNode.emplace(node.varIds[p], p);

    bool d0Equal = true;
    for (int q = complement.nExchange; q < complement.size() && d0Equal; ++q) {
        const LaurentPoly& rowVar = complement.expressions[q];
        const int rowHostPos =
            static_cast<int>(std::find(init.expressions.begin(), init.expressions.end(),
                                       rowVar) -
                             init.expressions.begin());
        const int rowId = *host.variableId(rowVar);
        for (int colHostPos : spec.i0) {
            const int colId = *host.variableId(init.expressions[colHostPos]);
            const std::int64_t before = init.matrix.at(rowHostPos, colHostPos);
            const std::int64_t after =
                node.seed.matrix.at(posInNode.at(rowId), posInNode.at(colId));
            if (before != after) {
                d0Equal = false;
                break;
            }
        }
    }

    // Route 2: direct validation of the extension.
    bool extends = true;
    try {
        automorphismFromClusterMap(host, target);
    } catch (const NotAnAutomorphism&) {
        extends = false;
    }

    if (d0Equal != extends)
        throw ContractViolation("D0 comparison disagrees with direct validation");
    return d0Equal;
}

} // namespace clusterkit
