#include "clusterkit/galois.hpp"

#include <algorithm>
#include <functional>

namespace clusterkit {

GaloisEngine::GaloisEngine(const ExchangeGraph& universe, const AutGroup& aut)
    : g_(universe), G_(aut) {
    if (&aut.graph() != &universe)
        throw MixedAmbient("automorphism group belongs to a different universe");
    if (!universe.complete())
        throw IncompleteGraph("Galois analysis requires a complete universe");
}

std::shared_ptr<GaloisEngine::AlgebraData> GaloisEngine::algebraData(const Seed& sub) {
    const SeedKey key = seedKeyOf(sub);
    auto it = algebraCache_.find(key);
    if (it != algebraCache_.end()) return it->second;

    auto data = std::make_shared<AlgebraData>();
    data->graph = std::make_shared<ExchangeGraph>(
        ExchangeGraph::enumerate(sub, ExchangeGraph::kDefaultBudget));
    if (!data->graph->complete())
        throw IncompleteGraph("subalgebra enumeration exceeded its budget");
    for (const auto& node : data->graph->nodes())
        data->seedKeys.insert(seedKeyOf(node.seed));
    std::set<int> ids;
    for (const auto& [localId, poly] : data->graph->variableSet()) {
        auto uid = g_.variableId(poly);
        if (!uid)
            throw ContractViolation("subalgebra variable missing from the universe");
        ids.insert(*uid);
    }
    data->varIds.assign(ids.begin(), ids.end());
    algebraCache_.emplace(key, data);
    return data;
}

SubalgebraHandle GaloisEngine::makeHandle(int nodeId, SubSeedSpec spec) {
    SubalgebraHandle h;
    h.hostNode = nodeId;
    h.seed = mixingSubseed(spec);
    h.spec = std::move(spec);
    h.rank = h.seed.nExchange;
    auto data = algebraData(h.seed);
    h.varIds = data->varIds;
    std::set<int> fr;
    for (int p = h.seed.nExchange; p < h.seed.size(); ++p)
        fr.insert(*g_.variableId(h.seed.expressions[p]));
    h.frozenIds.assign(fr.begin(), fr.end());
    return h;
}

SubalgebraHandle GaloisEngine::wholeAlgebra() {
    SubSeedSpec spec;
    spec.hostSeed = g_.initialSeed();
    return makeHandle(0, std::move(spec));
}

SubalgebraHandle GaloisEngine::handleFor(int nodeId, const SubSeedSpec& spec) {
    if (nodeId < 0 || nodeId >= g_.nodeCount())
        throw IndexOutOfRange("node id out of range");
    if (spec.hostSeed.expressions != g_.node(nodeId).seed.expressions)
        throw InvalidSpec("spec host seed does not match the node representative");
    if (!isClusterSubalgebraSpec(spec))
        throw NotASubalgebra("spec does not satisfy the subalgebra criterion");
    return makeHandle(nodeId, spec);
}

SubalgebraHandle GaloisEngine::handleForSeed(const Seed& sub) {
    const SeedKey target = seedKeyOf(sub);
    for (int nodeId = 0; nodeId < g_.nodeCount(); ++nodeId) {
        for (auto& spec : allSpecsOf(g_.node(nodeId).seed)) {
            if (!isClusterSubalgebraSpec(spec)) continue;
            if (seedKeyOf(mixingSubseed(spec)) == target)
                return makeHandle(nodeId, std::move(spec));
        }
    }
    throw NotASubalgebra("seed is not a mixing-type sub-seed of any universe seed");
}

Subgroup GaloisEngine::galoisGroup(const SubalgebraHandle& sub) {
    Subgroup H;
    H.ambient = &G_;
    for (int f = 0; f < G_.order(); ++f) {
        const auto& perm = G_.element(f).perm;
        bool fixes = true;
        for (int id : sub.varIds)
            if (perm[id] != id) {
                fixes = false;
                break;
            }
        if (fixes) H.elementIds.push_back(f);
    }
    H.generatorIds = minimalGenerators(H);
    return H;
}

bool GaloisEngine::contains(const SubalgebraHandle& a1, const SubalgebraHandle& a2) {
    if (!std::includes(a1.varIds.begin(), a1.varIds.end(), a2.varIds.begin(),
                       a2.varIds.end()))
        return false;
    auto d1 = algebraData(a1.seed);
    auto d2 = algebraData(a2.seed);
    const int m2 = a2.seed.size(), n2 = a2.seed.nExchange;
    for (const auto& node : d1->graph->nodes()) {
        for (const auto& spec : allSpecsOf(node.seed)) {
            const int i1ex = static_cast<int>(
                std::count_if(spec.i1.begin(), spec.i1.end(),
                              [&](int p) { return node.seed.isExchange(p); }));
            const int kept = node.seed.size() - static_cast<int>(spec.i1.size());
            const int keptEx =
                node.seed.nExchange - static_cast<int>(spec.i0.size()) - i1ex;
            if (kept != m2 || keptEx != n2) continue;
            if (!isClusterSubalgebraSpec(spec)) continue;
            if (d2->seedKeys.count(seedKeyOf(mixingSubseed(spec)))) return true;
        }
    }
    return false;
}

FixedAnalysis GaloisEngine::fixedAnalysis(const Subgroup& H) {
    if (H.ambient != &G_) throw MixedAmbient("subgroup from a different ambient group");
    auto cached = fixedCache_.find(H.elementIds);
    if (cached != fixedCache_.end()) return *cached->second;

    FixedAnalysis out;
    out.group = H;

    const int V = g_.variableCount();
    std::vector<bool> fixed(V, true);
    for (int f : H.elementIds) {
        const auto& perm = G_.element(f).perm;
        for (int id = 0; id < V; ++id)
            if (perm[id] != id) fixed[id] = false;
    }
    for (int id = 0; id < V; ++id)
        if (fixed[id]) out.fixedVariables.push_back(id);

    // Orbits of the group action, cycle by cycle.
    std::vector<bool> seen(V, false);
    for (int id = 0; id < V; ++id) {
        if (seen[id]) continue;
        std::vector<int> orbit{id};
        seen[id] = true;
        for (std::size_t i = 0; i < orbit.size(); ++i)
            for (int f : H.elementIds) {
                const int img = G_.element(f).perm[orbit[i]];
                if (!seen[img]) {
                    seen[img] = true;
                    orbit.push_back(img);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        out.orbits.push_back(std::move(orbit));
    }

    // Candidate fixed subalgebras, deduplicated by the generated algebra.
    std::map<SubalgebraHandle::Key, SubalgebraHandle> candidates;
    if (H.order() == 1) {
        SubalgebraHandle whole = wholeAlgebra();
        candidates.emplace(whole.key(), std::move(whole));
    } else {
        for (int nodeId = 0; nodeId < g_.nodeCount(); ++nodeId) {
            const GraphNode& node = g_.node(nodeId);
            std::set<SeedKey> seenSeeds;
            for (auto& spec : allSpecsOf(node.seed)) {
                std::vector<bool> dropped(node.seed.size(), false);
                for (int p : spec.i1) dropped[p] = true;
                bool clusterFixed = true;
                for (int p = 0; p < node.seed.size() && clusterFixed; ++p)
                    if (!dropped[p] && !fixed[node.varIds[p]]) clusterFixed = false;
                if (!clusterFixed) continue;
                if (!isClusterSubalgebraSpec(spec)) continue;
                const Seed sub = mixingSubseed(spec);
                if (!seenSeeds.insert(seedKeyOf(sub)).second) continue;
                SubalgebraHandle h = makeHandle(nodeId, spec);
                bool allFixed = true;
                for (int id : h.varIds)
                    if (!fixed[id]) {
                        allFixed = false;
                        break;
                    }
                if (!allFixed) continue;
                candidates.emplace(h.key(), std::move(h));
            }
        }
    }

    // Keep the maximal ones under containment.
    std::vector<SubalgebraHandle> pool;
    for (auto& [key, h] : candidates) pool.push_back(std::move(h));
    for (std::size_t i = 0; i < pool.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < pool.size() && maximal; ++j) {
            if (i == j) continue;
            if (pool[j].key() == pool[i].key()) continue;
            if (contains(pool[j], pool[i])) maximal = false;
        }
        if (maximal) out.maximalSubalgebras.push_back(pool[i]);
    }

    for (const auto& h : out.maximalSubalgebras)
        if (galoisGroup(h) == H) out.msub.push_back(h);

    auto shared = std::make_shared<FixedAnalysis>(out);
    fixedCache_.emplace(H.elementIds, shared);
    return out;
}

bool GaloisEngine::inKerPhi(const Subgroup& H) {
    return fixedAnalysis(H).msub.empty();
}

int GaloisEngine::orbitSize(const Subgroup& H, int varId) const {
    if (varId < 0 || varId >= g_.variableCount())
        throw IndexOutOfRange("variable id out of range");
    std::set<int> orbit{varId};
    std::vector<int> frontier{varId};
    while (!frontier.empty()) {
        const int v = frontier.back();
        frontier.pop_back();
        for (int f : H.elementIds) {
            const int img = G_.element(f).perm[v];
            if (orbit.insert(img).second) frontier.push_back(img);
        }
    }
    return static_cast<int>(orbit.size());
}

GaloisWitnessReport GaloisEngine::isGaloisExtensionWitness(
    const Subgroup& H, const SubalgebraHandle& sub) {
    GaloisWitnessReport report;
    if (sub.isWhole(g_)) {
        report.vacuouslyGalois = true;
        report.galoisExtension = true;
        return report;
    }

    // Certificate coordinates: the cluster of the seed the sub-seed was cut
    // from. A(sub) lives inside the Laurent ring of the kept positions, so
    // an H-fixed element whose expansion leaves those slots sits in
    // A^H \ A(sub).
    const int nodeId = sub.hostNode;
    report.expansionNode = nodeId;
    const std::vector<LaurentPoly> fresh = g_.reExpand(nodeId);
    std::vector<bool> keptSlot(g_.initialSeed().size(), false);
    for (const auto& e : sub.seed.expressions) {
        // position of the sub variable inside the host node's cluster
        const GraphNode& node = g_.node(nodeId);
        for (int p = 0; p < node.seed.size(); ++p)
            if (node.seed.expressions[p] == e) keptSlot[p] = true;
    }

    std::set<int> inSub(sub.varIds.begin(), sub.varIds.end());
    for (int z = 0; z < g_.variableCount(); ++z) {
        if (inSub.count(z)) continue;
        // orbit sum
        std::set<int> orbitSet{z};
        std::vector<int> frontier{z};
        while (!frontier.empty()) {
            const int v = frontier.back();
            frontier.pop_back();
            for (int f : H.elementIds) {
                const int img = G_.element(f).perm[v];
                if (orbitSet.insert(img).second) frontier.push_back(img);
            }
        }
        LaurentPoly Z(static_cast<int>(keptSlot.size()));
        bool allPositive = true;
        for (int v : orbitSet) {
            if (!fresh[v].isPositive()) allPositive = false;
            Z = Z + fresh[v];
        }
        if (!allPositive)
            throw ContractViolation("cluster variable with non-positive expansion");

        // f(Z) = Z for every f in H, verified on the recomputed sum.
        bool invariant = true;
        for (int f : H.elementIds) {
            LaurentPoly Zf(static_cast<int>(keptSlot.size()));
            for (int v : orbitSet) Zf = Zf + fresh[G_.element(f).perm[v]];
            if (Zf != Z) {
                invariant = false;
                break;
            }
        }
        if (!invariant)
            throw ContractViolation("orbit sum is not H-invariant");

        std::vector<int> outside;
        for (int slot : Z.support())
            if (!keptSlot[slot]) outside.push_back(slot);
        if (outside.empty()) continue;

        report.witnessVariable = z;
        report.orbit.assign(orbitSet.begin(), orbitSet.end());
        report.outsideSupportSlots = outside;
        report.galoisExtension = false;
        return report;
    }
    throw NoOutsideVariable("no orbit-sum certificate found outside the subalgebra");
}

SubalgebraHandle GaloisEngine::imageHandle(const SubalgebraHandle& sub,
                                           const Automorphism& f) {
    if (f.graph != &g_) throw MixedAmbient("automorphism from a different universe");
    // Image of the host cluster, then the spec transported along positions.
    const GraphNode& host = g_.node(sub.hostNode);
    std::vector<int> imageIds;
    imageIds.reserve(host.varIds.size());
    for (int id : host.varIds) imageIds.push_back(f.perm[id]);
    auto imageNode = g_.nodeOfVarIdSet(imageIds);
    if (!imageNode)
        throw ContractViolation("automorphism image of a cluster is not a cluster");
    const GraphNode& img = g_.node(*imageNode);
    std::map<int, int> posOf;
    for (int p = 0; p < img.seed.size(); ++p) posOf.emplace(img.varIds[p], p);

    SubSeedSpec spec;
    spec.hostSeed = img.seed;
    for (int p : sub.spec.i0) spec.i0.push_back(posOf.at(f.perm[host.varIds[p]]));
    for (int p : sub.spec.i1) spec.i1.push_back(posOf.at(f.perm[host.varIds[p]]));
    std::sort(spec.i0.begin(), spec.i0.end());
    std::sort(spec.i1.begin(), spec.i1.end());
    if (!isClusterSubalgebraSpec(spec))
        throw ContractViolation("image spec fails the subalgebra criterion");
    return makeHandle(*imageNode, spec);
}

GaladReport GaloisEngine::verifyGalad(const Subgroup& H1, const Subgroup& H2) {
    FixedAnalysis a1 = fixedAnalysis(H1);
    FixedAnalysis a2 = fixedAnalysis(H2);
    if (a1.msub.empty() || a2.msub.empty())
        throw KerPhiInput("verifyGalad requires subgroups outside ker phi");

    GaladReport report;
    std::set<SubalgebraHandle::Key> msub2Keys;
    for (const auto& h : a2.msub) msub2Keys.insert(h.key());

    for (int f = 0; f < G_.order(); ++f) {
        if (conjugateSubgroup(H1, f) == H2) {
            report.conjugate = true;
            report.conjugatorId = f;
            break;
        }
    }

    // Forward direction: a conjugator must carry every member of M^{H1}
    // onto a member of M^{H2}.
    if (report.conjugate) {
        const Automorphism& f = G_.element(*report.conjugatorId);
        for (const auto& h : a1.msub) {
            SubalgebraHandle image = imageHandle(h, f);
            if (!msub2Keys.count(image.key()))
                throw ContractViolation("conjugator image leaves M^{H2}");
            report.witnesses.push_back(
                GaladWitness{*report.conjugatorId, h.key(), image.key()});
        }
    }

    // Reverse direction: any isomorphism witness between members forces
    // conjugacy; scan all (f, Sigma1) pairs.
    bool witnessFound = false;
    for (int f = 0; f < G_.order() && !witnessFound; ++f) {
        for (const auto& h : a1.msub) {
            SubalgebraHandle image = imageHandle(h, G_.element(f));
            if (msub2Keys.count(image.key())) {
                witnessFound = true;
                if (conjugateSubgroup(H1, f) != H2)
                    throw ContractViolation(
                        "isomorphism witness without subgroup conjugacy");
                break;
            }
        }
    }
    report.inverseDirectionVerified = (witnessFound == report.conjugate);
    return report;
}

std::optional<std::vector<SubalgebraHandle>> GaloisEngine::reverseGaloisChain(
    const std::vector<Subgroup>& ascending) {
    if (ascending.empty()) return std::vector<SubalgebraHandle>{};
    for (std::size_t i = 0; i + 1 < ascending.size(); ++i)
        if (!isSubgroupOf(ascending[i], ascending[i + 1]))
            throw NotAscending("subgroup chain is not ascending");

    std::vector<FixedAnalysis> analyses;
    for (const auto& H : ascending) {
        analyses.push_back(fixedAnalysis(H));
        if (analyses.back().msub.empty())
            throw KerPhiInput("chain subgroup lies in ker phi");
    }

    // Deterministic backtracking over the choices, back to front: the
    // reduced subalgebras must descend along the chain.
    const int s = static_cast<int>(ascending.size());
    std::vector<int> choice(s, -1);
    std::vector<SubalgebraHandle> reduced(s);

    auto reducedHandle = [&](const SubalgebraHandle& h) {
        return handleForSeed(reducedSubseed(h.seed));
    };

    std::vector<std::vector<SubalgebraHandle>> reducedOptions(s);
    for (int i = 0; i < s; ++i)
        for (const auto& h : analyses[i].msub)
            reducedOptions[i].push_back(reducedHandle(h));

    std::function<bool(int)> search = [&](int i) -> bool {
        if (i < 0) return true;
        for (std::size_t c = 0; c < reducedOptions[i].size(); ++c) {
            const SubalgebraHandle& cand = reducedOptions[i][c];
            if (i + 1 < s && !contains(cand, reduced[i + 1])) continue;
            reduced[i] = cand;
            choice[i] = static_cast<int>(c);
            if (search(i - 1)) return true;
        }
        return false;
    };
    if (!search(s - 1)) return std::nullopt;
    return reduced;
}

std::vector<int> GaloisEngine::minimalGenerators(const Subgroup& H) const {
    if (H.elementIds.empty()) return {};
    std::vector<int> gens;
    Subgroup cur = trivialSubgroup(G_);
    while (cur.elementIds != H.elementIds) {
        int added = -1;
        for (int e : H.elementIds) {
            if (cur.contains(e)) continue;
            added = e;
            break;
        }
        if (added < 0) throw ContractViolation("generator search stalled");
        gens.push_back(added);
        cur = closure(G_, gens);
    }
    return gens;
}

Subgroup galoisGroup(GaloisEngine& engine, const Seed& sub) {
    return engine.galoisGroup(engine.handleForSeed(sub));
}

Subgroup galoisMapXi(GaloisEngine& engine, const Seed& sub) {
    return galoisGroup(engine, sub);
}

} // namespace clusterkit
