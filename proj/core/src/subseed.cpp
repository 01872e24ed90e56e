#include "clusterkit/subseed.hpp"

#include <algorithm>

namespace clusterkit {

namespace {

std::vector<bool> positionMask(const Seed& host, const std::vector<int>& positions,
                               bool exchangeOnly, const char* label) {
    std::vector<bool> mask(host.size(), false);
    for (int p : positions) {
        if (p < 0 || p >= host.size())
            throw InvalidSpec(std::string(label) + " position out of range");
        if (exchangeOnly && !host.isExchange(p))
            throw InvalidSpec(std::string(label) + " must contain exchange positions only");
        if (mask[p]) throw InvalidSpec(std::string(label) + " has duplicate positions");
        mask[p] = true;
    }
    return mask;
}

} // namespace

void SubSeedSpec::validate() const {
    const auto m0 = positionMask(hostSeed, i0, true, "I0");
    const auto m1 = positionMask(hostSeed, i1, false, "I1");
    for (int p = 0; p < hostSeed.size(); ++p)
        if (m0[p] && m1[p]) throw InvalidSpec("I0 and I1 intersect");
}

Seed mixingSubseed(const SubSeedSpec& spec) {
    spec.validate();
    const Seed& host = spec.hostSeed;
    const auto m0 = positionMask(host, spec.i0, true, "I0");
    const auto m1 = positionMask(host, spec.i1, false, "I1");

    // Kept exchange positions first, then host frozen plus I0.
    std::vector<int> keptExchange, keptFrozen;
    for (int p = 0; p < host.nExchange; ++p)
        if (!m0[p] && !m1[p]) keptExchange.push_back(p);
    for (int p = 0; p < host.nExchange; ++p)
        if (m0[p]) keptFrozen.push_back(p);
    for (int p = host.nExchange; p < host.size(); ++p)
        if (!m1[p]) keptFrozen.push_back(p);

    Seed sub;
    sub.nExchange = static_cast<int>(keptExchange.size());
    std::vector<int> order = keptExchange;
    order.insert(order.end(), keptFrozen.begin(), keptFrozen.end());
    for (int p : order) {
        sub.names.push_back(host.names[p]);
        sub.expressions.push_back(host.expressions[p]);
    }
    sub.matrix = ExtendedMatrix(static_cast<int>(order.size()), sub.nExchange);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int j = 0; j < sub.nExchange; ++j)
            sub.matrix.at(static_cast<int>(i), j) = host.matrix.at(order[i], keptExchange[j]);
    return sub;
}

bool isClusterSubalgebraSpec(const SubSeedSpec& spec) {
    spec.validate();
    const Seed& host = spec.hostSeed;
    const auto m0 = positionMask(host, spec.i0, true, "I0");
    const auto m1 = positionMask(host, spec.i1, false, "I1");
    for (int x = 0; x < host.size(); ++x) {
        if (!m1[x]) continue;
        for (int y = 0; y < host.nExchange; ++y) {
            if (m0[y] || m1[y]) continue;
            if (host.matrix.at(x, y) != 0) return false;
        }
    }
    return true;
}

Seed complementSubseed(const SubSeedSpec& spec) {
    if (!isClusterSubalgebraSpec(spec))
        throw NotASubalgebra("spec does not satisfy the subalgebra criterion");
    const Seed& host = spec.hostSeed;
    const auto m0 = positionMask(host, spec.i0, true, "I0");
    const auto m1 = positionMask(host, spec.i1, false, "I1");

    // Exchange part: the deleted exchange directions. Frozen part: all host
    // frozen variables plus the I0 ones.
    SubSeedSpec comp;
    comp.hostSeed = host;
    for (int p = 0; p < host.nExchange; ++p) {
        if (m0[p]) comp.i0.push_back(p);
        if (!m0[p] && !m1[p]) comp.i1.push_back(p);
    }
    return mixingSubseed(comp);
}

Seed reducedSubseed(const Seed& s) {
    SubSeedSpec spec;
    spec.hostSeed = s;
    for (int p = s.nExchange; p < s.size(); ++p) {
        bool zeroRow = true;
        for (int j = 0; j < s.nExchange; ++j)
            if (s.matrix.at(p, j) != 0) {
                zeroRow = false;
                break;
            }
        if (zeroRow) spec.i1.push_back(p);
    }
    return mixingSubseed(spec);
}

std::vector<SubSeedSpec> allSpecsOf(const Seed& host) {
    const int m = host.size();
    std::vector<SubSeedSpec> specs;
    // Each position independently: kept, deleted (I1), or, for exchange
    // positions, frozen (I0).
    std::vector<int> state(m, 0);
    while (true) {
        SubSeedSpec spec;
        spec.hostSeed = host;
        for (int p = 0; p < m; ++p) {
            if (state[p] == 1) spec.i1.push_back(p);
            if (state[p] == 2) spec.i0.push_back(p);
        }
        specs.push_back(std::move(spec));
        int p = 0;
        for (; p < m; ++p) {
            const int limit = host.isExchange(p) ? 2 : 1;
            if (state[p] < limit) {
                ++state[p];
                std::fill(state.begin(), state.begin() + p, 0);
                break;
            }
        }
        if (p == m) break;
    }
    return specs;
}

std::set<SeedKey> seedKeysOfAlgebra(const Seed& sub, int budget) {
    ExchangeGraph g = ExchangeGraph::enumerate(sub, budget);
    if (!g.complete())
        throw IncompleteGraph("subalgebra enumeration exceeded its budget");
    std::set<SeedKey> keys;
    for (const auto& node : g.nodes()) keys.insert(seedKeyOf(node.seed));
    return keys;
}

bool subalgebraContains(const Seed& a1, const Seed& a2, const ExchangeGraph& universe) {
    for (const Seed* s : {&a1, &a2})
        for (const auto& e : s->expressions)
            if (!universe.variableId(e))
                throw NotASubalgebra("seed variable does not belong to the universe");

    const std::set<SeedKey> targets = seedKeysOfAlgebra(a2);
    ExchangeGraph g1 = ExchangeGraph::enumerate(a1, ExchangeGraph::kDefaultBudget);
    if (!g1.complete())
        throw IncompleteGraph("subalgebra enumeration exceeded its budget");
    for (const auto& node : g1.nodes()) {
        for (const auto& spec : allSpecsOf(node.seed)) {
            // Only specs of the right shape can match a seed of A(a2).
            const int i1ex = static_cast<int>(
                std::count_if(spec.i1.begin(), spec.i1.end(),
                              [&](int p) { return node.seed.isExchange(p); }));
            const int kept = node.seed.size() - static_cast<int>(spec.i1.size());
            const int keptEx =
                node.seed.nExchange - static_cast<int>(spec.i0.size()) - i1ex;
            if (kept != a2.size() || keptEx != a2.nExchange) continue;
            if (!isClusterSubalgebraSpec(spec)) continue;
            if (targets.count(seedKeyOf(mixingSubseed(spec)))) return true;
        }
    }
    return false;
}

} // namespace clusterkit
