#include "clusterkit/exchange_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <sstream>

namespace clusterkit {

namespace {

// Reorder a mutated seed so position align[p] of the result carries what
// position p of the input carried.
Seed permuteSeedByAlign(const Seed& s, const std::vector<int>& align) {
    std::vector<int> inv(align.size());
    for (std::size_t p = 0; p < align.size(); ++p)
        inv[align[p]] = static_cast<int>(p);
    return permuteSeed(s, inv);
}

} // namespace

ClusterKey clusterKeyOf(const Seed& s) {
    ClusterKey key = s.expressions;
    std::sort(key.begin(), key.end());
    return key;
}

bool SeedKey::operator<(const SeedKey& o) const {
    if (exchange != o.exchange) return exchange < o.exchange;
    if (frozen != o.frozen) return frozen < o.frozen;
    return matrix < o.matrix;
}

bool SeedKey::operator==(const SeedKey& o) const {
    return exchange == o.exchange && frozen == o.frozen && matrix == o.matrix;
}

SeedKey seedKeyOf(const Seed& s) {
    const int m = s.size();
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const bool fa = !s.isExchange(a), fb = !s.isExchange(b);
        if (fa != fb) return fb; // exchange positions first
        return s.expressions[a] < s.expressions[b];
    });
    SeedKey key;
    for (int p = 0; p < m; ++p) {
        (p < s.nExchange ? key.exchange : key.frozen)
            .push_back(s.expressions[order[p]]);
    }
    ExtendedMatrix M(m, s.nExchange);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < s.nExchange; ++j)
            M.at(i, j) = s.matrix.at(order[i], order[j]);
    ExtendedMatrix N = M.negated();
    key.matrix = (N < M) ? N : M;
    return key;
}

int ExchangeGraph::internVariable(const LaurentPoly& p, bool frozen) {
    auto it = varIndex_.find(p);
    if (it != varIndex_.end()) return it->second;
    const int id = static_cast<int>(varPolys_.size());
    varIndex_.emplace(p, id);
    varPolys_.push_back(p);
    if (frozen) frozenIds_.insert(id);
    return id;
}

ExchangeGraph ExchangeGraph::enumerate(const Seed& initial, int nodeBudget,
                                       const EnumerateOptions& opts) {
    if (nodeBudget < 1) throw InvalidSpec("node budget must be at least 1");
    initial.validate();

    ExchangeGraph g;
    g.initial_ = initial;
    const int n = initial.nExchange;

    auto addNode = [&](const Seed& s) {
        GraphNode node;
        node.seed = s;
        node.varIds.reserve(s.size());
        for (int p = 0; p < s.size(); ++p)
            node.varIds.push_back(g.internVariable(s.expressions[p], !s.isExchange(p)));
        node.edges.assign(n, GraphEdge{});
        const int id = static_cast<int>(g.nodes_.size());
        g.keyToNode_.emplace(clusterKeyOf(s), id);
        g.nodes_.push_back(std::move(node));
        return id;
    };

    addNode(initial);
    std::deque<int> frontier{0};
    std::mt19937 rng(opts.shuffleSeed);
    bool exceeded = false;

    while (!frontier.empty()) {
        int u;
        if (opts.shuffleSeed != 0) {
            std::uniform_int_distribution<std::size_t> pick(0, frontier.size() - 1);
            const auto at = pick(rng);
            u = frontier[at];
            frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(at));
        } else {
            u = frontier.front();
            frontier.pop_front();
        }
        for (int k = 0; k < n; ++k) {
            if (g.nodes_[u].edges[k].target >= 0) continue;
            const Seed mutated = mutateSeed(g.nodes_[u].seed, k);
            const ClusterKey key = clusterKeyOf(mutated);
            auto it = g.keyToNode_.find(key);
            int v;
            if (it == g.keyToNode_.end()) {
                if (g.nodeCount() >= nodeBudget) {
                    exceeded = true;
                    continue;
                }
                v = addNode(mutated);
                frontier.push_back(v);
            } else {
                v = it->second;
            }
            // Match positions of the mutated seed against the stored
            // representative; expressions within a cluster are distinct.
            const Seed& rep = g.nodes_[v].seed;
            std::map<LaurentPoly, int> pos;
            for (int p = 0; p < rep.size(); ++p) pos.emplace(rep.expressions[p], p);
            GraphEdge e;
            e.target = v;
            e.align.resize(mutated.size());
            for (int p = 0; p < mutated.size(); ++p)
                e.align[p] = pos.at(mutated.expressions[p]);
            g.nodes_[u].edges[k] = std::move(e);
        }
    }
    g.complete_ = !exceeded;
    return g;
}

std::vector<int> ExchangeGraph::frozenVariableIds() const {
    return {frozenIds_.begin(), frozenIds_.end()};
}

std::optional<int> ExchangeGraph::variableId(const LaurentPoly& p) const {
    auto it = varIndex_.find(p);
    if (it == varIndex_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> ExchangeGraph::nodeOf(const ClusterKey& key) const {
    auto it = keyToNode_.find(key);
    if (it == keyToNode_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> ExchangeGraph::nodeOfVarIdSet(std::vector<int> ids) const {
    std::sort(ids.begin(), ids.end());
    ClusterKey key;
    key.reserve(ids.size());
    for (int id : ids) {
        if (id < 0 || id >= variableCount()) return std::nullopt;
        key.push_back(varPolys_[id]);
    }
    std::sort(key.begin(), key.end());
    return nodeOf(key);
}

void ExchangeGraph::requireComplete(const char* op) const {
    if (!complete_)
        throw IncompleteGraph(std::string(op) + " requires a complete exchange graph");
}

std::vector<std::pair<int, LaurentPoly>> ExchangeGraph::variableSet() const {
    requireComplete("variableSet");
    std::vector<std::pair<int, LaurentPoly>> out;
    out.reserve(varPolys_.size());
    for (int id = 0; id < variableCount(); ++id) out.emplace_back(id, varPolys_[id]);
    return out;
}

std::vector<LaurentPoly> ExchangeGraph::reExpand(int nodeId) const {
    requireComplete("reExpand");
    if (nodeId < 0 || nodeId >= nodeCount())
        throw IndexOutOfRange("node id out of range");

    const int m = initial_.size();
    std::vector<LaurentPoly> out(varPolys_.size());
    std::vector<bool> haveVar(varPolys_.size(), false);
    std::vector<bool> seen(nodes_.size(), false);

    auto record = [&](int nid, const Seed& fresh) {
        const auto& ids = nodes_[nid].varIds;
        for (int p = 0; p < m; ++p) {
            const int id = ids[p];
            if (haveVar[id]) {
                if (out[id] != fresh.expressions[p])
                    throw ContractViolation("re-expansion disagrees across paths");
            } else {
                haveVar[id] = true;
                out[id] = fresh.expressions[p];
            }
        }
    };

    Seed root;
    root.names = nodes_[nodeId].seed.names;
    root.matrix = nodes_[nodeId].seed.matrix;
    root.nExchange = initial_.nExchange;
    for (int p = 0; p < m; ++p)
        root.expressions.push_back(LaurentPoly::variable(m, p));

    std::deque<std::pair<int, Seed>> frontier;
    frontier.emplace_back(nodeId, std::move(root));
    seen[nodeId] = true;
    record(nodeId, frontier.front().second);

    while (!frontier.empty()) {
        auto [u, fresh] = std::move(frontier.front());
        frontier.pop_front();
        for (int k = 0; k < initial_.nExchange; ++k) {
            const GraphEdge& e = nodes_[u].edges[k];
            if (seen[e.target]) continue;
            seen[e.target] = true;
            Seed next = permuteSeedByAlign(mutateSeed(fresh, k), e.align);
            record(e.target, next);
            frontier.emplace_back(e.target, std::move(next));
        }
    }
    for (std::size_t id = 0; id < haveVar.size(); ++id)
        if (!haveVar[id]) throw ContractViolation("re-expansion missed a variable");
    return out;
}

std::string ExchangeGraph::canonicalFingerprint() const {
    // Relabel nodes by sorted cluster key and variables by sorted poly,
    // then print node contents and adjacency under those labels.
    std::vector<int> nodeRank(nodes_.size());
    {
        int r = 0;
        for (const auto& [key, id] : keyToNode_) nodeRank[id] = r++;
    }
    std::vector<int> varRank(varPolys_.size());
    {
        int r = 0;
        for (const auto& [poly, id] : varIndex_) varRank[id] = r++;
    }
    std::vector<std::string> nodeLines, edgeLines;
    for (std::size_t u = 0; u < nodes_.size(); ++u) {
        std::vector<int> vs;
        for (int id : nodes_[u].varIds) vs.push_back(varRank[id]);
        std::sort(vs.begin(), vs.end());
        std::ostringstream line;
        line << nodeRank[u] << ":";
        for (int v : vs) line << v << " ";
        nodeLines.push_back(line.str());
        for (int k = 0; k < initial_.nExchange; ++k) {
            const auto& e = nodes_[u].edges[k];
            if (e.target < 0) continue;
            const int a = nodeRank[u], b = nodeRank[e.target];
            edgeLines.push_back(std::to_string(std::min(a, b)) + "-" +
                                std::to_string(std::max(a, b)));
        }
    }
    std::sort(nodeLines.begin(), nodeLines.end());
    std::sort(edgeLines.begin(), edgeLines.end());
    edgeLines.erase(std::unique(edgeLines.begin(), edgeLines.end()), edgeLines.end());
    std::ostringstream out;
    out << nodes_.size() << ";" << varPolys_.size() << ";";
    for (const auto& l : nodeLines) out << l << "|";
    out << ";";
    for (const auto& l : edgeLines) out << l << ",";
    return out.str();
}

std::string ExchangeGraph::exportDot() const {
    std::ostringstream out;
    out << "graph exchange {\n";
    for (std::size_t u = 0; u < nodes_.size(); ++u) {
        std::vector<int> ids = nodes_[u].varIds;
        std::sort(ids.begin(), ids.end());
        out << "  n" << u << " [label=\"{";
        for (std::size_t i = 0; i < ids.size(); ++i)
            out << (i ? "," : "") << ids[i];
        out << "}\"];\n";
    }
    for (std::size_t u = 0; u < nodes_.size(); ++u) {
        for (int k = 0; k < initial_.nExchange; ++k) {
            const auto& e = nodes_[u].edges[k];
            if (e.target < 0 || e.target < static_cast<int>(u)) continue;
            if (e.target == static_cast<int>(u)) continue;
            out << "  n" << u << " -- n" << e.target << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

} // namespace clusterkit
