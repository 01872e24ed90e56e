#include "clusterkit/basis.hpp"
#include <functional>

#include <algorithm>
#include <random>

namespace clusterkit {

int QuasiRegistry::registerQuasi(QuasiVariable q) {
    if (q.value.arity() != g_->initialSeed().size())
        throw ArityMismatch("quasi variable has the wrong arity");
    if (g_->variableId(q.value))
        throw InvalidSpec("value is already a cluster variable");
    if (!q.value.isPositive())
        throw InvalidSpec("quasi variables must expand positively");
    entries_.push_back(std::move(q));
    return g_->variableCount() + static_cast<int>(entries_.size()) - 1;
}

bool QuasiRegistry::isQuasi(int id) const {
    return id >= g_->variableCount() &&
           id < g_->variableCount() + static_cast<int>(entries_.size());
}

const QuasiVariable& QuasiRegistry::quasi(int id) const {
    if (!isQuasi(id)) throw UnregisteredQuasiVariable("id is not a quasi variable");
    return entries_[id - g_->variableCount()];
}

const LaurentPoly& QuasiRegistry::valueOf(int id) const {
    if (id >= 0 && id < g_->variableCount()) return g_->variable(id);
    return quasi(id).value;
}

LaurentPoly QuasiRegistry::bracket(int id, int k) const {
    if (id >= 0 && id < g_->variableCount()) return g_->variable(id).pow(k);
    const QuasiVariable& q = quasi(id);
    return applyTransform(ChebyshevKind{q.transform, k}, q.value);
}

BasisFamily clusterMonomialBasis(const ExchangeGraph& g, int maxDegree) {
    if (!g.complete())
        throw IncompleteGraph("cluster monomial basis requires a complete graph");
    if (maxDegree < 0) throw InvalidSpec("degree bound must be nonnegative");

    std::map<LaurentPoly, std::vector<std::pair<int, int>>> found;
    const int m = g.initialSeed().size();
    const int arity = g.initialSeed().coordArity();
    std::vector<int> exps(m, 0);

    for (const auto& node : g.nodes()) {
        // All exponent tuples of total degree <= maxDegree.
        std::function<void(int, int)> rec = [&](int p, int remaining) {
            if (p == m) {
                LaurentPoly value = LaurentPoly::constant(arity, 1);
                std::vector<std::pair<int, int>> dec;
                for (int q = 0; q < m; ++q) {
                    if (exps[q] == 0) continue;
                    value = value * node.seed.expressions[q].pow(exps[q]);
                    dec.emplace_back(node.varIds[q], exps[q]);
                }
                std::sort(dec.begin(), dec.end());
                found.emplace(std::move(value), std::move(dec));
                return;
            }
            for (int e = 0; e <= remaining; ++e) {
                exps[p] = e;
                rec(p + 1, remaining - e);
            }
            exps[p] = 0;
        };
        rec(0, maxDegree);
    }

    BasisFamily family;
    for (auto& [value, dec] : found)
        family.elements.push_back(BasisElement{value, dec});
    return family;
}

namespace {

// Apply an automorphism to an arbitrary value via substitution by its
// witness images.
LaurentPoly applyAut(const ExchangeGraph& g, const Automorphism& f,
                     const LaurentPoly& value) {
    std::vector<LaurentPoly> images;
    images.reserve(f.witness.size());
    for (int id : f.witness) images.push_back(g.variable(id));
    return substitute(value, images);
}

// Image of a variable-or-quasi id under f, or nullopt when the image value
// is not registered.
std::optional<int> mapId(const ExchangeGraph& g, const QuasiRegistry& quasi,
                         const Automorphism& f, int id) {
    if (id >= 0 && id < g.variableCount()) return f.perm[id];
    const LaurentPoly image = applyAut(g, f, quasi.valueOf(id));
    if (auto vid = g.variableId(image)) return *vid;
    for (int q = g.variableCount(); q < g.variableCount() + quasi.count(); ++q)
        if (quasi.valueOf(q) == image) return q;
    return std::nullopt;
}

} // namespace

DStableReport dStableCheck(const ExchangeGraph& g, const BasisFamily& family,
                           const Subgroup& G, const QuasiRegistry& quasi,
                           int powerBound) {
    DStableReport report;
    const AutGroup& A = *G.ambient;

    // (a) f(<k, z>) = <k, f(z)> for every id appearing in a decomposition.
    std::set<int> usedIds;
    for (const auto& el : family.elements)
        for (const auto& [id, k] : el.decomposition) usedIds.insert(id);
    report.transformEquivariant = true;
    for (int fid : G.elementIds) {
        const Automorphism& f = A.element(fid);
        for (int id : usedIds) {
            if (id >= g.variableCount() && !quasi.isQuasi(id))
                throw UnregisteredQuasiVariable("decomposition references id " +
                                                std::to_string(id));
            auto imageId = mapId(g, quasi, f, id);
            if (!imageId) {
                report.transformEquivariant = false;
                report.detail = "image of id " + std::to_string(id) + " is unregistered";
                break;
            }
            for (int k = 1; k <= powerBound; ++k) {
                if (applyAut(g, f, quasi.bracket(id, k)) != quasi.bracket(*imageId, k)) {
                    report.transformEquivariant = false;
                    report.detail = "bracket equivariance fails at id " +
                                    std::to_string(id) + ", power " + std::to_string(k);
                    break;
                }
            }
            if (!report.transformEquivariant) break;
        }
        if (!report.transformEquivariant) break;
    }

    // (b) the set of decomposition supports is stable.
    std::set<std::vector<int>> supports;
    for (const auto& el : family.elements) {
        std::vector<int> s;
        for (const auto& [id, k] : el.decomposition) s.push_back(id);
        std::sort(s.begin(), s.end());
        supports.insert(std::move(s));
    }
    report.familyStable = true;
    for (int fid : G.elementIds) {
        const Automorphism& f = A.element(fid);
        for (const auto& s : supports) {
            std::vector<int> image;
            bool mapped = true;
            for (int id : s) {
                auto imageId = mapId(g, quasi, f, id);
                if (!imageId) {
                    mapped = false;
                    break;
                }
                image.push_back(*imageId);
            }
            std::sort(image.begin(), image.end());
            if (!mapped || !supports.count(image)) {
                report.familyStable = false;
                report.detail = "support image leaves the family";
                break;
            }
        }
        if (!report.familyStable) break;
    }

    // (c) distinct elements stay distinct: no value collision, no literal
    // duplicates.
    report.productsDistinct = true;
    std::map<LaurentPoly, std::vector<std::pair<int, int>>> byValue;
    for (const auto& el : family.elements) {
        auto dec = el.decomposition;
        std::sort(dec.begin(), dec.end());
        auto [it, inserted] = byValue.emplace(el.value, dec);
        if (!inserted) {
            report.productsDistinct = false;
            report.detail = "two decompositions share one value";
            break;
        }
    }
    return report;
}

int pairCompatibilityDegree(const ExchangeGraph& g, int zId, int wId) {
    if (!g.complete())
        throw IncompleteGraph("compatibility degree requires a complete graph");
    for (int nodeId = 0; nodeId < g.nodeCount(); ++nodeId) {
        const auto& ids = g.node(nodeId).varIds;
        auto it = std::find(ids.begin(), ids.end(), zId);
        if (it == ids.end()) continue;
        const int slot = static_cast<int>(it - ids.begin());
        const std::vector<LaurentPoly> fresh = g.reExpand(nodeId);
        int minE = 0;
        bool first = true;
        for (const auto& [e, c] : fresh[wId].terms()) {
            minE = first ? e[slot] : std::min(minE, e[slot]);
            first = false;
        }
        return -minE;
    }
    throw IndexOutOfRange("variable does not occur in any cluster");
}

UniqueExpressionReport uniqueExpressionBruteForce(const ExchangeGraph& g) {
    if (!g.complete())
        throw IncompleteGraph("unique-expression scan requires a complete graph");
    UniqueExpressionReport report;
    const int V = g.variableCount();

    // Pairwise compatibility degrees once, via cached re-expansions.
    std::vector<std::vector<int>> deg(V, std::vector<int>(V, 0));
    {
        std::vector<std::vector<LaurentPoly>> freshByNode(g.nodeCount());
        std::vector<int> nodeOfVar(V, -1);
        for (int nodeId = 0; nodeId < g.nodeCount(); ++nodeId)
            for (int p = 0; p < g.initialSeed().size(); ++p) {
                const int id = g.node(nodeId).varIds[p];
                if (nodeOfVar[id] < 0) nodeOfVar[id] = nodeId;
            }
        for (int z = 0; z < V; ++z) {
            const int nodeId = nodeOfVar[z];
            if (freshByNode[nodeId].empty()) freshByNode[nodeId] = g.reExpand(nodeId);
            const auto& ids = g.node(nodeId).varIds;
            const int slot = static_cast<int>(
                std::find(ids.begin(), ids.end(), z) - ids.begin());
            for (int w = 0; w < V; ++w) {
                int minE = 0;
                bool first = true;
                for (const auto& [e, c] : freshByNode[nodeId][w].terms()) {
                    minE = first ? e[slot] : std::min(minE, e[slot]);
                    first = false;
                }
                deg[z][w] = -minE;
            }
        }
    }

    std::map<LaurentPoly, std::vector<std::pair<int, int>>> products;
    for (int i = 0; i < V; ++i)
        for (int j = i; j < V; ++j) {
            if (deg[i][j] > 2) continue;
            products[g.variable(i) * g.variable(j)].emplace_back(i, j);
            ++report.pairsChecked;
        }
    for (const auto& [value, pairs] : products) {
        for (std::size_t a = 0; a < pairs.size(); ++a)
            for (std::size_t b = a + 1; b < pairs.size(); ++b)
                if (pairs[a] != pairs[b])
                    report.violations.push_back(
                        {pairs[a].first, pairs[a].second, pairs[b].first, pairs[b].second});
    }
    return report;
}

IndependenceReport linearIndependenceCheck(const BasisFamily& family, int arity,
                                           unsigned rngSeed, int trials) {
    IndependenceReport report;
    report.trials = trials;
    const int N = static_cast<int>(family.elements.size());
    if (N == 0) {
        report.independent = true;
        report.failureBound = "exact";
        return report;
    }
    std::mt19937 rng(rngSeed);
    std::uniform_int_distribution<int> num(1, 997);

    for (int trial = 0; trial < trials && !report.independent; ++trial) {
        // Evaluation matrix at N random positive rational points.
        std::vector<std::vector<Rational>> M(N, std::vector<Rational>(N));
        for (int col = 0; col < N; ++col) {
            std::vector<Rational> point(arity);
            for (int i = 0; i < arity; ++i)
                point[i] = Rational(num(rng), num(rng));
            for (int row = 0; row < N; ++row) {
                Rational v = 0;
                for (const auto& [e, c] : family.elements[row].value.terms()) {
                    Rational term = c;
                    for (int i = 0; i < arity; ++i) {
                        if (e[i] == 0) continue;
                        Rational p = point[i];
                        if (e[i] < 0) p = 1 / p;
                        for (int k = 0; k < std::abs(e[i]); ++k) term *= p;
                    }
                    v += term;
                }
                M[row][col] = v;
            }
        }
        // Nonzero determinant proves independence.
        bool singular = false;
        for (int col = 0; col < N && !singular; ++col) {
            int pivot = -1;
            for (int r = col; r < N; ++r)
                if (M[r][col] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) {
                singular = true;
                break;
            }
            std::swap(M[col], M[pivot]);
            for (int r = col + 1; r < N; ++r) {
                if (M[r][col] == 0) continue;
                const Rational f = M[r][col] / M[col][col];
                for (int c = col; c < N; ++c) M[r][c] -= f * M[col][c];
            }
        }
        if (!singular) report.independent = true;
    }
    report.failureBound = report.independent
                              ? "exact (nonzero determinant certificate)"
                              : "dependence not certified; false-negative odds <= (d*N/997)^" +
                                    std::to_string(trials);
    return report;
}

} // namespace clusterkit
