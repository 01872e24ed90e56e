#include "clusterkit/polygon.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <numeric>

namespace clusterkit {

int arcCount(const SurfaceSignature& sig) {
    const int g = sig.genus, b = sig.boundaries, p = sig.punctures, c = sig.boundaryMarks;
    if (g < 0 || b < 0 || p < 0 || c < 0)
        throw ExcludedSurface("negative signature entry");
    if (b == 0 && c > 0)
        throw ExcludedSurface("boundary marks without boundary components");
    if (b > 0 && c < b)
        throw ExcludedSurface("every boundary component needs a marked point");
    if (b == 0 && p == 0)
        throw ExcludedSurface("closed surface without marked points");
    if (g == 0 && b == 0 && p <= 3)
        throw ExcludedSurface("sphere with at most three marked points");
    if (g == 0 && b == 1 && p == 0 && c <= 3)
        throw ExcludedSurface("unpunctured disk with at most three marked points");
    if (g == 0 && b == 1 && p == 1 && c == 1)
        throw ExcludedSurface("once-punctured disk with one marked point");
    return 6 * g + 3 * b + 3 * p + c - 6;
}

int maxTaggedArcsInSubsurface(const SubsurfaceParams& p, SubsurfaceCase tag) {
    switch (tag) {
        case SubsurfaceCase::noMarkedOrOncePuncturedDisk:
            return 0;
        case SubsurfaceCase::oncePuncturedDisk1Mark:
            return 2;
        case SubsurfaceCase::annulusOrDigon:
            return p.boundaryArcCount;
        case SubsurfaceCase::general:
            return 6 * p.genus + 3 * p.boundaries + 3 * p.punctures + p.boundaryMarks -
                   6 - p.unmarkedBoundaries - p.openAnnuli - p.openPuncturedDisks +
                   p.boundaryArcCount;
    }
    throw InvalidCase("unknown subsurface case");
}

Diagonal Diagonal::of(int i, int j, int ngon) {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > ngon || i == j)
        throw InvalidSpec("diagonal endpoints out of range");
    if (j - i < 2 || (i == 1 && j == ngon))
        throw InvalidSpec("endpoints are adjacent, not a diagonal");
    return Diagonal{i, j};
}

std::string Diagonal::name() const {
    return "g" + std::to_string(a) + "_" + std::to_string(b);
}

bool diagonalsCross(const Diagonal& d1, const Diagonal& d2) {
    const auto strictlyBetween = [](int x, int lo, int hi) { return lo < x && x < hi; };
    return (strictlyBetween(d2.a, d1.a, d1.b) && !strictlyBetween(d2.b, d1.a, d1.b) &&
            d2.b != d1.a && d2.b != d1.b) ||
           (strictlyBetween(d2.b, d1.a, d1.b) && !strictlyBetween(d2.a, d1.a, d1.b) &&
            d2.a != d1.a && d2.a != d1.b);
}

Triangulation Triangulation::of(int ngon, std::vector<Diagonal> diagonals) {
    if (ngon < 3) throw InvalidSpec("polygon needs at least three vertices");
    std::sort(diagonals.begin(), diagonals.end());
    if (static_cast<int>(diagonals.size()) != ngon - 3)
        throw InvalidSpec("a triangulation of an N-gon has N-3 diagonals");
    for (std::size_t i = 0; i < diagonals.size(); ++i) {
        Diagonal::of(diagonals[i].a, diagonals[i].b, ngon);
        if (i + 1 < diagonals.size() && diagonals[i] == diagonals[i + 1])
            throw InvalidSpec("duplicate diagonal");
        for (std::size_t j = i + 1; j < diagonals.size(); ++j)
            if (diagonalsCross(diagonals[i], diagonals[j]))
                throw InvalidSpec("diagonals cross");
    }
    return Triangulation{ngon, std::move(diagonals)};
}

Triangulation Triangulation::fan(int ngon, int apex) {
    std::vector<Diagonal> ds;
    for (int v = 1; v <= ngon; ++v) {
        bool adjacent = (v == apex) || (std::abs(v - apex) == 1) ||
                        (std::abs(v - apex) == ngon - 1);
        if (!adjacent) ds.push_back(Diagonal::of(apex, v, ngon));
    }
    return of(ngon, std::move(ds));
}

bool Triangulation::contains(const Diagonal& d) const {
    return std::binary_search(diagonals.begin(), diagonals.end(), d);
}

std::vector<Triangulation> allTriangulations(int ngon) {
    if (ngon < 3) throw InvalidSpec("polygon needs at least three vertices");
    std::vector<Triangulation> out;
    std::vector<Diagonal> acc;
    // Regions are sub-polygons lo..hi whose boundary is otherwise settled.
    std::vector<std::pair<int, int>> regions{{1, ngon}};
    std::function<void()> rec = [&]() {
        if (regions.empty()) {
            out.push_back(Triangulation::of(ngon, acc));
            return;
        }
        auto [a, b] = regions.back();
        regions.pop_back();
        if (b - a < 2) {
            rec();
        } else {
            for (int k = a + 1; k < b; ++k) {
                const std::size_t mark = acc.size();
                if (k - a >= 2) acc.push_back(Diagonal::of(a, k, ngon));
                if (b - k >= 2) acc.push_back(Diagonal::of(k, b, ngon));
                regions.push_back({a, k});
                regions.push_back({k, b});
                rec();
                regions.pop_back();
                regions.pop_back();
                acc.resize(mark);
            }
        }
        regions.push_back({a, b});
    };
    rec();
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::array<int, 3>> trianglesOf(const Triangulation& t) {
    // In convex position every pairwise-connected vertex triple bounds a
    // face of the triangulation.
    const int n = t.ngon;
    auto isSide = [&](int i, int j) {
        if (j - i == 1 || (i == 1 && j == n)) return true;  // boundary edge
        return t.contains(Diagonal{i, j});
    };
    std::vector<std::array<int, 3>> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                if (isSide(i, j) && isSide(j, k) && isSide(i, k))
                    out.push_back({i, j, k});
    return out;
}

Triangulation flip(const Triangulation& t, const Diagonal& d) {
    if (!t.contains(d)) throw NotInTriangulation("diagonal not in triangulation");
    // The two triangles adjacent to d form its quadrilateral.
    std::vector<int> apexes;
    for (const auto& tri : trianglesOf(t)) {
        const bool hasA = tri[0] == d.a || tri[1] == d.a || tri[2] == d.a;
        const bool hasB = tri[0] == d.b || tri[1] == d.b || tri[2] == d.b;
        if (hasA && hasB)
            for (int v : tri)
                if (v != d.a && v != d.b) apexes.push_back(v);
    }
    if (apexes.size() != 2)
        throw ContractViolation("diagonal does not bound two triangles");
    std::vector<Diagonal> ds;
    for (const auto& x : t.diagonals)
        if (!(x == d)) ds.push_back(x);
    ds.push_back(Diagonal::of(apexes[0], apexes[1], t.ngon));
    return Triangulation::of(t.ngon, std::move(ds));
}

Seed seedFromTriangulation(const Triangulation& t) {
    const int n = static_cast<int>(t.diagonals.size());
    std::map<Diagonal, int> pos;
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) {
        pos.emplace(t.diagonals[i], i);
        names.push_back(t.diagonals[i].name());
    }
    ExtendedMatrix B(n, n);
    for (const auto& tri : trianglesOf(t)) {
        // Sides in clockwise order around the triangle.
        const std::array<std::pair<int, int>, 3> sides{
            std::pair{tri[0], tri[1]}, {tri[1], tri[2]}, {tri[0], tri[2]}};
        for (int s = 0; s < 3; ++s) {
            const auto [a1, b1] = sides[s];
            const auto [a2, b2] = sides[(s + 1) % 3];
            auto it1 = pos.find(Diagonal{a1, b1});
            auto it2 = pos.find(Diagonal{a2, b2});
            if (it1 == pos.end() || it2 == pos.end()) continue;
            // side s+1 follows side s clockwise; counterclockwise successor
            // gets the +1.
            B.at(it2->second, it1->second) += 1;
            B.at(it1->second, it2->second) -= 1;
        }
    }
    return makeInitialSeed(std::move(names), std::move(B), n);
}

DihedralElement DihedralElement::rot(int ngon, int r) {
    return DihedralElement{ngon, ((r % ngon) + ngon) % ngon, false};
}

DihedralElement DihedralElement::refl(int ngon, int r) {
    return DihedralElement{ngon, ((r % ngon) + ngon) % ngon, true};
}

int DihedralElement::apply(int vertex) const {
    const int v0 = vertex - 1;
    const int image = reflected ? (rotation - v0 % ngon + 2 * ngon) % ngon
                                : (v0 + rotation) % ngon;
    return image + 1;
}

Diagonal DihedralElement::apply(const Diagonal& d) const {
    return Diagonal::of(apply(d.a), apply(d.b), ngon);
}

DihedralElement DihedralElement::compose(const DihedralElement& o) const {
    if (ngon != o.ngon) throw MixedAmbient("dihedral elements of different polygons");
    // (this . o)(v): v -> v + r or r - v composed in either order.
    DihedralElement r;
    r.ngon = ngon;
    r.reflected = reflected != o.reflected;
    r.rotation = reflected ? ((rotation - o.rotation) % ngon + ngon) % ngon
                           : (rotation + o.rotation) % ngon;
    return r;
}

DihedralElement DihedralElement::inverse() const {
    if (reflected) return *this;
    return rot(ngon, (ngon - rotation) % ngon);
}

std::vector<DihedralElement> dihedralGroup(int ngon) {
    std::vector<DihedralElement> out;
    for (int r = 0; r < ngon; ++r) out.push_back(DihedralElement::rot(ngon, r));
    for (int r = 0; r < ngon; ++r) out.push_back(DihedralElement::refl(ngon, r));
    return out;
}

PolygonUniverse::PolygonUniverse(int ngon, const Triangulation& base)
    : ngon_(ngon), base_(base),
      graph_(ExchangeGraph::enumerate(seedFromTriangulation(base),
                                      ExchangeGraph::kDefaultBudget)) {
    if (!graph_.complete())
        throw IncompleteGraph("polygon exchange graph exceeded its budget");

    // Walk flips and mutations in lockstep; the correspondence must agree
    // whenever a variable is reached twice.
    nodeTriangulations_.assign(graph_.nodeCount(), Triangulation{});
    std::vector<bool> seen(graph_.nodeCount(), false);
    diagOfVar_.assign(graph_.variableCount(), Diagonal{});
    std::vector<bool> haveVar(graph_.variableCount(), false);

    auto record = [&](int nodeId, const std::vector<Diagonal>& byPos) {
        const auto& ids = graph_.node(nodeId).varIds;
        for (std::size_t p = 0; p < byPos.size(); ++p) {
            const int id = ids[p];
            if (haveVar[id]) {
                if (!(diagOfVar_[id] == byPos[p]))
                    throw ContractViolation("flip/mutation correspondence is inconsistent");
            } else {
                haveVar[id] = true;
                diagOfVar_[id] = byPos[p];
                varOfDiag_.emplace(byPos[p], id);
            }
        }
        std::vector<Diagonal> sorted = byPos;
        std::sort(sorted.begin(), sorted.end());
        nodeTriangulations_[nodeId] = Triangulation::of(ngon_, sorted);
        triToNode_.emplace(nodeTriangulations_[nodeId], nodeId);
        seen[nodeId] = true;
    };

    record(0, base_.diagonals);
    std::deque<std::pair<int, std::vector<Diagonal>>> frontier;
    frontier.emplace_back(0, base_.diagonals);
    while (!frontier.empty()) {
        auto [u, byPos] = std::move(frontier.front());
        frontier.pop_front();
        Triangulation tu = Triangulation::of(ngon_, byPos);
        for (int k = 0; k < graph_.nExchange(); ++k) {
            const GraphEdge& e = graph_.node(u).edges[k];
            Triangulation tv = flip(tu, byPos[k]);
            Diagonal newDiag{};
            for (const auto& d : tv.diagonals)
                if (!tu.contains(d)) newDiag = d;
            std::vector<Diagonal> byPosMut = byPos;
            byPosMut[k] = newDiag;
            // Align to the target representative's position order.
            std::vector<Diagonal> byPosV(byPosMut.size());
            for (std::size_t p = 0; p < byPosMut.size(); ++p)
                byPosV[e.align[p]] = byPosMut[p];
            if (!seen[e.target]) {
                record(e.target, byPosV);
                frontier.emplace_back(e.target, byPosV);
            } else {
                const auto& ids = graph_.node(e.target).varIds;
                for (std::size_t p = 0; p < byPosV.size(); ++p)
                    if (!(diagOfVar_[ids[p]] == byPosV[p]))
                        throw ContractViolation(
                            "flip/mutation correspondence is inconsistent");
            }
        }
    }
}

int PolygonUniverse::varOfDiagonal(const Diagonal& d) const {
    auto it = varOfDiag_.find(d);
    if (it == varOfDiag_.end()) throw IndexOutOfRange("unknown diagonal");
    return it->second;
}

Diagonal PolygonUniverse::diagonalOfVar(int varId) const {
    if (varId < 0 || varId >= static_cast<int>(diagOfVar_.size()))
        throw IndexOutOfRange("variable id out of range");
    return diagOfVar_[varId];
}

const Triangulation& PolygonUniverse::triangulationOfNode(int nodeId) const {
    return nodeTriangulations_.at(nodeId);
}

std::optional<int> PolygonUniverse::nodeOfTriangulation(const Triangulation& t) const {
    auto it = triToNode_.find(t);
    if (it == triToNode_.end()) return std::nullopt;
    return it->second;
}

Automorphism PolygonUniverse::psiFromMcg(const DihedralElement& h,
                                         const AutGroup& G) const {
    if (&G.graph() != &graph_)
        throw MixedAmbient("automorphism group belongs to a different universe");
    const Seed& init = graph_.initialSeed();
    std::vector<int> target(init.size());
    for (int p = 0; p < init.size(); ++p)
        target[p] = varOfDiagonal(h.apply(base_.diagonals[p]));
    Automorphism f = automorphismFromClusterMap(graph_, target);
    auto id = G.idOf(f);
    if (!id) throw NotAnAutomorphism("psi image missing from the enumerated group");
    return G.element(*id);
}

McgIsoReport mcgIsoCheck(int ngon) {
    if (ngon < 5 || ngon > 9)
        throw InvalidSpec("mcgIsoCheck covers polygons with 5..9 vertices");
    PolygonUniverse poly(ngon);
    AutGroup G = AutGroup::enumerateAut(poly.graph());

    McgIsoReport report;
    report.ngon = ngon;
    const auto dihedral = dihedralGroup(ngon);
    report.dihedralOrder = static_cast<int>(dihedral.size());
    report.autOrder = G.order();

    std::vector<int> psiIds;
    std::set<int> distinct;
    for (const auto& h : dihedral) {
        const Automorphism f = poly.psiFromMcg(h, G);
        const int id = *G.idOf(f);
        psiIds.push_back(id);
        distinct.insert(id);
    }
    report.injective = distinct.size() == dihedral.size();
    report.surjective = report.injective && report.autOrder == report.dihedralOrder;

    report.homomorphism = true;
    for (std::size_t i = 0; i < dihedral.size() && report.homomorphism; ++i)
        for (std::size_t j = 0; j < dihedral.size(); ++j) {
            const DihedralElement hij = dihedral[i].compose(dihedral[j]);
            int k = -1;
            for (std::size_t x = 0; x < dihedral.size(); ++x)
                if (dihedral[x] == hij) k = static_cast<int>(x);
            if (G.multiply(psiIds[i], psiIds[j]) != psiIds[k]) {
                report.homomorphism = false;
                break;
            }
        }
    return report;
}

InvariantRegion maximalInvariantRegion(const PolygonUniverse& poly,
                                       GaloisEngine& engine, const Subgroup& H) {
    const ExchangeGraph& g = poly.graph();
    InvariantRegion out;

    for (int id = 0; id < g.variableCount(); ++id) {
        bool fixedVar = true;
        for (int f : H.elementIds)
            if (H.ambient->element(f).perm[id] != id) {
                fixedVar = false;
                break;
            }
        if (fixedVar) out.fixedDiagonals.push_back(poly.diagonalOfVar(id));
    }
    std::sort(out.fixedDiagonals.begin(), out.fixedDiagonals.end());

    // Maximal pairwise-compatible subsets of the fixed diagonals
    // (maximal cliques of the compatibility graph).
    const auto& fd = out.fixedDiagonals;
    std::vector<std::vector<Diagonal>> maximalSets;
    std::function<void(std::vector<int>&, std::vector<int>, std::vector<int>)> bk =
        [&](std::vector<int>& R, std::vector<int> P, std::vector<int> X) {
            if (P.empty() && X.empty()) {
                std::vector<Diagonal> set;
                for (int i : R) set.push_back(fd[i]);
                std::sort(set.begin(), set.end());
                maximalSets.push_back(std::move(set));
                return;
            }
            std::vector<int> Pcopy = P;
            for (int v : Pcopy) {
                R.push_back(v);
                std::vector<int> P2, X2;
                for (int u : P)
                    if (u != v && !diagonalsCross(fd[u], fd[v])) P2.push_back(u);
                for (int u : X)
                    if (!diagonalsCross(fd[u], fd[v])) X2.push_back(u);
                bk(R, std::move(P2), std::move(X2));
                R.pop_back();
                P.erase(std::find(P.begin(), P.end(), v));
                X.push_back(v);
            }
        };
    {
        std::vector<int> R, P(fd.size()), X;
        std::iota(P.begin(), P.end(), 0);
        if (fd.empty())
            maximalSets.push_back({});
        else
            bk(R, std::move(P), std::move(X));
    }
    std::sort(maximalSets.begin(), maximalSets.end());
    maximalSets.erase(std::unique(maximalSets.begin(), maximalSets.end()),
                      maximalSets.end());
    out.maximalCompatibleSets = maximalSets;

    // Wrap each subset as sub-seed specs over a triangulation containing
    // it, trying every exchange/frozen split, and keep the maximal fixed
    // subalgebras that appear.
    std::vector<bool> fixedVar(g.variableCount(), true);
    for (int f : H.elementIds) {
        const auto& perm = H.ambient->element(f).perm;
        for (int id = 0; id < g.variableCount(); ++id)
            if (perm[id] != id) fixedVar[id] = false;
    }
    std::map<SubalgebraHandle::Key, SubalgebraHandle> collected;
    for (const auto& set : maximalSets) {
        // Extend the subset to a triangulation greedily.
        std::vector<Diagonal> ds = set;
        for (int a = 1; a <= poly.ngon() && static_cast<int>(ds.size()) < poly.ngon() - 3; ++a)
            for (int b = a + 2; b <= poly.ngon(); ++b) {
                if (a == 1 && b == poly.ngon()) continue;
                Diagonal cand = Diagonal::of(a, b, poly.ngon());
                bool compat = true;
                for (const auto& d : ds)
                    if (d == cand || diagonalsCross(d, cand)) {
                        compat = false;
                        break;
                    }
                if (compat &&
                    !std::count(ds.begin(), ds.end(), cand))
                    ds.push_back(cand);
                if (static_cast<int>(ds.size()) == poly.ngon() - 3) break;
            }
        Triangulation t = Triangulation::of(poly.ngon(), ds);
        const int nodeId = *poly.nodeOfTriangulation(t);
        const GraphNode& node = g.node(nodeId);
        std::vector<int> setPositions;
        for (int p = 0; p < node.seed.size(); ++p) {
            const Diagonal d = poly.diagonalOfVar(node.varIds[p]);
            if (std::count(set.begin(), set.end(), d)) setPositions.push_back(p);
        }
        const int S = static_cast<int>(setPositions.size());
        for (int mask = 0; mask < (1 << S); ++mask) {
            SubSeedSpec spec;
            spec.hostSeed = node.seed;
            for (int i = 0; i < S; ++i)
                if (!(mask & (1 << i))) spec.i0.push_back(setPositions[i]);
            for (int p = 0; p < node.seed.size(); ++p)
                if (!std::count(setPositions.begin(), setPositions.end(), p))
                    spec.i1.push_back(p);
            if (!isClusterSubalgebraSpec(spec)) continue;
            SubalgebraHandle h = engine.handleFor(nodeId, spec);
            bool allFixed = true;
            for (int id : h.varIds)
                if (!fixedVar[id]) {
                    allFixed = false;
                    break;
                }
            if (!allFixed) continue;
            collected.emplace(h.key(), std::move(h));
        }
    }
    std::vector<SubalgebraHandle> pool;
    for (auto& [key, h] : collected) pool.push_back(std::move(h));
    for (std::size_t i = 0; i < pool.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < pool.size() && maximal; ++j) {
            if (i == j || pool[j].key() == pool[i].key()) continue;
            if (engine.contains(pool[j], pool[i])) maximal = false;
        }
        if (maximal) out.regionSubalgebras.push_back(pool[i]);
    }

    // Cross-check against the algebraic route.
    FixedAnalysis fa = engine.fixedAnalysis(H);
    std::set<SubalgebraHandle::Key> lhs, rhs;
    for (const auto& h : out.regionSubalgebras) lhs.insert(h.key());
    for (const auto& h : fa.maximalSubalgebras) rhs.insert(h.key());
    out.matchesFixedAnalysis = (lhs == rhs);
    return out;
}

} // namespace clusterkit
