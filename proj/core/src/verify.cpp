#include "clusterkit/verify.hpp"

#include <chrono>
#include <iomanip>
#include <memory>
#include <ostream>
#include <random>
#include <sstream>

#include "clusterkit/basis.hpp"
#include "clusterkit/galois.hpp"
#include "clusterkit/grading.hpp"
#include "clusterkit/polygon.hpp"

namespace clusterkit {

namespace {

long long catalan(int k) {
    long long c = 1;
    for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

ExtendedMatrix rowsToMatrix(const std::vector<std::vector<std::int64_t>>& rows) {
    return ExtendedMatrix::fromRows(rows, rows.empty() ? 0 : static_cast<int>(rows[0].size()));
}

std::vector<std::string> xNames(int n) {
    std::vector<std::string> names;
    for (int j = 0; j < n; ++j) names.push_back("x" + std::to_string(j + 1));
    return names;
}

ExtendedMatrix randomSkewSymmetrizable(std::mt19937& rng, int n, int maxEntry,
                                       int maxD) {
    std::uniform_int_distribution<int> entry(-maxEntry, maxEntry);
    std::uniform_int_distribution<int> dval(1, maxD);
    ExtendedMatrix B(n, n);
    std::vector<int> d(n);
    for (int i = 0; i < n; ++i) d[i] = dval(rng);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const int s = entry(rng);
            B.at(i, j) = s * d[j];
            B.at(j, i) = -s * d[i];
        }
    return B;
}

// Shared per-run fixtures; polygons and their groups are built once.
struct Fixtures {
    std::unique_ptr<PolygonUniverse> hex, oct;
    std::unique_ptr<AutGroup> hexAut, octAut;
    std::unique_ptr<GaloisEngine> hexEngine, octEngine;

    PolygonUniverse& hexagon() {
        if (!hex) hex = std::make_unique<PolygonUniverse>(6);
        return *hex;
    }
    AutGroup& hexagonAut() {
        if (!hexAut) hexAut = std::make_unique<AutGroup>(AutGroup::enumerateAut(hexagon().graph()));
        return *hexAut;
    }
    GaloisEngine& hexagonEngine() {
        if (!hexEngine) hexEngine = std::make_unique<GaloisEngine>(hexagon().graph(), hexagonAut());
        return *hexEngine;
    }
    PolygonUniverse& octagon() {
        if (!oct) oct = std::make_unique<PolygonUniverse>(8);
        return *oct;
    }
    AutGroup& octagonAut() {
        if (!octAut) octAut = std::make_unique<AutGroup>(AutGroup::enumerateAut(octagon().graph()));
        return *octAut;
    }
    GaloisEngine& octagonEngine() {
        if (!octEngine) octEngine = std::make_unique<GaloisEngine>(octagon().graph(), octagonAut());
        return *octEngine;
    }

    int psiId(PolygonUniverse& poly, AutGroup& G, const DihedralElement& h) {
        return *G.idOf(poly.psiFromMcg(h, G));
    }

    Subgroup stabilizer(PolygonUniverse& poly, AutGroup& G, const Diagonal& d) {
        const int id = poly.varOfDiagonal(d);
        Subgroup H;
        H.ambient = &G;
        for (int f = 0; f < G.order(); ++f)
            if (G.element(f).perm[id] == id) H.elementIds.push_back(f);
        return H;
    }
};

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (detail.tellp() > 0) detail << "; ";
            detail << what;
        }
    }
};

// ---- criteria ----

void mutationInvolution(Check& c, unsigned seed) {
    std::mt19937 rng(seed);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const int extra = static_cast<int>(rng() % 3);
        ExtendedMatrix B = randomSkewSymmetrizable(rng, n, 2, 2);
        ExtendedMatrix M(n + extra, n);
        std::uniform_int_distribution<int> fr(-2, 2);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) M.at(i, j) = B.at(i, j);
        for (int i = n; i < n + extra; ++i)
            for (int j = 0; j < n; ++j) M.at(i, j) = fr(rng);
        Seed s = makeInitialSeed(xNames(n + extra), M, n);
        const int k = static_cast<int>(rng() % n);
        const Seed back = mutateSeed(mutateSeed(s, k), k);
        c.expect(back.expressions == s.expressions && back.matrix == s.matrix,
                 "mutation twice at " + std::to_string(k) + " is not the identity");
        if (!c.ok) return;
    }
}

void laurentPositivity(Check& c) {
    const std::vector<ExtendedMatrix> cases = {
        rowsToMatrix({{0, 1}, {-1, 0}}),
        rowsToMatrix({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}),
        rowsToMatrix({{0, 1}, {-2, 0}})};
    for (const auto& B : cases) {
        for (bool principal : {false, true}) {
            Seed s = principal ? makePrincipalSeed(xNames(B.cols()), B)
                               : makeInitialSeed(xNames(B.cols()), B, B.cols());
            ExchangeGraph g = ExchangeGraph::enumerate(s, 2000);
            c.expect(g.complete(), "finite-type enumeration did not close");
            if (!g.complete()) return;
            for (const auto& [id, poly] : g.variableSet())
                c.expect(poly.isPositive(), "negative coefficient in a variable");
        }
    }
}

void graphCounts(Check& c, Fixtures& fx) {
    ExchangeGraph a2 = ExchangeGraph::enumerate(
        makeInitialSeed(xNames(2), rowsToMatrix({{0, 1}, {-1, 0}}), 2), 100);
    c.expect(a2.complete() && a2.nodeCount() == 5 && a2.variableCount() == 5,
             "A2 should close at 5 clusters / 5 variables");
    ExchangeGraph a3 = ExchangeGraph::enumerate(
        makeInitialSeed(xNames(3), rowsToMatrix({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}), 3),
        100);
    c.expect(a3.complete() && a3.nodeCount() == 14 && a3.variableCount() == 9,
             "A3 should close at 14 clusters / 9 variables");

    std::unique_ptr<PolygonUniverse> pentagon;
    for (int n : {5, 6, 8}) {
        const long long cat = catalan(n - 2);
        const auto tris = allTriangulations(n);
        c.expect(static_cast<long long>(tris.size()) == cat,
                 "triangulation enumeration misses Catalan(" + std::to_string(n - 2) + ")");
        if (n == 5) pentagon = std::make_unique<PolygonUniverse>(5);
        const PolygonUniverse& poly =
            (n == 6) ? fx.hexagon() : (n == 8) ? fx.octagon() : *pentagon;
        c.expect(poly.graph().nodeCount() == static_cast<int>(tris.size()),
                 "polygon graph node count differs from the triangulation count");
    }
}

void narcFormulas(Check& c) {
    c.expect(arcCount({0, 1, 0, 6}) == 3, "hexagon arc count");
    c.expect(arcCount({1, 0, 1, 0}) == 3, "once-punctured torus arc count");
    c.expect(arcCount({0, 2, 0, 2}) == 2, "annulus arc count");
    SubsurfaceParams p;
    c.expect(maxTaggedArcsInSubsurface(p, SubsurfaceCase::noMarkedOrOncePuncturedDisk) == 0,
             "case (1)");
    c.expect(maxTaggedArcsInSubsurface(p, SubsurfaceCase::oncePuncturedDisk1Mark) == 2,
             "case (2)");
    p.boundaryArcCount = 2;
    c.expect(maxTaggedArcsInSubsurface(p, SubsurfaceCase::annulusOrDigon) == 2,
             "case (3)");
    SubsurfaceParams hexagonParams;
    hexagonParams.boundaries = 1;
    hexagonParams.boundaryMarks = 6;
    c.expect(maxTaggedArcsInSubsurface(hexagonParams, SubsurfaceCase::general) == 3,
             "general case on the hexagon");
}

void tropicalDuality(Check& c, unsigned seed) {
    std::mt19937 rng(seed + 1);
    const std::vector<ExtendedMatrix> finitePool = {
        rowsToMatrix({{0, 1}, {-1, 0}}),
        rowsToMatrix({{0, 1}, {-2, 0}}),
        rowsToMatrix({{0, 1}, {-3, 0}}),
        rowsToMatrix({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}),
        rowsToMatrix({{0, 1, 0}, {-1, 0, 1}, {0, -2, 0}}),
        rowsToMatrix({{0, 1, 0, 0}, {-1, 0, 1, 0}, {0, -1, 0, 1}, {0, 0, -1, 0}}),
        rowsToMatrix({{0, 1, 0, 0}, {-1, 0, 1, 1}, {0, -1, 0, 0}, {0, -1, 0, 0}}),
        rowsToMatrix({{0, 1, 0, 0}, {-1, 0, 1, 0}, {0, -2, 0, 1}, {0, 0, -1, 0}})};
    for (const auto& B : finitePool) {
        const int n = B.cols();
        Seed s = makePrincipalSeed(xNames(n), B);
        const SkewSymmetrizer D = findSkewSymmetrizer(B);
        for (int step = 0; step < 200; ++step) {
            s = mutateSeed(s, static_cast<int>(rng() % n));
            const IntMatrix C = cMatrixOf(s.matrix);
            c.expect(isColumnSignCoherent(C), "C-matrix lost sign coherence");
            c.expect(gMatrixFromExpansions(s, B) == gMatrixViaDuality(C, D),
                     "duality route disagrees with the expansion route");
            if (!c.ok) return;
        }
    }
    // wild patterns, shallow walks: exact on both routes all the same
    const std::vector<ExtendedMatrix> wildPool = {
        rowsToMatrix({{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}}),
        randomSkewSymmetrizable(rng, 4, 2, 2)};
    for (const auto& B : wildPool) {
        const int n = B.cols();
        Seed s = makePrincipalSeed(xNames(n), B);
        const SkewSymmetrizer D = findSkewSymmetrizer(B);
        for (int step = 0; step < 12; ++step) {
            s = mutateSeed(s, static_cast<int>(rng() % n));
            const IntMatrix C = cMatrixOf(s.matrix);
            c.expect(isColumnSignCoherent(C), "C-matrix lost sign coherence (wild)");
            c.expect(gMatrixFromExpansions(s, B) == gMatrixViaDuality(C, D),
                     "duality route disagrees (wild)");
            if (!c.ok) return;
        }
    }
}

void gVectorInjectivity(Check& c) {
    const std::vector<ExtendedMatrix> cases = {
        rowsToMatrix({{0, 1}, {-1, 0}}),
        rowsToMatrix({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}),
        rowsToMatrix({{0, 1}, {-2, 0}})};
    for (const auto& B : cases) {
        ExchangeGraph g = ExchangeGraph::enumerate(
            makePrincipalSeed(xNames(B.cols()), B), 2000);
        c.expect(g.complete(), "principal enumeration did not close");
        std::map<GVector, LaurentPoly> seen;
        for (const auto& [id, poly] : g.variableSet()) {
            if (g.variableIsFrozen(id)) continue;
            const auto gv = gVector(poly, B);
            auto [it, inserted] = seen.emplace(gv, poly);
            if (!inserted)
                c.expect(it->second == poly, "distinct variables share a g-vector");
        }
    }
}

void propExam(Check& c) {
    const std::vector<ExtendedMatrix> cases = {
        rowsToMatrix({{0}}), rowsToMatrix({{0, 1}, {-1, 0}}),
        rowsToMatrix({{0, 1}, {-2, 0}})};
    for (const auto& B : cases) {
        const int n = B.cols();
        ExchangeGraph g = ExchangeGraph::enumerate(makePrincipalSeed(xNames(n), B), 2000);
        AutGroup G = AutGroup::enumerateAut(g);
        long factorial = 1;
        for (int i = 2; i <= n; ++i) factorial *= i;
        c.expect(G.order() <= 2 * factorial, "group exceeds |S_n x Z2|");
        for (int i = 0; i < G.order(); ++i) {
            const Automorphism& f = G.element(i);
            std::set<GVector> images, expected;
            for (int p = 0; p < n; ++p) {
                images.insert(gVector(g.variable(f.witness[p]), B));
                GVector e(n, 0);
                e[p] = f.sign;
                expected.insert(e);
            }
            c.expect(images == expected,
                     "initial-cluster action is not a signed permutation");
        }
    }
}

void mcgPolygons(Check& c) {
    for (int n = 5; n <= 8; ++n) {
        const McgIsoReport report = mcgIsoCheck(n);
        c.expect(report.pass() && report.autOrder == 2 * n,
                 "dihedral/automorphism mismatch at N=" + std::to_string(n));
    }
}

void hexagonKerPhi(Check& c, Fixtures& fx) {
    auto& poly = fx.hexagon();
    auto& G = fx.hexagonAut();
    auto& engine = fx.hexagonEngine();
    Subgroup H = closure(G, {fx.psiId(poly, G, DihedralElement::rot(6, 1))});
    FixedAnalysis fa = engine.fixedAnalysis(H);
    c.expect(fa.fixedVariables.empty(), "rotation fixes no diagonal");
    c.expect(fa.msub.empty() && engine.inKerPhi(H), "msub should be empty");
}

void octagonExample(Check& c, Fixtures& fx) {
    auto& poly = fx.octagon();
    auto& G = fx.octagonAut();
    auto& engine = fx.octagonEngine();
    const Diagonal g15 = Diagonal::of(1, 5, 8), g37 = Diagonal::of(3, 7, 8);
    c.expect(diagonalsCross(g15, g37), "gamma_15 and gamma_37 must cross");
    Subgroup H = closure(G, {fx.psiId(poly, G, DihedralElement::refl(8, 0)),
                             fx.psiId(poly, G, DihedralElement::refl(8, 4)),
                             fx.psiId(poly, G, DihedralElement::rot(8, 4))});
    c.expect(H.order() == 4, "H = <s1, s2, half-turn> has order 4");
    FixedAnalysis fa = engine.fixedAnalysis(H);
    std::set<std::vector<int>> frozenSets;
    for (const auto& h : fa.msub) frozenSets.insert(h.frozenIds);
    c.expect(frozenSets.count({poly.varOfDiagonal(g15)}) == 1,
             "msub misses frozen-{gamma_15}");
    c.expect(frozenSets.count({poly.varOfDiagonal(g37)}) == 1,
             "msub misses frozen-{gamma_37}");
    c.expect(fa.msub.size() == 2, "msub should have exactly the two members");
    for (const auto& h : fa.msub)
        c.expect(h.rank == fa.msub[0].rank, "msub members must share one rank");
}

void galadPairs(Check& c, Fixtures& fx) {
    // hexagon: long-diagonal stabilizers, conjugate by rotation
    {
        auto& poly = fx.hexagon();
        auto& G = fx.hexagonAut();
        auto& engine = fx.hexagonEngine();
        Subgroup H1 = fx.stabilizer(poly, G, Diagonal::of(1, 4, 6));
        Subgroup H2 = fx.stabilizer(poly, G, Diagonal::of(2, 5, 6));
        GaladReport r1 = engine.verifyGalad(H1, H2);
        c.expect(r1.conjugate && !r1.witnesses.empty() && r1.inverseDirectionVerified,
                 "hexagon stabilizer pair fails");
        Subgroup R1 = closure(G, {fx.psiId(poly, G, DihedralElement::refl(6, 0))});
        Subgroup R2 = closure(G, {fx.psiId(poly, G, DihedralElement::refl(6, 2))});
        GaladReport r2 = engine.verifyGalad(R1, R2);
        c.expect(r2.conjugate && !r2.witnesses.empty() && r2.inverseDirectionVerified,
                 "hexagon reflection pair fails");
    }
    // octagon: vertex-axis reflections conjugate by the 45-degree rotation
    {
        auto& poly = fx.octagon();
        auto& G = fx.octagonAut();
        auto& engine = fx.octagonEngine();
        Subgroup R1 = closure(G, {fx.psiId(poly, G, DihedralElement::refl(8, 0))});
        Subgroup R2 = closure(G, {fx.psiId(poly, G, DihedralElement::refl(8, 2))});
        GaladReport r = engine.verifyGalad(R1, R2);
        c.expect(r.conjugate && !r.witnesses.empty() && r.inverseDirectionVerified,
                 "octagon reflection pair fails");
    }
}

void critWitnesses(Check& c, Fixtures& fx) {
    auto& G = fx.hexagonAut();
    auto& engine = fx.hexagonEngine();
    for (const auto& H : subgroupLattice(G)) {
        FixedAnalysis fa = engine.fixedAnalysis(H);
        for (const auto& sub : fa.msub) {
            GaloisWitnessReport r = engine.isGaloisExtensionWitness(H, sub);
            if (sub.isWhole(engine.universe())) {
                c.expect(r.vacuouslyGalois, "whole algebra should be vacuously Galois");
            } else {
                c.expect(!r.galoisExtension && r.witnessVariable >= 0 &&
                             !r.outsideSupportSlots.empty(),
                         "proper msub member without an orbit-sum witness");
            }
        }
    }
}

void chainTheorems(Check& c, Fixtures& fx) {
    // hexagon: whole > frozen-{gamma_14} > trivial, groups strictly ascend
    {
        auto& poly = fx.hexagon();
        auto& G = fx.hexagonAut();
        auto& engine = fx.hexagonEngine();
        auto whole = engine.wholeAlgebra();
        Subgroup V4 = fx.stabilizer(poly, G, Diagonal::of(1, 4, 6));
        FixedAnalysis fa = engine.fixedAnalysis(V4);
        c.expect(fa.msub.size() == 1, "gamma_14 stabilizer should have one msub member");
        if (fa.msub.size() != 1) return;
        auto mid = fa.msub[0];
        SubSeedSpec emptySpec;
        emptySpec.hostSeed = engine.universe().initialSeed();
        emptySpec.i1 = {0, 1, 2};
        auto bottom = engine.handleFor(0, emptySpec);
        c.expect(engine.contains(whole, mid) && engine.contains(mid, bottom),
                 "hexagon chain is not descending");
        const int o1 = engine.galoisGroup(whole).order();
        const int o2 = engine.galoisGroup(mid).order();
        const int o3 = engine.galoisGroup(bottom).order();
        c.expect(o1 < o2 && o2 < o3, "Galois groups do not strictly ascend");

        auto chain = engine.reverseGaloisChain(
            {trivialSubgroup(G), V4, fullSubgroup(G)});
        c.expect(chain.has_value(), "hexagon reverse chain not found");
        if (chain) {
            c.expect((*chain)[0].isWhole(engine.universe()), "chain top is the whole algebra");
            c.expect(engine.contains((*chain)[0], (*chain)[1]) &&
                         engine.contains((*chain)[1], (*chain)[2]),
                     "reduced chain is not descending");
        }
    }
    // octagon: <s1> sits between the trivial group and the gamma_37 stabilizer
    {
        auto& poly = fx.octagon();
        auto& G = fx.octagonAut();
        auto& engine = fx.octagonEngine();
        Subgroup s1 = closure(G, {fx.psiId(poly, G, DihedralElement::refl(8, 0))});
        Subgroup V4 = fx.stabilizer(poly, G, Diagonal::of(3, 7, 8));
        c.expect(isSubgroupOf(s1, V4), "<s1> should sit inside the stabilizer");

        // the literal half-turn subgroup lies in ker phi: its fixed
        // diagonals pairwise cross, so only singletons are available and
        // their Galois groups are strictly larger
        Subgroup rot180 = closure(G, {fx.psiId(poly, G, DihedralElement::rot(8, 4))});
        c.expect(engine.inKerPhi(rot180), "octagon half-turn should lie in ker phi");

        FixedAnalysis faS1 = engine.fixedAnalysis(s1);
        c.expect(faS1.msub.size() == 1 && faS1.msub[0].rank == 0 &&
                     faS1.msub[0].frozenIds.size() == 3,
                 "msub of <s1> should be the frozen triple");
        FixedAnalysis faV4 = engine.fixedAnalysis(V4);
        c.expect(faV4.msub.size() == 2, "stabilizer msub should have two members");
        if (!faS1.msub.empty() && faV4.msub.size() == 2) {
            auto whole = engine.wholeAlgebra();
            const auto& triple = faS1.msub[0];
            const SubalgebraHandle* single = nullptr;
            for (const auto& h : faV4.msub)
                if (h.frozenIds ==
                    std::vector<int>{poly.varOfDiagonal(Diagonal::of(3, 7, 8))})
                    single = &h;
            c.expect(single != nullptr, "gamma_37 member missing");
            if (single) {
                c.expect(engine.contains(whole, triple) &&
                             engine.contains(triple, *single),
                         "octagon subalgebra chain is not descending");
                const int o1 = engine.galoisGroup(whole).order();
                const int o2 = engine.galoisGroup(triple).order();
                const int o3 = engine.galoisGroup(*single).order();
                c.expect(o1 < o2 && o2 < o3, "octagon Galois chain is not strict");
            }
        }
        auto chain = engine.reverseGaloisChain({trivialSubgroup(G), s1, V4});
        c.expect(chain.has_value(), "octagon reverse chain not found");
        if (chain)
            c.expect(engine.contains((*chain)[0], (*chain)[1]) &&
                         engine.contains((*chain)[1], (*chain)[2]),
                     "octagon reduced chain is not descending");
    }
}

void propAsub(Check& c) {
    Seed a3 = makeInitialSeed(xNames(3),
                              rowsToMatrix({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}), 3);
    ExchangeGraph g = ExchangeGraph::enumerate(a3, 100);
    for (const auto& node : g.nodes()) {
        for (const auto& spec : allSpecsOf(node.seed)) {
            if (!isClusterSubalgebraSpec(spec)) continue;
            SubSeedSpec compSpec;
            compSpec.hostSeed = node.seed;
            std::vector<bool> m0(node.seed.size(), false), m1(node.seed.size(), false);
            for (int p : spec.i0) m0[p] = true;
            for (int p : spec.i1) m1[p] = true;
            for (int p = 0; p < node.seed.nExchange; ++p) {
                if (m0[p]) compSpec.i0.push_back(p);
                if (!m0[p] && !m1[p]) compSpec.i1.push_back(p);
            }
            c.expect(isClusterSubalgebraSpec(compSpec),
                     "complement fails the subalgebra criterion");
            if (!c.ok) return;
        }
    }
}

void lemmaDouble(Check& c) {
    for (const auto& B : {rowsToMatrix({{0, 1}, {-1, 0}}),
                          rowsToMatrix({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}})}) {
        ExchangeGraph g = ExchangeGraph::enumerate(
            makeInitialSeed(xNames(B.cols()), B, B.cols()), 100);
        const UniqueExpressionReport report = uniqueExpressionBruteForce(g);
        c.expect(report.pass(), "unique-expression violation found");
        c.expect(report.pairsChecked > 0, "scan did not run");
    }
}

void chebyshevLayer(Check& c) {
    c.expect(chebyshevT(0) == IntPoly{2} && chebyshevT(1) == IntPoly{0, 1},
             "T base cases");
    c.expect(chebyshevU(0) == IntPoly{1} && chebyshevU(1) == IntPoly{0, 1},
             "U base cases");
    for (int k = 0; k <= 10; ++k) {
        const IntPoly t = chebyshevT(k), u = chebyshevU(k);
        c.expect(static_cast<int>(t.size()) == std::max(k + 1, 1) && t.back() != 0,
                 "T_k degree");
        c.expect(static_cast<int>(u.size()) == k + 1 && u.back() == 1, "U_k degree");
        if (k >= 2) {
            const IntPoly u2 = chebyshevU(k - 2);
            for (std::size_t i = 0; i < t.size(); ++i)
                c.expect(t[i] == u[i] - (i < u2.size() ? u2[i] : BigInt(0)),
                         "T_k != U_k - U_{k-2}");
        }
    }
    const LaurentPoly z =
        LaurentPoly::variable(2, 0) + LaurentPoly::variable(2, 1);
    c.expect(applyTransform({TransformKind::bangle, 3}, z) == z.pow(3), "bangle");
    c.expect(applyTransform({TransformKind::bracelet, 2}, z) ==
                 z * z - LaurentPoly::constant(2, 2),
             "bracelet");
    c.expect(applyTransform({TransformKind::band, 2}, z) ==
                 z * z - LaurentPoly::constant(2, 1),
             "band");
}

void flipMutation(Check& c) {
    for (const auto& t : allTriangulations(6)) {
        const Seed s = seedFromTriangulation(t);
        for (std::size_t k = 0; k < t.diagonals.size(); ++k) {
            const Seed viaMutation = mutateSeed(s, static_cast<int>(k));
            const Triangulation ft = flip(t, t.diagonals[k]);
            const Seed viaFlip = seedFromTriangulation(ft);
            Diagonal newD{};
            for (const auto& d : ft.diagonals)
                if (!t.contains(d)) newD = d;
            std::vector<std::string> mutNames;
            for (std::size_t p = 0; p < t.diagonals.size(); ++p)
                mutNames.push_back(p == k ? newD.name() : t.diagonals[p].name());
            std::map<std::pair<std::string, std::string>, std::int64_t> a, b;
            for (std::size_t i = 0; i < mutNames.size(); ++i)
                for (std::size_t j = 0; j < mutNames.size(); ++j)
                    a[{mutNames[i], mutNames[j]}] = viaMutation.matrix.at(
                        static_cast<int>(i), static_cast<int>(j));
            for (int i = 0; i < viaFlip.size(); ++i)
                for (int j = 0; j < viaFlip.size(); ++j)
                    b[{viaFlip.names[i], viaFlip.names[j]}] = viaFlip.matrix.at(i, j);
            c.expect(a == b, "flip and mutation disagree");
            if (!c.ok) return;
        }
    }
}

} // namespace

std::vector<CriterionResult> runAcceptanceSuite(unsigned rngSeed) {
    Fixtures fx;
    std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
        {"mutation involution on random seeds", [&](Check& c) { mutationInvolution(c, rngSeed); }},
        {"Laurent positivity on A2/A3/B2", [&](Check& c) { laurentPositivity(c); }},
        {"exchange-graph counts", [&](Check& c) { graphCounts(c, fx); }},
        {"arc-count formulas", [&](Check& c) { narcFormulas(c); }},
        {"tropical duality on random walks", [&](Check& c) { tropicalDuality(c, rngSeed); }},
        {"g-vector injectivity", [&](Check& c) { gVectorInjectivity(c); }},
        {"principal groups embed in S_n x Z2", [&](Check& c) { propExam(c); }},
        {"polygon mapping class groups (N=5..8)", [&](Check& c) { mcgPolygons(c); }},
        {"hexagon ker-phi example", [&](Check& c) { hexagonKerPhi(c, fx); }},
        {"octagon msub example", [&](Check& c) { octagonExample(c, fx); }},
        {"conjugacy <-> isomorphic extensions", [&](Check& c) { galadPairs(c, fx); }},
        {"orbit-sum witnesses on the hexagon lattice", [&](Check& c) { critWitnesses(c, fx); }},
        {"chain theorems and reverse Galois map", [&](Check& c) { chainTheorems(c, fx); }},
        {"complement criterion over all A3 specs", [&](Check& c) { propAsub(c); }},
        {"unique-expression scans (A2, A3)", [&](Check& c) { lemmaDouble(c); }},
        {"Chebyshev layer", [&](Check& c) { chebyshevLayer(c); }},
        {"flip-mutation compatibility on the hexagon", [&](Check& c) { flipMutation(c); }},
    };

    std::vector<CriterionResult> results;
    int index = 1;
    for (auto& [name, fn] : criteria) {
        CriterionResult r;
        r.index = index++;
        r.name = name;
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            fn(check);
            r.pass = check.ok;
            r.detail = check.detail.str();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        const auto end = std::chrono::steady_clock::now();
        r.millis = std::chrono::duration<double, std::milli>(end - start).count();
        results.push_back(std::move(r));
    }
    return results;
}

void printSuite(std::ostream& out, const std::vector<CriterionResult>& results) {
    for (const auto& r : results) {
        out << (r.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << r.index << "  "
            << r.name << "  (" << std::fixed << std::setprecision(1) << r.millis
            << " ms)";
        if (!r.pass && !r.detail.empty()) out << "  -- " << r.detail;
        out << "\n";
    }
}

bool allPass(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

} // namespace clusterkit
