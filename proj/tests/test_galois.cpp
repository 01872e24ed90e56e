#include <doctest.h>

#include "test_helpers.hpp"
#include "clusterkit/galois.hpp"
#include "clusterkit/polygon.hpp"

using namespace ckt;

namespace {

// Shared hexagon fixture: universe, group, engine, and the dihedral
// correspondence.
struct Hexagon {
    PolygonUniverse poly;
    AutGroup G;
    GaloisEngine engine;

    Hexagon() : poly(6), G(AutGroup::enumerateAut(poly.graph())), engine(poly.graph(), G) {}

    int psiId(const DihedralElement& h) { return *G.idOf(poly.psiFromMcg(h, G)); }

    Subgroup stabilizerOfDiagonal(const Diagonal& d) {
        const int id = poly.varOfDiagonal(d);
        Subgroup H;
        H.ambient = &G;
        for (int f = 0; f < G.order(); ++f)
            if (G.element(f).perm[id] == id) H.elementIds.push_back(f);
        H.generatorIds = engine.minimalGenerators(H);
        return H;
    }
};

} // namespace

TEST_CASE("Galois group of the trivial subalgebra is the full group") {
    Hexagon hx;
    SubSeedSpec spec;
    spec.hostSeed = hx.poly.graph().initialSeed();
    spec.i1 = {0, 1, 2};
    auto trivial = hx.engine.handleFor(0, spec);
    Subgroup H = hx.engine.galoisGroup(trivial);
    CHECK(H.order() == 12);
}

TEST_CASE("Galois group of the whole algebra is trivial") {
    Hexagon hx;
    auto whole = hx.engine.wholeAlgebra();
    CHECK(hx.engine.galoisGroup(whole).order() == 1);
}

TEST_CASE("hexagon: stabilizer of the long diagonal gamma_14") {
    Hexagon hx;
    const Diagonal g14 = Diagonal::of(1, 4, 6);
    Subgroup H = hx.stabilizerOfDiagonal(g14);
    // two reflections and the half-turn fix gamma_14
    CHECK(H.order() == 4);
    CHECK(H.contains(hx.psiId(DihedralElement::rot(6, 3))));

    // the Galois group of the frozen-{gamma_14} subalgebra equals it
    const int node = *hx.poly.nodeOfTriangulation(
        Triangulation::of(6, {g14, Diagonal::of(1, 3, 6), Diagonal::of(1, 5, 6)}));
    const GraphNode& rep = hx.poly.graph().node(node);
    SubSeedSpec spec;
    spec.hostSeed = rep.seed;
    for (int p = 0; p < 3; ++p) {
        if (hx.poly.diagonalOfVar(rep.varIds[p]) == g14)
            spec.i0.push_back(p);
        else
            spec.i1.push_back(p);
    }
    auto sub = hx.engine.handleFor(node, spec);
    CHECK(hx.engine.galoisGroup(sub) == H);
}

TEST_CASE("hexagon ker-phi example: the 60-degree rotation subgroup") {
    Hexagon hx;
    Subgroup H = closure(hx.G, {hx.psiId(DihedralElement::rot(6, 1))});
    REQUIRE(H.order() == 6);
    FixedAnalysis fa = hx.engine.fixedAnalysis(H);
    CHECK(fa.fixedVariables.empty());
    REQUIRE(fa.maximalSubalgebras.size() == 1);
    CHECK(fa.maximalSubalgebras[0].varIds.empty());  // only the trivial algebra
    CHECK(fa.msub.empty());
    CHECK(hx.engine.inKerPhi(H));
}

TEST_CASE("hexagon: trivial subgroup has msub = {whole algebra}") {
    Hexagon hx;
    FixedAnalysis fa = hx.engine.fixedAnalysis(trivialSubgroup(hx.G));
    REQUIRE(fa.msub.size() == 1);
    CHECK(fa.msub[0].isWhole(hx.poly.graph()));
}

TEST_CASE("hexagon: vertex reflection pairs gamma_26, gamma_35") {
    Hexagon hx;
    // reflection through the 1-4 vertex axis: fixes 1 and 4, swaps 2/6 and 3/5
    Subgroup H = closure(hx.G, {hx.psiId(DihedralElement::refl(6, 0))});
    REQUIRE(H.order() == 2);
    FixedAnalysis fa = hx.engine.fixedAnalysis(H);
    // fixed diagonals: gamma_14, gamma_26, gamma_35
    CHECK(fa.fixedVariables.size() == 3);
    // maximal candidates: frozen-{26,35} and frozen-{14}
    CHECK(fa.maximalSubalgebras.size() == 2);
    REQUIRE(fa.msub.size() == 1);
    CHECK(fa.msub[0].rank == 0);
    CHECK(fa.msub[0].frozenIds ==
          std::vector<int>{std::min(hx.poly.varOfDiagonal(Diagonal::of(2, 6, 6)),
                                    hx.poly.varOfDiagonal(Diagonal::of(3, 5, 6))),
                           std::max(hx.poly.varOfDiagonal(Diagonal::of(2, 6, 6)),
                                    hx.poly.varOfDiagonal(Diagonal::of(3, 5, 6)))});
}

TEST_CASE("galois map reverses containment on a hexagon chain") {
    Hexagon hx;
    auto whole = hx.engine.wholeAlgebra();
    const Diagonal g14 = Diagonal::of(1, 4, 6);
    FixedAnalysis fa = hx.engine.fixedAnalysis(hx.stabilizerOfDiagonal(g14));
    REQUIRE(fa.msub.size() == 1);
    auto sub = fa.msub[0];
    CHECK(hx.engine.contains(whole, sub));
    CHECK(!hx.engine.contains(sub, whole));
    CHECK(isSubgroupOf(hx.engine.galoisMapXi(whole), hx.engine.galoisMapXi(sub)));
}

TEST_CASE("orbit sizes under the rotation subgroup") {
    Hexagon hx;
    Subgroup rot = closure(hx.G, {hx.psiId(DihedralElement::rot(6, 1))});
    for (int id = 0; id < hx.poly.graph().variableCount(); ++id) {
        const int n = hx.engine.orbitSize(rot, id);
        CHECK((n == 3 || n == 6));  // long diagonals: 3, short ones: 6
    }
    CHECK(hx.engine.orbitSize(trivialSubgroup(hx.G), 0) == 1);
}

TEST_CASE("orbit-sum witness: no proper hexagon subalgebra is Galois") {
    Hexagon hx;
    const Diagonal g14 = Diagonal::of(1, 4, 6);
    Subgroup H = hx.stabilizerOfDiagonal(g14);
    FixedAnalysis fa = hx.engine.fixedAnalysis(H);
    REQUIRE(fa.msub.size() == 1);
    GaloisWitnessReport report = hx.engine.isGaloisExtensionWitness(H, fa.msub[0]);
    CHECK(!report.vacuouslyGalois);
    CHECK(!report.galoisExtension);
    CHECK(report.witnessVariable >= 0);
    CHECK(!report.outsideSupportSlots.empty());

    // the whole algebra is vacuously Galois
    GaloisWitnessReport whole = hx.engine.isGaloisExtensionWitness(
        trivialSubgroup(hx.G), hx.engine.wholeAlgebra());
    CHECK(whole.vacuouslyGalois);
}

TEST_CASE("galad verification on conjugate hexagon stabilizers") {
    Hexagon hx;
    Subgroup H1 = hx.stabilizerOfDiagonal(Diagonal::of(1, 4, 6));
    Subgroup H2 = hx.stabilizerOfDiagonal(Diagonal::of(2, 5, 6));
    GaladReport report = hx.engine.verifyGalad(H1, H2);
    CHECK(report.conjugate);
    CHECK(report.conjugatorId.has_value());
    CHECK(!report.witnesses.empty());
    CHECK(report.inverseDirectionVerified);

    GaladReport self = hx.engine.verifyGalad(H1, H1);
    CHECK(self.conjugate);

    Subgroup rot = closure(hx.G, {hx.psiId(DihedralElement::rot(6, 1))});
    CHECK_THROWS_AS(hx.engine.verifyGalad(H1, rot), KerPhiInput);
}

TEST_CASE("reverse galois chain on the hexagon lattice") {
    Hexagon hx;
    Subgroup id = trivialSubgroup(hx.G);
    Subgroup V4 = hx.stabilizerOfDiagonal(Diagonal::of(1, 4, 6));
    Subgroup full = fullSubgroup(hx.G);

    auto chain = hx.engine.reverseGaloisChain({id, V4, full});
    REQUIRE(chain.has_value());
    REQUIRE(chain->size() == 3);
    CHECK((*chain)[0].isWhole(hx.poly.graph()));
    // reduced frozen-singletons collapse to the trivial algebra
    CHECK((*chain)[1].varIds.empty());
    CHECK((*chain)[2].varIds.empty());
    CHECK(hx.engine.contains((*chain)[0], (*chain)[1]));
    CHECK(hx.engine.contains((*chain)[1], (*chain)[2]));

    CHECK_THROWS_AS(hx.engine.reverseGaloisChain({full, id}), NotAscending);
    Subgroup rot = closure(hx.G, {hx.psiId(DihedralElement::rot(6, 1))});
    CHECK_THROWS_AS(hx.engine.reverseGaloisChain({rot, full}), KerPhiInput);
}

TEST_CASE("strictly descending Galois-like chain gives strictly ascending groups") {
    Hexagon hx;
    auto whole = hx.engine.wholeAlgebra();
    Subgroup V4 = hx.stabilizerOfDiagonal(Diagonal::of(1, 4, 6));
    FixedAnalysis fa = hx.engine.fixedAnalysis(V4);
    REQUIRE(fa.msub.size() == 1);
    auto mid = fa.msub[0];
    SubSeedSpec emptySpec;
    emptySpec.hostSeed = hx.poly.graph().initialSeed();
    emptySpec.i1 = {0, 1, 2};
    auto bottom = hx.engine.handleFor(0, emptySpec);

    CHECK(hx.engine.contains(whole, mid));
    CHECK(hx.engine.contains(mid, bottom));
    Subgroup g1 = hx.engine.galoisGroup(whole);
    Subgroup g2 = hx.engine.galoisGroup(mid);
    Subgroup g3 = hx.engine.galoisGroup(bottom);
    CHECK(isSubgroupOf(g1, g2));
    CHECK(isSubgroupOf(g2, g3));
    CHECK(g1.order() < g2.order());
    CHECK(g2.order() < g3.order());
}

TEST_CASE("phi is injective off its kernel, and Im xi is its complement") {
    Hexagon hx;
    const auto lattice = subgroupLattice(hx.G);
    REQUIRE(lattice.size() == 16);

    std::map<std::vector<int>, std::set<SubalgebraHandle::Key>> msubMap;
    std::set<std::vector<int>> outsideKer;
    for (const auto& H : lattice) {
        FixedAnalysis fa = hx.engine.fixedAnalysis(H);
        if (fa.msub.empty()) continue;
        std::set<SubalgebraHandle::Key> keys;
        for (const auto& h : fa.msub) keys.insert(h.key());
        msubMap.emplace(H.elementIds, keys);
        outsideKer.insert(H.elementIds);
    }
    // injectivity of phi off ker
    std::set<std::set<SubalgebraHandle::Key>> values;
    for (const auto& [h, keys] : msubMap) CHECK(values.insert(keys).second);

    // Im xi: Galois groups of every subalgebra of the hexagon
    std::set<std::vector<int>> image;
    for (int node = 0; node < hx.poly.graph().nodeCount(); ++node) {
        for (const auto& spec : allSpecsOf(hx.poly.graph().node(node).seed)) {
            if (!isClusterSubalgebraSpec(spec)) continue;
            auto h = hx.engine.handleFor(node, spec);
            image.insert(hx.engine.galoisGroup(h).elementIds);
        }
    }
    CHECK(image == outsideKer);
}

TEST_CASE("members of msub share one rank across the hexagon lattice") {
    Hexagon hx;
    for (const auto& H : subgroupLattice(hx.G)) {
        FixedAnalysis fa = hx.engine.fixedAnalysis(H);
        for (const auto& h : fa.msub) CHECK(h.rank == fa.msub[0].rank);
        // maximal candidates share the rank too (surface case)
        for (const auto& h : fa.maximalSubalgebras)
            CHECK(h.rank == fa.maximalSubalgebras[0].rank);
    }
}

TEST_CASE("comembed embedding is injective on the gamma_14 Galois group") {
    Hexagon hx;
    const Diagonal g14 = Diagonal::of(1, 4, 6);
    Subgroup H = hx.stabilizerOfDiagonal(g14);
    FixedAnalysis fa = hx.engine.fixedAnalysis(H);
    REQUIRE(fa.msub.size() == 1);
    const auto& sub = fa.msub[0];
    const Seed comp = complementSubseed(sub.spec);
    ExchangeGraph cg = ExchangeGraph::enumerate(comp, 1000);
    REQUIRE(cg.complete());
    // restrictions of distinct Galois elements to the complement differ
    std::set<std::vector<int>> restrictions;
    for (int f : H.elementIds) {
        std::vector<int> restricted;
        for (const auto& [cid, poly] : cg.variableSet()) {
            const int uid = *hx.poly.graph().variableId(poly);
            restricted.push_back(hx.G.element(f).perm[uid]);
        }
        CHECK(restrictions.insert(restricted).second);
    }
}
