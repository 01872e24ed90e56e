#include <doctest.h>

#include "test_helpers.hpp"
#include "clusterkit/polygon.hpp"

using namespace ckt;

namespace {

long long catalan(int k) {
    long long c = 1;
    for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

} // namespace

TEST_CASE("arc counts from the surface formula") {
    CHECK(arcCount({0, 1, 0, 6}) == 3);   // hexagon
    CHECK(arcCount({1, 0, 1, 0}) == 3);   // once-punctured torus
    CHECK(arcCount({0, 2, 0, 2}) == 2);   // annulus with 1+1 marks
    CHECK(arcCount({0, 0, 4, 0}) == 6);   // 4-punctured sphere
    CHECK_THROWS_AS(arcCount({0, 1, 0, 3}), ExcludedSurface);
    CHECK_THROWS_AS(arcCount({0, 0, 3, 0}), ExcludedSurface);
    CHECK_THROWS_AS(arcCount({0, 1, 1, 1}), ExcludedSurface);
    for (int n = 4; n <= 9; ++n) CHECK(arcCount({0, 1, 0, n}) == n - 3);
}

TEST_CASE("subsurface arc-count cases") {
    SubsurfaceParams p;
    CHECK(maxTaggedArcsInSubsurface(p, SubsurfaceCase::noMarkedOrOncePuncturedDisk) == 0);
    CHECK(maxTaggedArcsInSubsurface(p, SubsurfaceCase::oncePuncturedDisk1Mark) == 2);
    p.boundaryArcCount = 2;
    CHECK(maxTaggedArcsInSubsurface(p, SubsurfaceCase::annulusOrDigon) == 2);
    SubsurfaceParams hexagon;
    hexagon.boundaries = 1;
    hexagon.boundaryMarks = 6;
    CHECK(maxTaggedArcsInSubsurface(hexagon, SubsurfaceCase::general) == 3);
}

TEST_CASE("diagonals: construction and crossing") {
    CHECK_THROWS_AS(Diagonal::of(1, 2, 6), InvalidSpec);
    CHECK_THROWS_AS(Diagonal::of(1, 6, 6), InvalidSpec);
    CHECK(diagonalsCross(Diagonal::of(1, 3, 6), Diagonal::of(2, 6, 6)));
    CHECK(!diagonalsCross(Diagonal::of(2, 6, 6), Diagonal::of(3, 5, 6)));
    CHECK(diagonalsCross(Diagonal::of(1, 5, 8), Diagonal::of(3, 7, 8)));  // ex8gon
}

TEST_CASE("triangulation counts are Catalan numbers") {
    for (int n = 4; n <= 9; ++n)
        CHECK(static_cast<long long>(allTriangulations(n).size()) == catalan(n - 2));
}

TEST_CASE("diagonal count of the N-gon") {
    for (int n = 4; n <= 9; ++n) {
        std::set<Diagonal> all;
        for (const auto& t : allTriangulations(n))
            for (const auto& d : t.diagonals) all.insert(d);
        CHECK(static_cast<int>(all.size()) == n * (n - 3) / 2);
    }
}

TEST_CASE("flip: square, involution, fan") {
    const Triangulation square = Triangulation::of(4, {Diagonal::of(1, 3, 4)});
    const Triangulation flipped = flip(square, Diagonal::of(1, 3, 4));
    CHECK(flipped.contains(Diagonal::of(2, 4, 4)));
    CHECK(flip(flipped, Diagonal::of(2, 4, 4)) == square);

    const Triangulation fan = Triangulation::fan(6);
    const Triangulation f13 = flip(fan, Diagonal::of(1, 3, 6));
    CHECK(f13.contains(Diagonal::of(2, 4, 6)));
    for (const auto& t : allTriangulations(6))
        for (const auto& d : t.diagonals) CHECK(flip(flip(t, d), d) == t);
    CHECK_THROWS_AS(flip(fan, Diagonal::of(2, 4, 6)), NotInTriangulation);
}

TEST_CASE("seed from a triangulation: path quiver and the square") {
    const Seed hexFan = seedFromTriangulation(Triangulation::fan(6));
    const auto B = hexFan.matrix;
    // A3 path quiver up to global sign
    const auto want = mat({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}});
    CHECK((B == want || B == want.negated()));

    const Seed square = seedFromTriangulation(Triangulation::of(4, {Diagonal::of(1, 3, 4)}));
    CHECK(square.matrix == ExtendedMatrix(1, 1));

    const Seed pentagonFan = seedFromTriangulation(Triangulation::fan(5));
    const auto B5 = pentagonFan.matrix;
    const auto wantA2 = mat({{0, 1}, {-1, 0}});
    CHECK((B5 == wantA2 || B5 == wantA2.negated()));
}

TEST_CASE("flip commutes with mutation over the whole hexagon") {
    for (const auto& t : allTriangulations(6)) {
        const Seed s = seedFromTriangulation(t);
        for (std::size_t k = 0; k < t.diagonals.size(); ++k) {
            const Seed viaMutation = mutateSeed(s, static_cast<int>(k));
            const Seed viaFlip = seedFromTriangulation(flip(t, t.diagonals[k]));
            // the names carry the diagonals; compare as unordered seeds
            std::map<std::string, std::map<std::string, std::int64_t>> a, b;
            const Triangulation ft = flip(t, t.diagonals[k]);
            // mutated seed: position k now holds the flipped diagonal
            std::vector<std::string> mutNames;
            for (std::size_t p = 0; p < t.diagonals.size(); ++p) {
                if (p == k) {
                    Diagonal newD{};
                    for (const auto& d : ft.diagonals)
                        if (!t.contains(d)) newD = d;
                    mutNames.push_back(newD.name());
                } else {
                    mutNames.push_back(t.diagonals[p].name());
                }
            }
            for (std::size_t i = 0; i < mutNames.size(); ++i)
                for (std::size_t j = 0; j < mutNames.size(); ++j)
                    a[mutNames[i]][mutNames[j]] = viaMutation.matrix.at(
                        static_cast<int>(i), static_cast<int>(j));
            for (int i = 0; i < viaFlip.size(); ++i)
                for (int j = 0; j < viaFlip.size(); ++j)
                    b[viaFlip.names[i]][viaFlip.names[j]] =
                        viaFlip.matrix.at(i, j);
            CHECK(a == b);
        }
    }
}

TEST_CASE("polygon universes: nodes are triangulations") {
    for (int n : {5, 6}) {
        PolygonUniverse poly(n);
        CHECK(poly.graph().nodeCount() == catalan(n - 2));
        CHECK(poly.graph().variableCount() == n * (n - 3) / 2);
        for (int node = 0; node < poly.graph().nodeCount(); ++node) {
            const Triangulation& t = poly.triangulationOfNode(node);
            CHECK(poly.nodeOfTriangulation(t) == node);
        }
    }
}

TEST_CASE("dihedral group: composition law and psi is an action") {
    const auto elements = dihedralGroup(6);
    CHECK(elements.size() == 12);
    PolygonUniverse poly(6);
    AutGroup G = AutGroup::enumerateAut(poly.graph());
    std::map<std::pair<int, bool>, int> psiIds;
    for (const auto& h : elements)
        psiIds[{h.rotation, h.reflected}] = *G.idOf(poly.psiFromMcg(h, G));
    for (const auto& h1 : elements)
        for (const auto& h2 : elements) {
            const DihedralElement h12 = h1.compose(h2);
            CHECK(G.multiply(psiIds[{h1.rotation, h1.reflected}],
                             psiIds[{h2.rotation, h2.reflected}]) ==
                  psiIds[{h12.rotation, h12.reflected}]);
        }
}

TEST_CASE("psi: identity, rotation order, reflection fixing gamma_14") {
    PolygonUniverse poly(6);
    AutGroup G = AutGroup::enumerateAut(poly.graph());

    CHECK(poly.psiFromMcg(DihedralElement::rot(6, 0), G).isIdentity());

    const Automorphism rot = poly.psiFromMcg(DihedralElement::rot(6, 1), G);
    int k = *G.idOf(rot), order = 1;
    while (k != G.identityId()) {
        k = G.multiply(k, *G.idOf(rot));
        ++order;
    }
    CHECK(order == 6);
    for (int id = 0; id < poly.graph().variableCount(); ++id)
        CHECK(rot.perm[id] != id);

    const Automorphism refl = poly.psiFromMcg(DihedralElement::refl(6, 0), G);
    const int g14 = poly.varOfDiagonal(Diagonal::of(1, 4, 6));
    CHECK(refl.perm[g14] == g14);
}

TEST_CASE("mapping class group isomorphism for small polygons") {
    for (int n : {5, 6}) {
        const McgIsoReport report = mcgIsoCheck(n);
        CHECK(report.dihedralOrder == 2 * n);
        CHECK(report.autOrder == 2 * n);
        CHECK(report.pass());
    }
}

TEST_CASE("maximal invariant regions match the algebraic route") {
    PolygonUniverse poly(6);
    AutGroup G = AutGroup::enumerateAut(poly.graph());
    GaloisEngine engine(poly.graph(), G);

    SUBCASE("trivial subgroup: every diagonal, whole algebra") {
        InvariantRegion region =
            maximalInvariantRegion(poly, engine, trivialSubgroup(G));
        CHECK(region.fixedDiagonals.size() == 9);
        CHECK(region.matchesFixedAnalysis);
        REQUIRE(region.regionSubalgebras.size() == 1);
        CHECK(region.regionSubalgebras[0].isWhole(poly.graph()));
    }

    SUBCASE("rotation subgroup: empty region") {
        const Automorphism rot = poly.psiFromMcg(DihedralElement::rot(6, 1), G);
        InvariantRegion region =
            maximalInvariantRegion(poly, engine, closure(G, {*G.idOf(rot)}));
        CHECK(region.fixedDiagonals.empty());
        CHECK(region.matchesFixedAnalysis);
    }

    SUBCASE("full subgroup lattice cross-check") {
        for (const auto& H : subgroupLattice(G)) {
            InvariantRegion region = maximalInvariantRegion(poly, engine, H);
            CHECK(region.matchesFixedAnalysis);
        }
    }
}

TEST_CASE("octagon: gamma_15 and gamma_37 cross, so msub keeps them apart") {
    PolygonUniverse poly(8);
    AutGroup G = AutGroup::enumerateAut(poly.graph());
    GaloisEngine engine(poly.graph(), G);

    const Diagonal g15 = Diagonal::of(1, 5, 8), g37 = Diagonal::of(3, 7, 8);
    CHECK(diagonalsCross(g15, g37));

    // H = <s1, s2, half-turn>: s1 fixes vertices 1,5; s2 fixes 3,7.
    const int s1 = *G.idOf(poly.psiFromMcg(DihedralElement::refl(8, 0), G));
    const int s2 = *G.idOf(poly.psiFromMcg(DihedralElement::refl(8, 4), G));
    const int rot180 = *G.idOf(poly.psiFromMcg(DihedralElement::rot(8, 4), G));
    Subgroup H = closure(G, {s1, s2, rot180});
    CHECK(H.order() == 4);

    FixedAnalysis fa = engine.fixedAnalysis(H);
    REQUIRE(fa.msub.size() == 2);
    std::set<std::vector<int>> frozenSets;
    for (const auto& h : fa.msub) {
        CHECK(h.rank == 0);
        frozenSets.insert(h.frozenIds);
    }
    CHECK(frozenSets.count({poly.varOfDiagonal(g15)}));
    CHECK(frozenSets.count({poly.varOfDiagonal(g37)}));
}
