#include <doctest.h>

#include "test_helpers.hpp"

using namespace ckt;

namespace {

long long catalan(int k) {
    long long c = 1;
    for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

Seed typeASeed(int k) {
    ExtendedMatrix B(k, k);
    for (int i = 0; i + 1 < k; ++i) {
        B.at(i, i + 1) = 1;
        B.at(i + 1, i) = -1;
    }
    std::vector<std::string> names;
    for (int i = 0; i < k; ++i) names.push_back("x" + std::to_string(i + 1));
    return makeInitialSeed(names, B, k);
}

} // namespace

TEST_CASE("A2 closes with 5 clusters and 5 variables") {
    ExchangeGraph g = ExchangeGraph::enumerate(a2Seed(), 100);
    REQUIRE(g.complete());
    CHECK(g.nodeCount() == 5);
    CHECK(g.variableCount() == 5);
    CHECK(g.variableSet().size() == 5);
}

TEST_CASE("A3 closes with 14 clusters and 9 variables") {
    ExchangeGraph g = ExchangeGraph::enumerate(a3Seed(), 100);
    REQUIRE(g.complete());
    CHECK(g.nodeCount() == 14);
    CHECK(g.variableCount() == 9);
    CHECK(g.variableCount() == 3 * (3 + 3) / 2);
}

TEST_CASE("type A_k counts match Catalan and k(k+3)/2 for k <= 5") {
    for (int k = 1; k <= 5; ++k) {
        ExchangeGraph g = ExchangeGraph::enumerate(typeASeed(k), 1000);
        REQUIRE(g.complete());
        CHECK(g.nodeCount() == catalan(k + 1));
        CHECK(g.variableCount() == k * (k + 3) / 2);
    }
}

TEST_CASE("Markov matrix exceeds any small budget") {
    Seed markov = makeInitialSeed(
        {"x1", "x2", "x3"}, mat({{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}}), 3);
    ExchangeGraph g = ExchangeGraph::enumerate(markov, 150);
    CHECK(!g.complete());
    CHECK(g.nodeCount() == 150);
    CHECK_THROWS_AS(g.variableSet(), IncompleteGraph);
}

TEST_CASE("rank-zero seed gives a single node with frozen variables only") {
    Seed s = makeInitialSeed({"y1", "y2"}, ExtendedMatrix(2, 0), 0);
    ExchangeGraph g = ExchangeGraph::enumerate(s, 10);
    REQUIRE(g.complete());
    CHECK(g.nodeCount() == 1);
    CHECK(g.variableSet().size() == 2);
    CHECK(g.variableIsFrozen(0));
    CHECK(g.variableIsFrozen(1));
}

TEST_CASE("every edge is its own inverse") {
    ExchangeGraph g = ExchangeGraph::enumerate(a3Seed(), 100);
    REQUIRE(g.complete());
    for (int u = 0; u < g.nodeCount(); ++u) {
        for (int k = 0; k < g.nExchange(); ++k) {
            const GraphEdge& e = g.node(u).edges[k];
            REQUIRE(e.target >= 0);
            const int kBack = e.align[k];
            CHECK(g.node(e.target).edges[kBack].target == u);
        }
    }
}

TEST_CASE("shuffled exploration yields the identical graph") {
    const std::string base =
        ExchangeGraph::enumerate(a3Seed(), 100).canonicalFingerprint();
    for (unsigned seed : {1u, 2u, 3u, 4u}) {
        EnumerateOptions opts;
        opts.shuffleSeed = seed;
        CHECK(ExchangeGraph::enumerate(a3Seed(), 100, opts).canonicalFingerprint() ==
              base);
    }
}

TEST_CASE("re-expansion: root coordinates and cross-cluster positivity") {
    ExchangeGraph g = ExchangeGraph::enumerate(a2Seed(), 100);
    REQUIRE(g.complete());
    for (int node = 0; node < g.nodeCount(); ++node) {
        const auto fresh = g.reExpand(node);
        // the node's own variables re-expand to coordinates
        for (int p = 0; p < 2; ++p)
            CHECK(fresh[g.node(node).varIds[p]] == var(2, p));
        for (const auto& f : fresh) CHECK(f.isPositive());
    }
}

TEST_CASE("DOT export mentions every node") {
    ExchangeGraph g = ExchangeGraph::enumerate(a2Seed(), 100);
    const std::string dot = g.exportDot();
    CHECK(dot.find("graph exchange {") == 0);
    CHECK(dot.find("n4") != std::string::npos);
    CHECK(dot.find("--") != std::string::npos);
}
