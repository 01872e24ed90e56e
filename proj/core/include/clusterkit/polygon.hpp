#pragma once

#include "clusterkit/galois.hpp"

namespace clusterkit {

// Marked-surface signature: genus, boundary components, punctures, marked
// points on the boundary. Only used through the counting formulas; the
// geometric model below is restricted to unpunctured polygons.
struct SurfaceSignature {
    int genus = 0;
    int boundaries = 0;
    int punctures = 0;
    int boundaryMarks = 0;
};

// Number of arcs in any triangulation: 6g + 3b + 3p + c - 6. Throws
// ExcludedSurface for the degenerate surfaces that admit none.
int arcCount(const SurfaceSignature& sig);

enum class SubsurfaceCase {
    noMarkedOrOncePuncturedDisk,  // cardinality 0
    oncePuncturedDisk1Mark,       // cardinality 2
    annulusOrDigon,               // cardinality n_b
    general,                      // 6g + 3a + 3p + c - 6 - t - s - d + n_b
};

struct SubsurfaceParams {
    int genus = 0;
    int boundaries = 0;   // a
    int punctures = 0;
    int boundaryMarks = 0;  // c
    int unmarkedBoundaries = 0;  // t
    int openAnnuli = 0;          // s
    int openPuncturedDisks = 0;  // d
    int boundaryArcCount = 0;    // n_b
};

int maxTaggedArcsInSubsurface(const SubsurfaceParams& p, SubsurfaceCase tag);

// Diagonal of a convex N-gon with vertices 1..N labelled clockwise.
struct Diagonal {
    int a = 0, b = 0;  // endpoints, a < b, non-adjacent

    static Diagonal of(int i, int j, int ngon);
    bool operator==(const Diagonal& o) const { return a == o.a && b == o.b; }
    bool operator<(const Diagonal& o) const { return std::tie(a, b) < std::tie(o.a, o.b); }
    std::string name() const;
};

bool diagonalsCross(const Diagonal& d1, const Diagonal& d2);

// N-3 pairwise noncrossing diagonals.
struct Triangulation {
    int ngon = 0;
    std::vector<Diagonal> diagonals;  // sorted

    static Triangulation of(int ngon, std::vector<Diagonal> diagonals);
    static Triangulation fan(int ngon, int apex = 1);
    bool operator==(const Triangulation& o) const {
        return ngon == o.ngon && diagonals == o.diagonals;
    }
    bool operator<(const Triangulation& o) const {
        return std::tie(ngon, diagonals) < std::tie(o.ngon, o.diagonals);
    }
    bool contains(const Diagonal& d) const;
};

// All triangulations of the N-gon by direct recursive construction; an
// enumeration independent of the flip graph.
std::vector<Triangulation> allTriangulations(int ngon);

// Triangles (i < j < k) cut out by the triangulation.
std::vector<std::array<int, 3>> trianglesOf(const Triangulation& t);

// Replace d by the other diagonal of its quadrilateral. Involutive.
Triangulation flip(const Triangulation& t, const Diagonal& d);

// Coefficient-free seed of a triangulation: b_{gd} counts shared triangles
// with sign +1 when d follows g counterclockwise (vertices are labelled
// clockwise, so increasing-index traversal of a triangle is clockwise).
// Variable order follows the sorted diagonal list.
Seed seedFromTriangulation(const Triangulation& t);

// Element of the dihedral group of order 2N acting on polygon vertices:
// v -> v + r, optionally pre-composed with the reflection v -> -v.
struct DihedralElement {
    int ngon = 0;
    int rotation = 0;      // 0..N-1
    bool reflected = false;

    static DihedralElement rot(int ngon, int r);
    static DihedralElement refl(int ngon, int r);
    int apply(int vertex) const;
    Diagonal apply(const Diagonal& d) const;
    DihedralElement compose(const DihedralElement& o) const;  // this after o
    DihedralElement inverse() const;
    bool operator==(const DihedralElement& o) const {
        return ngon == o.ngon && rotation == o.rotation && reflected == o.reflected;
    }
};

std::vector<DihedralElement> dihedralGroup(int ngon);

// A polygon universe: the exchange graph of a base triangulation together
// with the diagonal <-> variable correspondence built by walking flips and
// mutations in lockstep.
class PolygonUniverse {
public:
    explicit PolygonUniverse(int ngon, const Triangulation& base);
    explicit PolygonUniverse(int ngon) : PolygonUniverse(ngon, Triangulation::fan(ngon)) {}

    int ngon() const { return ngon_; }
    const ExchangeGraph& graph() const { return graph_; }
    const Triangulation& base() const { return base_; }

    int varOfDiagonal(const Diagonal& d) const;
    Diagonal diagonalOfVar(int varId) const;
    const Triangulation& triangulationOfNode(int nodeId) const;
    std::optional<int> nodeOfTriangulation(const Triangulation& t) const;

    // The cluster automorphism induced by relabelling diagonals along h.
    Automorphism psiFromMcg(const DihedralElement& h, const AutGroup& G) const;

private:
    int ngon_;
    Triangulation base_;
    ExchangeGraph graph_;
    std::map<Diagonal, int> varOfDiag_;
    std::vector<Diagonal> diagOfVar_;
    std::vector<Triangulation> nodeTriangulations_;
    std::map<Triangulation, int> triToNode_;
};

struct McgIsoReport {
    int ngon = 0;
    int dihedralOrder = 0;
    int autOrder = 0;
    bool injective = false;
    bool homomorphism = false;
    bool surjective = false;
    bool pass() const { return injective && homomorphism && surjective; }
};

// Verifies h -> psi_h is an isomorphism from the dihedral group of order 2N
// onto the full cluster automorphism group.
McgIsoReport mcgIsoCheck(int ngon);

struct InvariantRegion {
    std::vector<Diagonal> fixedDiagonals;
    std::vector<std::vector<Diagonal>> maximalCompatibleSets;
    std::vector<SubalgebraHandle> regionSubalgebras;  // deduplicated, maximal
    bool matchesFixedAnalysis = false;
};

// Geometric route to the maximal H-fixed subalgebras: H-fixed diagonals,
// their maximal compatible subsets, and the sub-seeds they induce;
// cross-checked against fixedAnalysis.
InvariantRegion maximalInvariantRegion(const PolygonUniverse& poly,
                                       GaloisEngine& engine, const Subgroup& H);

} // namespace clusterkit
