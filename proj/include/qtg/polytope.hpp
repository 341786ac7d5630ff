#ifndef QTG_POLYTOPE_HPP
#define QTG_POLYTOPE_HPP

#include "qtg/linalg.hpp"
#include "qtg/rational.hpp"

#include <string>
#include <vector>

namespace qtg {

/// One bounding half-space: the points x with <normal, x> >= -offset.
struct Facet {
    IntVector normal;
    Rat offset;

    bool operator==(const Facet&) const = default;
};

/// A convex polytope given by half-spaces. The constructor checks only the
/// structural invariants (consistent dimensions, nonzero normals, at least
/// dim+1 facets); boundedness, nonemptiness and simplicity are established
/// by enumerate_vertices.
class HPolytope {
public:
    HPolytope(int dim, std::vector<Facet> facets);

    int dim() const { return dim_; }
    std::size_t facet_count() const { return facets_.size(); }
    const Facet& facet(std::size_t i) const { return facets_[i]; }
    const std::vector<Facet>& facets() const { return facets_; }

    bool operator==(const HPolytope&) const = default;

private:
    int dim_;
    std::vector<Facet> facets_;
};

/// A vertex together with the n facets it lies on (sorted ascending).
struct Vertex {
    QVector coords;
    std::vector<int> tight_facets;
};

/// An edge: two vertex ids plus the n-1 facets containing the whole edge.
struct Edge {
    int u;
    int v;
    std::vector<int> common_facets;
};

/// f_k = number of faces of codimension k+1, for k = 0..n-1.
using FVector = std::vector<long long>;

/// h_0..h_n, defined by
///   h_0 t^n + ... + h_n = (t-1)^n + f_0 (t-1)^{n-1} + ... + f_{n-1}.
using HVector = std::vector<long long>;

/// Scans all n-subsets of facets with exact rational solves. Every vertex of
/// a simple polytope lies on exactly n facets; a candidate tight on more
/// raises NonSimplePolytope. Raises EmptyOrUnbounded when no vertex exists or
/// a recession direction survives the candidate-ray scan. Vertices come back
/// sorted by coordinates.
std::vector<Vertex> enumerate_vertices(const HPolytope& p);

/// Pairs of vertices sharing n-1 tight facets. Raises InconsistentLattice if
/// any vertex ends up with a number of incident edges different from n.
std::vector<Edge> enumerate_edges(const HPolytope& p, const std::vector<Vertex>& vs);

FVector f_vector(const HPolytope& p, const std::vector<Vertex>& vs);
HVector h_vector(const FVector& f);

/// Per-vertex geometric data. ordered_facets is a permutation of the tight
/// facets; outward_dirs[k] points along the unique incident edge not
/// contained in facet ordered_facets[k]. The permutation is the
/// lexicographically smallest one making
///   orientation * det(outward_dirs as columns) > 0.
/// geom_sign records the sign actually achieved: +1 whenever a positive
/// ordering exists, which is every case except one endpoint of a segment
/// (n = 1, where there is nothing to permute).
struct VertexGeometry {
    int vertex;
    std::vector<int> ordered_facets;
    std::vector<QVector> outward_dirs;
    int geom_sign;
};

/// Bundled combinatorics of a validated simple polytope.
struct PolytopeData {
    HPolytope poly;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> vertex_edges; // edge ids incident to each vertex
    FVector f;
    HVector h;
};

/// Runs the full validation pipeline: vertices, edges, face counts.
PolytopeData analyze(HPolytope p);

VertexGeometry vertex_geometry(const PolytopeData& data, int vertex, int orientation);

std::string coords_to_string(const QVector& coords);

} // namespace qtg

#endif
