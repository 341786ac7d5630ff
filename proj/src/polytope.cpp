#include "qtg/polytope.hpp"

#include "qtg/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace qtg {

namespace {

// Visits all k-subsets of {0..m-1} in lexicographic order.
template <typename Fn>
void for_each_combination(int m, int k, Fn&& fn) {
    if (k < 0 || k > m) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

bool ray_feasible(const HPolytope& p, const IntVector& d) {
    for (const Facet& f : p.facets())
        if (dot(f.normal, d) < 0) return false;
    return true;
}

// A nonzero recession direction, if one exists, spans an extreme ray of the
// recession cone and is therefore in the kernel of n-1 facet normals.
void scan_recession_rays(const HPolytope& p) {
    const int n = p.dim();
    const int m = static_cast<int>(p.facet_count());
    if (n == 1) {
        for (Int c : {Int(1), Int(-1)}) {
            IntVector d{c};
            if (ray_feasible(p, d))
                throw EmptyOrUnboundedError("polytope is unbounded (recession direction " +
                                            c.str() + ")");
        }
        return;
    }
    for_each_combination(m, n - 1, [&](const std::vector<int>& subset) {
        IntMatrix rows(n - 1, n);
        for (int i = 0; i < n - 1; ++i)
            for (int j = 0; j < n; ++j) rows.at(i, j) = p.facet(subset[i]).normal[j];
        IntVector d = kernel_direction(rows);
        if (is_zero_vector(d)) return;
        IntVector neg(d.size());
        for (std::size_t j = 0; j < d.size(); ++j) neg[j] = -d[j];
        if (ray_feasible(p, d) || ray_feasible(p, neg))
            throw EmptyOrUnboundedError("polytope is unbounded");
    });
}

} // namespace

HPolytope::HPolytope(int dim, std::vector<Facet> facets)
    : dim_(dim), facets_(std::move(facets)) {
    if (dim_ < 1)
        throw DimensionMismatchError("polytope dimension must be positive");
    if (facets_.size() < static_cast<std::size_t>(dim_) + 1)
        throw EmptyOrUnboundedError("a bounded polytope needs at least dim+1 facets");
    for (std::size_t i = 0; i < facets_.size(); ++i) {
        if (facets_[i].normal.size() != static_cast<std::size_t>(dim_))
            throw DimensionMismatchError("facet " + std::to_string(i) +
                                         ": normal length differs from dimension");
        if (is_zero_vector(facets_[i].normal))
            throw DimensionMismatchError("facet " + std::to_string(i) + ": zero normal");
    }
}

std::vector<Vertex> enumerate_vertices(const HPolytope& p) {
    const int n = p.dim();
    const int m = static_cast<int>(p.facet_count());

    std::map<QVector, std::vector<int>> found; // coords -> tight facets
    for_each_combination(m, n, [&](const std::vector<int>& subset) {
        IntMatrix a(n, n);
        QVector rhs(n);
        for (int i = 0; i < n; ++i) {
            const Facet& f = p.facet(subset[i]);
            for (int j = 0; j < n; ++j) a.at(i, j) = f.normal[j];
            rhs[i] = -f.offset;
        }
        if (det(a) == 0) return;
        QVector x = solve_rational(a, rhs);

        std::vector<int> tight;
        for (int i = 0; i < m; ++i) {
            Rat value = dot(p.facet(i).normal, x);
            if (value < -p.facet(i).offset) return; // infeasible candidate
            if (value == -p.facet(i).offset) tight.push_back(i);
        }
        if (tight.size() > static_cast<std::size_t>(n))
            throw NonSimplePolytopeError("vertex " + coords_to_string(x) + " lies on " +
                                         std::to_string(tight.size()) + " facets (expected " +
                                         std::to_string(n) + ")");
        found.emplace(std::move(x), std::move(tight));
    });

    if (found.empty())
        throw EmptyOrUnboundedError("polytope has no vertices");
    scan_recession_rays(p);

    std::vector<Vertex> out;
    out.reserve(found.size());
    for (auto& [coords, tight] : found)
        out.push_back(Vertex{coords, tight});
    return out;
}

std::vector<Edge> enumerate_edges(const HPolytope& p, const std::vector<Vertex>& vs) {
    const std::size_t n = static_cast<std::size_t>(p.dim());
    std::vector<Edge> edges;
    std::vector<int> degree(vs.size(), 0);
    for (std::size_t u = 0; u < vs.size(); ++u)
        for (std::size_t v = u + 1; v < vs.size(); ++v) {
            std::vector<int> common;
            std::set_intersection(vs[u].tight_facets.begin(), vs[u].tight_facets.end(),
                                  vs[v].tight_facets.begin(), vs[v].tight_facets.end(),
                                  std::back_inserter(common));
            if (common.size() != n - 1) continue;
            edges.push_back(Edge{static_cast<int>(u), static_cast<int>(v), std::move(common)});
            ++degree[u];
            ++degree[v];
        }
    for (std::size_t u = 0; u < vs.size(); ++u)
        if (degree[u] != p.dim())
            throw InconsistentLatticeError("vertex " + coords_to_string(vs[u].coords) + " has " +
                                           std::to_string(degree[u]) + " incident edges (expected " +
                                           std::to_string(p.dim()) + ")");
    if (2 * edges.size() != n * vs.size())
        throw InconsistentLatticeError("edge count inconsistent with a simple polytope");
    return edges;
}

FVector f_vector(const HPolytope& p, const std::vector<Vertex>& vs) {
    const int n = p.dim();
    FVector f(n);
    for (int k = 0; k < n; ++k) {
        // Faces of codimension k+1 are exactly the distinct (k+1)-subsets of
        // facets realized inside some vertex's tight set.
        std::set<std::vector<int>> faces;
        for (const Vertex& v : vs)
            for_each_combination(n, k + 1, [&](const std::vector<int>& pick) {
                std::vector<int> face(pick.size());
                for (std::size_t i = 0; i < pick.size(); ++i)
                    face[i] = v.tight_facets[pick[i]];
                faces.insert(std::move(face));
            });
        f[k] = static_cast<long long>(faces.size());
    }
    return f;
}

HVector h_vector(const FVector& f) {
    const int n = static_cast<int>(f.size());
    // p(t) = (t-1)^n + f_0 (t-1)^{n-1} + ... + f_{n-1}; h_k = coeff of t^{n-k}.
    std::vector<long long> poly(n + 1, 0);
    for (int j = 0; j <= n; ++j) {
        const long long lead = (j == 0) ? 1 : f[j - 1];
        const int d = n - j;
        long long binom = 1;
        for (int i = 0; i <= d; ++i) {
            long long sign = ((d - i) % 2 == 0) ? 1 : -1;
            poly[i] += lead * sign * binom;
            binom = binom * (d - i) / (i + 1);
        }
    }
    HVector h(n + 1);
    for (int k = 0; k <= n; ++k) h[k] = poly[n - k];
    if (h[0] != 1)
        throw InconsistentLatticeError("h-vector does not start with 1");
    for (int k = 0; k <= n; ++k)
        if (h[k] != h[n - k])
            throw InconsistentLatticeError("h-vector violates the Dehn-Sommerville symmetry");
    return h;
}

PolytopeData analyze(HPolytope p) {
    std::vector<Vertex> vertices = enumerate_vertices(p);
    std::vector<Edge> edges = enumerate_edges(p, vertices);
    std::vector<std::vector<int>> vertex_edges(vertices.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        vertex_edges[edges[e].u].push_back(static_cast<int>(e));
        vertex_edges[edges[e].v].push_back(static_cast<int>(e));
    }
    FVector f = f_vector(p, vertices);
    HVector h = h_vector(f);
    return PolytopeData{std::move(p), std::move(vertices), std::move(edges),
                        std::move(vertex_edges), std::move(f), std::move(h)};
}

VertexGeometry vertex_geometry(const PolytopeData& data, int vertex, int orientation) {
    if (orientation != 1 && orientation != -1)
        throw std::logic_error("orientation must be +1 or -1");
    const int n = data.poly.dim();
    const Vertex& v = data.vertices[vertex];

    // dropped facet of an incident edge -> direction toward the other endpoint
    std::map<int, QVector> dir_by_facet;
    for (int eid : data.vertex_edges[vertex]) {
        const Edge& e = data.edges[eid];
        std::vector<int> dropped;
        std::set_difference(v.tight_facets.begin(), v.tight_facets.end(),
                            e.common_facets.begin(), e.common_facets.end(),
                            std::back_inserter(dropped));
        if (dropped.size() != 1)
            throw InconsistentLatticeError("edge does not drop exactly one tight facet");
        const Vertex& other = data.vertices[e.u == vertex ? e.v : e.u];
        QVector dir(n);
        bool zero = true;
        for (int j = 0; j < n; ++j) {
            dir[j] = other.coords[j] - v.coords[j];
            if (dir[j] != 0) zero = false;
        }
        if (zero)
            throw DegenerateEdgeError("zero edge direction at vertex " +
                                      coords_to_string(v.coords));
        dir_by_facet.emplace(dropped[0], std::move(dir));
    }

    std::vector<int> ordered = v.tight_facets; // sorted ascending
    std::vector<QVector> dirs;
    dirs.reserve(n);
    for (int i : ordered) dirs.push_back(dir_by_facet.at(i));

    Rat d = det_rational(dirs);
    if (d == 0)
        throw DegenerateEdgeError("edge directions do not span at vertex " +
                                  coords_to_string(v.coords));
    int achieved = orientation * sign_of(d);
    if (achieved < 0 && n >= 2) {
        // The lexicographically smallest odd permutation of a sorted list
        // swaps its last two entries.
        std::swap(ordered[n - 2], ordered[n - 1]);
        std::swap(dirs[n - 2], dirs[n - 1]);
        achieved = 1;
    }
    return VertexGeometry{vertex, std::move(ordered), std::move(dirs), achieved};
}

std::string coords_to_string(const QVector& coords) {
    std::string out = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ", ";
        out += to_string(coords[i]);
    }
    out += ")";
    return out;
}

} // namespace qtg
