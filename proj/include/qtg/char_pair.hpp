#ifndef QTG_CHAR_PAIR_HPP
#define QTG_CHAR_PAIR_HPP

#include "qtg/linalg.hpp"
#include "qtg/polytope.hpp"
#include "qtg/rational.hpp"

#include <utility>
#include <vector>

namespace qtg {

/// The characteristic matrix of a quasitoric manifold over a simple polytope:
/// one signed primitive integer column per facet. A valid matrix has
/// determinant +-1 on the n columns meeting at each vertex.
class CharMatrix {
public:
    CharMatrix(int dim, std::vector<IntVector> columns);

    int dim() const { return dim_; }
    std::size_t facet_count() const { return columns_.size(); }
    const IntVector& column(std::size_t i) const { return columns_[i]; }
    const std::vector<IntVector>& columns() const { return columns_; }

    bool operator==(const CharMatrix&) const = default;

private:
    int dim_;
    std::vector<IntVector> columns_;
};

struct ValidationReport {
    std::vector<int> non_primitive_columns;
    std::vector<std::pair<int, Int>> non_unimodular_vertices; // vertex id, minor det

    bool ok() const {
        return non_primitive_columns.empty() && non_unimodular_vertices.empty();
    }
};

/// Checks column primitivity and the unimodularity of every vertex minor
/// (minor determinants taken in ascending facet order).
ValidationReport validate_characteristic(const PolytopeData& data, const CharMatrix& lambda);

/// Throws NonPrimitiveColumn / NonUnimodularAtVertex for a failed report.
void require_valid(const PolytopeData& data, const ValidationReport& report);

/// All local data the genus formulas need at one vertex.
///
/// lambda_minor holds the facet vectors at the vertex, columns in canonical
/// (orientation-induced) facet order. mu_matrix holds the edge vectors in the
/// same order; its k-th column pairs to 1 with the k-th facet vector and to 0
/// with the others, i.e. mu_matrix^T * lambda_minor = identity. sigma
/// compares the orientation spanned by the edge vectors against the ambient
/// orientation: it equals det(mu_matrix) whenever the canonical ordering
/// achieves a positively oriented geometric basis (geom_sign = +1; always for
/// n >= 2).
struct LocalFrame {
    int vertex;
    std::vector<int> ordered_facets;
    IntMatrix lambda_minor;
    IntMatrix mu_matrix;
    int sigma;
    int geom_sign;
};

LocalFrame local_frame(const VertexGeometry& geom, const CharMatrix& lambda);

/// Frames for every vertex, in vertex order.
std::vector<LocalFrame> build_frames(const PolytopeData& data, const CharMatrix& lambda,
                                     int orientation);

using NuVector = IntVector;

/// Circle-action weights at the vertex: <mu_k, nu> for each ordered edge
/// vector. Throws NonGenericNu when some pairing vanishes.
std::vector<Int> weights(const LocalFrame& frame, const NuVector& nu);

/// Number of negative weights at the vertex.
int index_mu(const LocalFrame& frame, const NuVector& nu);

/// Same index through the other route: the number of negative coefficients
/// of nu expanded in the basis of facet vectors at the vertex. Solved by
/// rational elimination, independently of the inverse used for mu_matrix.
int index_lambda(const LocalFrame& frame, const NuVector& nu);

bool is_generic(const std::vector<LocalFrame>& frames, const NuVector& nu);

/// Throws NonGenericNu naming the offending vertex/edge if nu pairs to zero
/// with any edge vector.
void require_generic(const std::vector<LocalFrame>& frames, const NuVector& nu);

/// Deterministic search for a generic direction: tries (1, N, N^2, ...) with
/// N = max(2, 1 + largest |mu entry|), increasing N until every pairing is
/// nonzero. The first candidate already works when N exceeds every entry, so
/// the loop terminates.
NuVector find_generic_nu(const std::vector<LocalFrame>& frames);

} // namespace qtg

#endif
