#include "qtg/char_pair.hpp"

#include "qtg/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qtg {

CharMatrix::CharMatrix(int dim, std::vector<IntVector> columns)
    : dim_(dim), columns_(std::move(columns)) {
    if (dim_ < 1)
        throw DimensionMismatchError("characteristic matrix dimension must be positive");
    for (std::size_t i = 0; i < columns_.size(); ++i)
        if (columns_[i].size() != static_cast<std::size_t>(dim_))
            throw DimensionMismatchError("characteristic column " + std::to_string(i) +
                                         " has length different from the dimension");
}

ValidationReport validate_characteristic(const PolytopeData& data, const CharMatrix& lambda) {
    if (lambda.facet_count() != data.poly.facet_count())
        throw DimensionMismatchError("characteristic matrix has " +
                                     std::to_string(lambda.facet_count()) +
                                     " columns but the polytope has " +
                                     std::to_string(data.poly.facet_count()) + " facets");
    ValidationReport report;
    for (std::size_t i = 0; i < lambda.facet_count(); ++i)
        if (gcd_of(lambda.column(i)) != 1)
            report.non_primitive_columns.push_back(static_cast<int>(i));

    for (std::size_t vid = 0; vid < data.vertices.size(); ++vid) {
        std::vector<IntVector> cols;
        for (int i : data.vertices[vid].tight_facets) cols.push_back(lambda.column(i));
        Int d = det(IntMatrix::from_columns(cols));
        if (d != 1 && d != -1)
            report.non_unimodular_vertices.emplace_back(static_cast<int>(vid), d);
    }
    return report;
}

void require_valid(const PolytopeData& data, const ValidationReport& report) {
    if (!report.non_primitive_columns.empty()) {
        int i = report.non_primitive_columns.front();
        throw NonPrimitiveColumnError(i, "characteristic column " + std::to_string(i) +
                                             " is not primitive");
    }
    if (!report.non_unimodular_vertices.empty()) {
        std::string msg = "characteristic minors are not unimodular at:";
        for (const auto& [vid, d] : report.non_unimodular_vertices)
            msg += " vertex " + coords_to_string(data.vertices[vid].coords) +
                   " (det = " + d.str() + ")";
        throw NonUnimodularAtVertexError(msg);
    }
}

LocalFrame local_frame(const VertexGeometry& geom, const CharMatrix& lambda) {
    std::vector<IntVector> cols;
    cols.reserve(geom.ordered_facets.size());
    for (int i : geom.ordered_facets) cols.push_back(lambda.column(i));
    IntMatrix lambda_minor = IntMatrix::from_columns(cols);

    // mu_k is row k of lambda_minor^{-1}: the unique choice of edge-vector
    // signs with mu_matrix^T * lambda_minor = identity.
    IntMatrix mu_matrix = unimodular_inverse(lambda_minor).transposed();

    Int d = det(mu_matrix);
    int sigma = geom.geom_sign * static_cast<int>(d);
    return LocalFrame{geom.vertex, geom.ordered_facets, std::move(lambda_minor),
                      std::move(mu_matrix), sigma, geom.geom_sign};
}

std::vector<LocalFrame> build_frames(const PolytopeData& data, const CharMatrix& lambda,
                                     int orientation) {
    std::vector<LocalFrame> frames;
    frames.reserve(data.vertices.size());
    for (std::size_t vid = 0; vid < data.vertices.size(); ++vid)
        frames.push_back(local_frame(vertex_geometry(data, static_cast<int>(vid), orientation),
                                     lambda));
    return frames;
}

std::vector<Int> weights(const LocalFrame& frame, const NuVector& nu) {
    const std::size_t n = frame.mu_matrix.rows();
    if (nu.size() != n)
        throw DimensionMismatchError("nu has wrong length");
    std::vector<Int> w(n);
    for (std::size_t k = 0; k < n; ++k) {
        w[k] = dot(frame.mu_matrix.column(k), nu);
        if (w[k] == 0)
            throw NonGenericNuError("nu is orthogonal to the edge opposite facet " +
                                    std::to_string(frame.ordered_facets[k]) + " at vertex " +
                                    std::to_string(frame.vertex));
    }
    return w;
}

int index_mu(const LocalFrame& frame, const NuVector& nu) {
    int count = 0;
    for (const Int& w : weights(frame, nu))
        if (w < 0) ++count;
    return count;
}

int index_lambda(const LocalFrame& frame, const NuVector& nu) {
    QVector rhs(nu.size());
    for (std::size_t i = 0; i < nu.size(); ++i) rhs[i] = Rat(nu[i]);
    QVector coeff = solve_rational(frame.lambda_minor, rhs);
    int count = 0;
    for (const Rat& c : coeff) {
        if (c == 0)
            throw NonGenericNuError("nu has a zero coefficient in the facet-vector basis at vertex " +
                                    std::to_string(frame.vertex));
        if (c < 0) ++count;
    }
    return count;
}

bool is_generic(const std::vector<LocalFrame>& frames, const NuVector& nu) {
    for (const LocalFrame& frame : frames)
        for (std::size_t k = 0; k < frame.mu_matrix.cols(); ++k)
            if (dot(frame.mu_matrix.column(k), nu) == 0) return false;
    return true;
}

void require_generic(const std::vector<LocalFrame>& frames, const NuVector& nu) {
    for (const LocalFrame& frame : frames) weights(frame, nu);
}

NuVector find_generic_nu(const std::vector<LocalFrame>& frames) {
    if (frames.empty())
        throw std::logic_error("find_generic_nu: no frames");
    const std::size_t n = frames.front().mu_matrix.rows();
    Int max_entry = 0;
    for (const LocalFrame& frame : frames)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Int a = boost::multiprecision::abs(frame.mu_matrix.at(i, j));
                if (a > max_entry) max_entry = a;
            }
    Int n_base = max_entry + 1;
    if (n_base < 2) n_base = 2;
    while (true) {
        NuVector nu(n);
        Int power = 1;
        for (std::size_t k = 0; k < n; ++k) {
            nu[k] = power;
            power *= n_base;
        }
        if (is_generic(frames, nu)) return nu;
        ++n_base;
    }
}

} // namespace qtg
