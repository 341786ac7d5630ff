#include "qtg/toric.hpp"

#include "qtg/errors.hpp"

#include <stdexcept>
#include <string>

namespace qtg {

void require_integral(const PolytopeData& data) {
    for (const Vertex& v : data.vertices)
        for (const Rat& c : v.coords)
            if (!is_integer(c))
                throw NonIntegralPolytopeError("vertex " + coords_to_string(v.coords) +
                                               " is not a lattice point");
}

CharMatrix lambda_from_normals(const PolytopeData& data) {
    std::vector<IntVector> columns;
    columns.reserve(data.poly.facet_count());
    for (const Facet& f : data.poly.facets()) columns.push_back(make_primitive(f.normal));
    CharMatrix lambda(data.poly.dim(), std::move(columns));

    ValidationReport report = validate_characteristic(data, lambda);
    if (!report.non_unimodular_vertices.empty()) {
        std::string msg = "polytope is not smooth:";
        for (const auto& [vid, d] : report.non_unimodular_vertices)
            msg += " normals at vertex " + coords_to_string(data.vertices[vid].coords) +
                   " have det " + d.str();
        throw NonSmoothToricError(msg);
    }
    return lambda;
}

ToricReport toric_report(const PolytopeData& data, const std::optional<NuVector>& nu) {
    require_integral(data);
    CharMatrix lambda = lambda_from_normals(data);
    std::vector<LocalFrame> frames = build_frames(data, lambda, +1);

    for (const LocalFrame& frame : frames)
        if (frame.sigma != 1)
            throw std::logic_error("toric vertex sign differs from 1");

    ToricReport report;
    report.genus = genus_report(data, frames, nu);

    const int n = data.poly.dim();
    report.morse_counts.assign(n + 1, 0);
    for (const LocalFrame& frame : frames)
        ++report.morse_counts[index_mu(frame, report.genus.nu_used)];

    if (report.genus.todd != 1 || report.morse_counts[0] != 1)
        throw std::logic_error("toric report lost the unique bottom vertex");
    for (int k = 0; k <= n; ++k)
        if (report.morse_counts[k] != data.h[k])
            throw std::logic_error("toric index counts differ from the h-vector");
    return report;
}

} // namespace qtg
